#include "specmom/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace specmom {

using nlohmann::json;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

GroupSpec group_from_json(const json& j) {
    try {
        if (j.is_string()) return parse_group(j.get<std::string>());
        std::vector<std::uint32_t> moduli = j.at("moduli").get<std::vector<std::uint32_t>>();
        if (j.contains("ordering")) {
            const std::string o = j.at("ordering").get<std::string>();
            if (o == "msf") return GroupSpec(std::move(moduli), Ordering::MostSignificantFirst);
            if (o == "lsf") return GroupSpec(std::move(moduli), Ordering::LeastSignificantFirst);
            throw ParseError("ordering must be \"msf\" or \"lsf\"");
        }
        return GroupSpec(std::move(moduli));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad group description: ") + e.what());
    }
}

ordinal_t index_from_json(const GroupSpec& g, const json& j) {
    if (j.is_number_unsigned() || j.is_number_integer()) {
        const auto v = j.get<std::int64_t>();
        if (v < 0) throw ParseError("negative coefficient index");
        const ordinal_t ord = static_cast<ordinal_t>(v);
        g.require_valid(ord);
        return ord;
    }
    if (j.is_array()) {
        GroupIndex idx(j.get<std::vector<std::uint32_t>>());
        return g.encode(idx);
    }
    throw ParseError("coefficient index must be an integer or a digit tuple");
}

} // namespace

SparseSpectrum parse_spectrum_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    try {
        GroupSpec g = group_from_json(j);
        SparseSpectrum s(std::move(g));
        for (const json& c : j.at("coefficients")) {
            const ordinal_t ord = index_from_json(s.group, c.at("index"));
            const double re = c.value("re", 0.0);
            const double im = c.value("im", 0.0);
            if (s.entries.count(ord))
                throw ParseError("coefficient index " + std::to_string(ord) + " listed twice");
            s.set(ord, cplx{re, im});
        }
        return s;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad spectrum file: ") + e.what());
    }
}

SparseSpectrum read_spectrum_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_spectrum_json(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string spectrum_to_json(const SparseSpectrum& s) {
    json j;
    j["moduli"] = s.group.moduli();
    j["ordering"] = s.group.ordering() == Ordering::MostSignificantFirst ? "msf" : "lsf";
    json coeffs = json::array();
    for (const auto& [ord, c] : s.entries) {
        json entry;
        entry["index"] = ord;
        entry["re"] = c.real();
        entry["im"] = c.imag();
        coeffs.push_back(std::move(entry));
    }
    j["coefficients"] = std::move(coeffs);
    return j.dump(2) + "\n";
}

void write_spectrum_json(const std::string& path, const SparseSpectrum& s) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << spectrum_to_json(s);
}

DenseFunction read_function_csv(const std::string& path, std::optional<GroupSpec> group,
                                Side side) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");

    struct Row {
        ordinal_t ordinal;
        cplx value;
    };
    std::vector<Row> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (lineno == 1 && line.rfind("ordinal", 0) == 0) continue; // header
        std::istringstream ls(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() < 2 || cells.size() > 3)
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": expected 'ordinal,re[,im]'");
        try {
            Row r;
            r.ordinal = std::stoull(cells[0]);
            const double re = std::stod(cells[1]);
            const double im = cells.size() == 3 ? std::stod(cells[2]) : 0.0;
            r.value = cplx{re, im};
            rows.push_back(r);
        } catch (const std::exception&) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": bad number");
        }
    }
    if (rows.empty()) throw ParseError(path + ": no data rows");

    GroupSpec g = group ? *group
                        : GroupSpec({static_cast<std::uint32_t>(rows.size())});
    if (rows.size() != g.cardinality())
        throw GroupMismatchError(path + ": " + std::to_string(rows.size()) +
                                 " rows for a group of order " +
                                 std::to_string(g.cardinality()));
    DenseFunction f(std::move(g), side);
    std::vector<bool> seen(f.size(), false);
    for (const Row& r : rows) {
        f.group.require_valid(r.ordinal);
        if (seen[r.ordinal])
            throw ParseError(path + ": ordinal " + std::to_string(r.ordinal) + " repeated");
        seen[r.ordinal] = true;
        f.values[r.ordinal] = r.value;
    }
    return f;
}

void write_function_csv(const std::string& path, const DenseFunction& f) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << "ordinal,re,im\n";
    char buf[96];
    for (ordinal_t i = 0; i < f.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%llu,%.17g,%.17g\n",
                      static_cast<unsigned long long>(i), f.values[i].real(),
                      f.values[i].imag());
        out << buf;
    }
}

GraphBetSpec read_graph_json(const std::string& path) {
    const json j = load_json(path);
    try {
        GraphBetSpec spec;
        spec.n = j.at("n").get<int>();
        if (j.contains("vertex_effects"))
            spec.vertex_effects = j.at("vertex_effects").get<std::vector<double>>();
        else
            spec.vertex_effects.assign(static_cast<std::size_t>(spec.n),
                                       j.value("vertex_effect", 0.0));
        for (const json& e : j.value("edges", json::array())) {
            const int u = e.at("u").get<int>();
            const int v = e.at("v").get<int>();
            const auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
            if (spec.edge_weights.count(key))
                throw ParseError("edge listed twice in '" + path + "'");
            spec.edge_weights[key] = e.at("w").get<double>();
        }
        for (const json& h : j.value("hyperedges", json::array())) {
            const auto labels = h.at("set").get<std::vector<int>>();
            std::set<int> key(labels.begin(), labels.end());
            if (key.size() != labels.size() || spec.hyperedges.count(key))
                throw ParseError("bad or duplicate hyperedge in '" + path + "'");
            spec.hyperedges[key] = h.at("w").get<double>();
        }
        return spec;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

FeasibilityInput read_feasibility_json(const std::string& path) {
    const json j = load_json(path);
    try {
        FeasibilityInput in{group_from_json(j.at("group")), {}, {}, {}, CenterMode::Central};
        for (const json& e : j.at("entries")) {
            const ordinal_t ord = index_from_json(in.group, e.at("index"));
            in.magnitudes[ord] = e.at("magnitude").get<double>();
            in.phases[ord] = e.at("phase").get<double>();
        }
        for (const json& t : j.at("targets")) {
            const int order = t.at("order").get<int>();
            in.targets[order] = cplx{t.value("re", 0.0), t.value("im", 0.0)};
        }
        const std::string mode = j.value("mode", "central");
        if (mode == "raw")
            in.mode = CenterMode::Raw;
        else if (mode == "central")
            in.mode = CenterMode::Central;
        else
            throw ParseError("mode must be \"raw\" or \"central\"");
        return in;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_table_csv(std::ostream& os, const SubtractionTable& table) {
    const ordinal_t n = table.group().cardinality();
    for (ordinal_t i = 0; i < n; ++i) {
        for (ordinal_t j = 0; j < n; ++j) {
            if (j) os << ',';
            os << table.entry(i, j);
        }
        os << '\n';
    }
}

std::string format_double(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v + 0.0); // normalize -0
    std::string s{buf};
    if (s == "-0." + std::string(static_cast<std::size_t>(decimals), '0'))
        s.erase(s.begin());
    return s;
}

namespace {

std::string format_cplx(cplx z, int decimals = 4) {
    if (std::abs(z.imag()) < 5e-10) return format_double(z.real(), decimals);
    return format_double(z.real(), decimals) + (z.imag() < 0 ? " - " : " + ") +
           format_double(std::abs(z.imag()), decimals) + "i";
}

} // namespace

std::string moment_report_text(const MomentReport& rep) {
    std::ostringstream os;
    os << "statistics\n";
    os << "  mean        " << format_cplx(rep.mean) << "\n";
    os << "  variance    " << format_double(rep.variance) << "\n";
    os << "  std dev     " << format_double(std::sqrt(rep.variance)) << "\n";
    for (int m = 2; m <= rep.max_order; ++m)
        os << "  mu_" << m << "        " << format_cplx(rep.central_moment(m)) << "\n";
    auto line = [&](const char* name, const std::optional<double>& v) {
        os << "  " << name;
        if (v)
            os << format_double(*v) << "\n";
        else
            os << "undefined\n";
    };
    line("skewness    ", rep.skewness);
    line("kurtosis    ", rep.kurtosis);
    if (rep.max_order >= 5) line("hyperskew   ", rep.hyperskewness);
    if (rep.max_order >= 6) line("hyperkurt   ", rep.hyperkurtosis);
    if (rep.center) {
        os << "  center      " << format_cplx(*rep.center) << "\n";
        for (int m = 1; m <= rep.max_order; ++m)
            os << "  mu_" << m << "^(a)    "
               << format_cplx(rep.general.at(static_cast<std::size_t>(m) - 1)) << "\n";
    }
    return os.str();
}

std::string moment_report_json(const MomentReport& rep) {
    json j;
    j["mean"] = {{"re", rep.mean.real()}, {"im", rep.mean.imag()}};
    j["variance"] = rep.variance;
    j["real_valued"] = rep.real_valued;
    j["max_order"] = rep.max_order;
    auto dump_list = [](const std::vector<cplx>& v, int first_order) {
        json arr = json::array();
        int m = first_order;
        for (const cplx& z : v) {
            arr.push_back({{"order", m}, {"re", z.real()}, {"im", z.imag()}});
            ++m;
        }
        return arr;
    };
    j["raw"] = dump_list(rep.raw, 1);
    j["central"] = dump_list(rep.central, 2);
    if (rep.center) {
        j["center"] = {{"re", rep.center->real()}, {"im", rep.center->imag()}};
        j["general"] = dump_list(rep.general, 1);
    }
    json st;
    auto put = [&](const char* name, const std::optional<double>& v) {
        if (v)
            st[name] = *v;
        else
            st[name] = nullptr;
    };
    put("skewness", rep.skewness);
    put("kurtosis", rep.kurtosis);
    put("hyperskewness", rep.hyperskewness);
    put("hyperkurtosis", rep.hyperkurtosis);
    j["standardized"] = std::move(st);
    return j.dump(2) + "\n";
}

std::string symbolic_to_json(const SymbolicMoment& sym) {
    json j;
    j["group"] = sym.group.to_string();
    j["order"] = sym.order;
    j["mode"] = sym.mode == CenterMode::Raw ? "raw" : "central";
    json terms = json::array();
    for (const Term& t : sym.terms) {
        json jt;
        jt["indices"] = t.indices;
        jt["multiplicity"] = t.multiplicity;
        terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);
    j["term_count"] = sym.terms.size();
    return j.dump(2) + "\n";
}

std::string histogram_csv(const DenseFunction& f) {
    // group values at 1e-9 resolution
    std::map<long long, std::size_t> bins;
    for (const cplx& z : f.values) bins[std::llround(z.real() * 1e9)]++;
    std::ostringstream os;
    os << "value,count\n";
    for (const auto& [key, count] : bins)
        os << format_double(static_cast<double>(key) / 1e9, 4) << ',' << count << '\n';
    return os.str();
}

} // namespace specmom
