// specmom: statistics of functions on finite abelian groups from their
// Fourier coefficients. See README.md for file formats and examples.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "specmom/convolution.hpp"
#include "specmom/io.hpp"
#include "specmom/kernels.hpp"
#include "specmom/models.hpp"
#include "specmom/moments.hpp"
#include "specmom/symbolic.hpp"
#include "specmom/timeseries.hpp"
#include "specmom/transform.hpp"

using namespace specmom;

namespace {

std::uint64_t env_guard(const char* name, std::uint64_t fallback) {
    if (const char* v = std::getenv(name)) {
        try {
            return std::stoull(v);
        } catch (const std::exception&) {
            throw ParseError(std::string(name) + " is not a number");
        }
    }
    return fallback;
}

cplx parse_complex(std::string text) {
    text.erase(std::remove(text.begin(), text.end(), ' '), text.end());
    if (text.empty()) throw ParseError("empty complex literal");
    // split into real and imaginary pieces at the last +/- that is not an
    // exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t i = text.size(); i-- > 1;) {
        const char c = text[i];
        if ((c == '+' || c == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    try {
        if (text.back() == 'i' || text.back() == 'j') {
            std::string re = "0", im;
            if (split == std::string::npos) {
                im = text.substr(0, text.size() - 1);
            } else {
                re = text.substr(0, split);
                im = text.substr(split, text.size() - split - 1);
            }
            if (im.empty() || im == "+" || im == "-") im += "1";
            return cplx{std::stod(re), std::stod(im)};
        }
        return cplx{std::stod(text), 0.0};
    } catch (const std::exception&) {
        throw ParseError("bad complex literal '" + text + "'");
    }
}

GroupIndex parse_lag(const GroupSpec& g, const std::string& text) {
    if (text.find(',') != std::string::npos) {
        std::vector<std::uint32_t> digits;
        std::istringstream is(text);
        std::string cell;
        while (std::getline(is, cell, ','))
            digits.push_back(static_cast<std::uint32_t>(std::stoul(cell)));
        GroupIndex idx(std::move(digits));
        g.require_valid(idx);
        return idx;
    }
    const ordinal_t ord = std::stoull(text);
    return g.decode(ord);
}

LagVector parse_lags(const GroupSpec& g, const std::string& text) {
    LagVector lv;
    std::istringstream is(text);
    std::string piece;
    while (std::getline(is, piece, ';')) {
        if (piece.empty()) continue;
        try {
            lv.lags.push_back(parse_lag(g, piece));
        } catch (const std::exception&) {
            throw ParseError("bad lag '" + piece + "'");
        }
    }
    return lv;
}

DenseFunction load_spectrum_dense(const std::string& spectrum_path,
                                  const std::string& function_path,
                                  const std::string& group_text) {
    if (!spectrum_path.empty()) return to_dense(read_spectrum_json(spectrum_path));
    std::optional<GroupSpec> g;
    if (!group_text.empty()) g = parse_group(group_text);
    const DenseFunction f = read_function_csv(function_path, g, Side::Primal);
    return dft(f);
}

void write_text(const std::string& path, const std::string& body) {
    if (path.empty() || path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << body;
}

// ---------------------------------------------------------------------------
// verify: randomized dual-route harness
// ---------------------------------------------------------------------------

struct VerifyStats {
    double worst = 0.0;
    std::string worst_case;
    std::size_t cases = 0;

    void feed(double dev, const std::string& label) {
        ++cases;
        if (dev > worst) {
            worst = dev;
            worst_case = label;
        }
    }
};

double rel_dev(cplx a, cplx b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

GroupSpec random_group(std::mt19937_64& rng, ordinal_t max_card) {
    std::uniform_int_distribution<int> rank_d(1, 3);
    std::uniform_int_distribution<std::uint32_t> mod_d(2, 8);
    for (;;) {
        const int rank = rank_d(rng);
        std::vector<std::uint32_t> moduli;
        ordinal_t card = 1;
        for (int l = 0; l < rank; ++l) {
            const std::uint32_t m = mod_d(rng);
            moduli.push_back(m);
            card *= m;
        }
        if (card <= max_card) return GroupSpec(std::move(moduli));
    }
}

SparseSpectrum random_spectrum(std::mt19937_64& rng, const GroupSpec& g, double density) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> val(0.0, 1.0);
    SparseSpectrum s(g);
    for (ordinal_t j = 0; j < g.cardinality(); ++j)
        if (unit(rng) < density) s.set(j, cplx{val(rng), val(rng)});
    if (s.entries.empty()) s.set(0, cplx{val(rng), 0.0});
    return s;
}

int run_verify(std::uint64_t seed, int cases, ordinal_t max_card, int max_order,
               bool inject_fault) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> val(0.0, 1.0);
    const double tol = 1e-9;
    bool ok = true;

    // direct vs Fourier moments (+ split independence, autoconvolution routes)
    VerifyStats mom, split, aconv;
    for (int c = 0; c < cases; ++c) {
        const GroupSpec g = random_group(rng, max_card);
        SparseSpectrum s = random_spectrum(rng, g, unit(rng) < 0.5 ? 0.2 : 0.9);
        DenseFunction fhat = to_dense(s);
        const DenseFunction f = idft(fhat);
        std::uniform_int_distribution<int> m_d(0, max_order);
        int m = m_d(rng);
        cplx a{0.0, 0.0};
        const double pick = unit(rng);
        if (pick < 0.4)
            a = fhat.values[0];
        else if (pick < 0.7)
            a = cplx{val(rng), val(rng)};

        if (inject_fault && c == cases / 2) {
            // a raw second moment always contains the perturbed square
            m = 2;
            a = cplx{0.0, 0.0};
            fhat.values[0] += cplx{1e-3, 0.0};
        }

        const std::string label = "group " + g.to_string() + ", m=" + std::to_string(m);
        const cplx direct = direct_general_moment(f, MomentCenter{a}, m);
        const cplx fourier = fourier_general_moment(fhat, MomentCenter{a}, m);
        mom.feed(rel_dev(direct, fourier), label);

        if (m >= 2) {
            std::uniform_int_distribution<int> p_d(0, m);
            const int p1 = p_d(rng), p2 = p_d(rng);
            const cplx v1 = fourier_general_moment(fhat, MomentCenter{a}, m, p1);
            const cplx v2 = fourier_general_moment(fhat, MomentCenter{a}, m, p2);
            split.feed(rel_dev(v1, v2), label);
        }

        std::uniform_int_distribution<int> k_d(0, 4);
        const int k = k_d(rng);
        const DenseFunction r1 = autoconvolve(fhat, k, AutoconvStrategy::Recursive);
        const DenseFunction r2 = autoconvolve(fhat, k, AutoconvStrategy::RoundTrip);
        double worst = 0.0;
        for (ordinal_t j = 0; j < r1.size(); ++j)
            worst = std::max(worst, rel_dev(r1.values[j], r2.values[j]));
        aconv.feed(worst, label + ", k=" + std::to_string(k));
    }

    // symbolic enumeration vs numeric engine
    VerifyStats sym;
    const int sym_cases = std::max(cases / 4, 8);
    for (int c = 0; c < sym_cases; ++c) {
        const GroupSpec g = random_group(rng, std::min<ordinal_t>(max_card, 24));
        const SparseSpectrum s = random_spectrum(rng, g, 0.5);
        std::uniform_int_distribution<int> m_d(1, std::min(max_order, 4));
        const int m = m_d(rng);
        const auto mode = unit(rng) < 0.5 ? CenterMode::Raw : CenterMode::Central;
        const cplx a = mode == CenterMode::Raw ? cplx{0.0, 0.0} : s.at(0);
        const cplx numeric = fourier_general_moment(to_dense(s), MomentCenter{a}, m);
        const cplx symbolic =
            evaluate(annihilating_terms(g, m, mode, s.support()), s, MomentCenter{a});
        sym.feed(rel_dev(numeric, symbolic),
                 "group " + g.to_string() + ", m=" + std::to_string(m));
    }

    // lagged moments, both routes
    VerifyStats lag;
    const int lag_cases = std::max(cases / 2, 16);
    for (int c = 0; c < lag_cases; ++c) {
        const GroupSpec g = random_group(rng, max_card);
        const SparseSpectrum s = random_spectrum(rng, g, 0.3);
        const DenseFunction f = idft(to_dense(s));
        std::uniform_int_distribution<int> m_d(1, std::min(max_order, 4));
        std::uniform_int_distribution<ordinal_t> j_d(0, g.cardinality() - 1);
        LagVector lv;
        const int m = m_d(rng);
        for (int q = 1; q < m; ++q) lv.lags.push_back(g.decode(j_d(rng)));
        const cplx direct = lagged_moment(f, lv);
        const cplx fourier = lagged_moment_fourier(s, lv);
        lag.feed(rel_dev(direct, fourier),
                 "group " + g.to_string() + ", m=" + std::to_string(m));
    }

    auto report = [&](const char* name, const VerifyStats& st) {
        const bool pass = st.worst <= tol;
        ok = ok && pass;
        std::cout << (pass ? "ok   " : "FAIL ") << name << ": max deviation "
                  << st.worst << " over " << st.cases << " cases";
        if (!pass) std::cout << "  (worst: " << st.worst_case << ")";
        std::cout << "\n";
    };
    report("direct-vs-fourier moments", mom);
    report("split independence", split);
    report("autoconvolution routes", aconv);
    report("symbolic-vs-numeric", sym);
    report("lagged dual-path", lag);
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv) {
    CLI::App app{"statistics of multi-factor functions from their Fourier transform"};
    app.require_subcommand(1);

    const std::uint64_t table_guard = env_guard("SPECMOM_MAX_TABLE", kDefaultTableGuard);
    const std::uint64_t node_guard = env_guard("SPECMOM_MAX_TERMS", kDefaultNodeGuard);
    const std::uint64_t lag_guard = env_guard("SPECMOM_MAX_LAGTERMS", kDefaultLagTermGuard);

    std::string simd;
    app.add_option("--simd", simd, "kernel backend: auto|scalar|avx2");

    // --- dft / idft ---
    auto* c_dft = app.add_subcommand("dft", "forward transform of a function CSV");
    std::string dft_in, dft_group, dft_out;
    double dft_threshold = 0.0;
    c_dft->add_option("--function", dft_in, "input function CSV")->required();
    c_dft->add_option("--group", dft_group, "group shorthand, e.g. 3x2 or 2^13");
    c_dft->add_option("--out", dft_out, "output spectrum (.json) or function (.csv)")
        ->required();
    c_dft->add_option("--threshold", dft_threshold,
                      "drop coefficients with magnitude <= threshold (json out)");

    auto* c_idft = app.add_subcommand("idft", "inverse transform of a spectrum");
    std::string idft_in, idft_out;
    c_idft->add_option("--spectrum", idft_in, "input spectrum JSON")->required();
    c_idft->add_option("--out", idft_out, "output function CSV (default stdout)");

    // --- moments ---
    auto* c_mom = app.add_subcommand("moments", "moment report from a spectrum or function");
    std::string mom_spec, mom_fn, mom_group, mom_center = "central", mom_format = "text",
                mom_out;
    int mom_order = 4, mom_contrib = 0;
    c_mom->add_option("--spectrum", mom_spec, "input spectrum JSON");
    c_mom->add_option("--function", mom_fn, "input function CSV");
    c_mom->add_option("--group", mom_group, "group for CSV input");
    c_mom->add_option("--max-order", mom_order, "highest moment order (default 4)");
    c_mom->add_option("--center", mom_center, "raw|central|a=<complex>");
    c_mom->add_option("--contributions", mom_contrib,
                      "also list per-term contributions to the central moment of this order");
    c_mom->add_option("--format", mom_format, "text|json");
    c_mom->add_option("--out", mom_out, "output path (default stdout)");

    // --- expand ---
    auto* c_exp = app.add_subcommand("expand", "symbolic annihilating-term expansion");
    std::string exp_group, exp_mode = "raw", exp_notation = "decimal", exp_support,
                exp_format = "text", exp_out;
    int exp_order = 0;
    c_exp->add_option("--group", exp_group, "group shorthand")->required();
    c_exp->add_option("--order", exp_order, "moment order m")->required();
    c_exp->add_option("--mode", exp_mode, "raw|central");
    c_exp->add_option("--support", exp_support, "spectrum JSON restricting the indices");
    c_exp->add_option("--notation", exp_notation, "decimal|binary|set");
    c_exp->add_option("--format", exp_format, "text|json");
    c_exp->add_option("--out", exp_out, "output path (default stdout)");

    // --- design ---
    auto* c_des = app.add_subcommand("design", "spectrum and payoffs of a bet design");
    std::string des_graph, des_prefix;
    int des_complete = 0;
    double des_d = -1.0, des_a = 0.0;
    int des_order = 4;
    c_des->add_option("--graph", des_graph, "graph design JSON");
    c_des->add_option("--complete", des_complete, "complete graph on N vertices");
    c_des->add_option("--d", des_d, "vertex effect (default -1)");
    c_des->add_option("--a", des_a, "edge bet size; edges get weight -a (default 0)");
    c_des->add_option("--max-order", des_order, "report order (default 4)");
    c_des->add_option("--out-prefix", des_prefix,
                      "write <prefix>.spectrum.json/.payoff.csv/.histogram.csv");

    // --- lagged ---
    auto* c_lag = app.add_subcommand("lagged", "lagged higher-order moment");
    std::string lag_fn, lag_spec, lag_group, lag_lags, lag_via = "direct";
    c_lag->add_option("--function", lag_fn, "input function CSV");
    c_lag->add_option("--spectrum", lag_spec, "input spectrum JSON");
    c_lag->add_option("--group", lag_group, "group for CSV input");
    c_lag->add_option("--lags", lag_lags, "lags: 'i1;i2;...', ordinals or comma tuples")
        ->required();
    c_lag->add_option("--via", lag_via, "direct|fourier|both");

    // --- table ---
    auto* c_tab = app.add_subcommand("table", "subtraction table of a group");
    std::string tab_group, tab_out;
    bool tab_csv = false;
    c_tab->add_option("--group", tab_group, "group shorthand")->required();
    c_tab->add_flag("--csv", tab_csv, "CSV output (also implied by --out)");
    c_tab->add_option("--out", tab_out, "output path (default stdout)");

    // --- convolve / autoconv ---
    auto* c_conv = app.add_subcommand("convolve", "circular convolution of two functions");
    std::string conv_a, conv_b, conv_group, conv_out, conv_side = "primal";
    c_conv->add_option("--a", conv_a, "first function CSV")->required();
    c_conv->add_option("--b", conv_b, "second function CSV")->required();
    c_conv->add_option("--group", conv_group, "group shorthand");
    c_conv->add_option("--side", conv_side, "primal|fourier");
    c_conv->add_option("--out", conv_out, "output CSV (default stdout)");

    auto* c_ac = app.add_subcommand("autoconv", "m-fold self-convolution");
    std::string ac_fn, ac_spec, ac_group, ac_out, ac_strategy = "auto";
    int ac_m = 0;
    c_ac->add_option("--function", ac_fn, "input function CSV");
    c_ac->add_option("--spectrum", ac_spec, "input spectrum JSON");
    c_ac->add_option("--group", ac_group, "group for CSV input");
    c_ac->add_option("--m", ac_m, "number of copies")->required();
    c_ac->add_option("--strategy", ac_strategy, "auto|recursive|roundtrip");
    c_ac->add_option("--out", ac_out, "output CSV (default stdout)");

    // --- feasibility ---
    auto* c_feas = app.add_subcommand("feasibility",
                                      "phase-feasibility residuals for target moments");
    std::string feas_in, feas_format = "text", feas_out;
    int feas_top = 8;
    c_feas->add_option("--input", feas_in, "feasibility JSON")->required();
    c_feas->add_option("--format", feas_format, "text|json");
    c_feas->add_option("--top", feas_top, "contributions to list per order (text)");
    c_feas->add_option("--out", feas_out, "output path (default stdout)");

    // --- verify ---
    auto* c_ver = app.add_subcommand("verify", "randomized dual-route oracle harness");
    std::uint64_t ver_seed = 1;
    int ver_cases = 200, ver_order = 5;
    ordinal_t ver_card = 128;
    bool ver_fault = false;
    c_ver->add_option("--seed", ver_seed, "rng seed (default 1)");
    c_ver->add_option("--cases", ver_cases, "number of random cases (default 200)");
    c_ver->add_option("--max-card", ver_card, "largest |G| (default 128)");
    c_ver->add_option("--max-order", ver_order, "largest moment order (default 5)");
    c_ver->add_flag("--inject-fault", ver_fault, "perturb one coefficient (self-test)");

    CLI11_PARSE(app, argc, argv);

    if (!simd.empty() && !kernels::force_backend(simd))
        throw ParseError("kernel backend '" + simd + "' is not available");

    if (*c_dft) {
        std::optional<GroupSpec> g;
        if (!dft_group.empty()) g = parse_group(dft_group);
        const DenseFunction f = read_function_csv(dft_in, g, Side::Primal);
        const DenseFunction fhat = dft(f);
        if (dft_out.size() >= 4 && dft_out.substr(dft_out.size() - 4) == ".csv")
            write_function_csv(dft_out, fhat);
        else
            write_spectrum_json(dft_out, to_sparse(fhat, dft_threshold));
        return 0;
    }

    if (*c_idft) {
        const DenseFunction f = idft(to_dense(read_spectrum_json(idft_in)));
        if (idft_out.empty()) {
            std::ostringstream os;
            os << "ordinal,re,im\n";
            for (ordinal_t i = 0; i < f.size(); ++i)
                os << i << ',' << format_double(f.values[i].real(), 10) << ','
                   << format_double(f.values[i].imag(), 10) << '\n';
            std::cout << os.str();
        } else {
            write_function_csv(idft_out, f);
        }
        return 0;
    }

    if (*c_mom) {
        if (mom_spec.empty() == mom_fn.empty())
            throw ParseError("give exactly one of --spectrum / --function");
        const DenseFunction fhat = load_spectrum_dense(mom_spec, mom_fn, mom_group);
        std::optional<cplx> center;
        if (mom_center.rfind("a=", 0) == 0)
            center = parse_complex(mom_center.substr(2));
        else if (mom_center != "raw" && mom_center != "central")
            throw ParseError("--center must be raw, central, or a=<complex>");
        const MomentReport rep = moment_report(fhat, mom_order, center);
        std::string body =
            mom_format == "json" ? moment_report_json(rep) : moment_report_text(rep);
        if (mom_contrib >= 2) {
            const SparseSpectrum s = to_sparse(fhat, 0.0);
            const SymbolicMoment sym =
                annihilating_terms(s.group, mom_contrib, CenterMode::Central, s.support(),
                                   node_guard);
            const std::vector<cplx> contrib = evaluate_terms(sym, s);
            cplx total{};
            for (const cplx& v : contrib) total += v;
            std::vector<std::size_t> order_by(contrib.size());
            for (std::size_t i = 0; i < order_by.size(); ++i) order_by[i] = i;
            std::sort(order_by.begin(), order_by.end(), [&](std::size_t a, std::size_t b) {
                return std::abs(contrib[a]) > std::abs(contrib[b]);
            });
            std::ostringstream os;
            os << "contributions to mu_" << mom_contrib << " ("
               << format_double(total.real(), 4) << "):\n";
            for (std::size_t i : order_by) {
                const Term& t = sym.terms[i];
                os << "  " << t.multiplicity << " x {";
                for (std::size_t q = 0; q < t.indices.size(); ++q)
                    os << (q ? "," : "") << t.indices[q];
                os << "}: " << format_double(contrib[i].real(), 4) << "  ("
                   << format_double(std::abs(total) > 0 ? contrib[i].real() / total.real() : 0.0,
                                    4)
                   << ")\n";
            }
            body += os.str();
        }
        write_text(mom_out, body);
        return 0;
    }

    if (*c_exp) {
        const GroupSpec g = parse_group(exp_group);
        const CenterMode mode = exp_mode == "central" ? CenterMode::Central
                                : exp_mode == "raw"
                                    ? CenterMode::Raw
                                    : throw ParseError("--mode must be raw or central");
        std::optional<std::vector<ordinal_t>> support;
        if (!exp_support.empty()) {
            const SparseSpectrum s = read_spectrum_json(exp_support);
            require_same_group(g, s.group);
            support = s.support();
        }
        const SymbolicMoment sym = annihilating_terms(g, exp_order, mode, support, node_guard);
        if (exp_format == "json") {
            write_text(exp_out, symbolic_to_json(sym));
        } else {
            const Notation notation = exp_notation == "binary" ? Notation::Binary
                                      : exp_notation == "set"  ? Notation::Set
                                                               : Notation::Decimal;
            std::ostringstream os;
            os << "mu";
            os << (mode == CenterMode::Raw ? "'" : "");
            os << "_" << exp_order << " on " << g.to_string() << ": " << sym.terms.size()
               << " terms\n";
            os << render(sym, notation) << "\n";
            write_text(exp_out, os.str());
        }
        return 0;
    }

    if (*c_des) {
        GraphBetSpec spec;
        if (!des_graph.empty())
            spec = read_graph_json(des_graph);
        else if (des_complete > 0)
            spec = GraphBetSpec::complete(des_complete, des_d, -des_a);
        else
            throw ParseError("give --graph or --complete");
        const SparseSpectrum s = graph_spectrum(spec);
        const DenseFunction payoff = idft(to_dense(s));
        const MomentReport rep = moment_report(to_dense(s), des_order);
        if (!des_prefix.empty()) {
            write_spectrum_json(des_prefix + ".spectrum.json", s);
            write_function_csv(des_prefix + ".payoff.csv", payoff);
            write_text(des_prefix + ".histogram.csv", histogram_csv(payoff));
            write_text(des_prefix + ".report.json", moment_report_json(rep));
        }
        std::cout << "payoffs:";
        for (ordinal_t i = 0; i < payoff.size() && i < 32; ++i)
            std::cout << ' ' << format_double(payoff.values[i].real(), 4);
        if (payoff.size() > 32) std::cout << " ...";
        std::cout << "\n" << moment_report_text(rep);
        return 0;
    }

    if (*c_lag) {
        if (lag_fn.empty() == lag_spec.empty())
            throw ParseError("give exactly one of --function / --spectrum");
        std::optional<GroupSpec> g;
        if (!lag_group.empty()) g = parse_group(lag_group);
        DenseFunction f = lag_fn.empty()
                              ? idft(to_dense(read_spectrum_json(lag_spec)))
                              : read_function_csv(lag_fn, g, Side::Primal);
        const LagVector lv = parse_lags(f.group, lag_lags);
        std::ostringstream os;
        if (lag_via == "direct" || lag_via == "both") {
            const cplx r = lagged_moment(f, lv);
            os << "direct  " << format_double(r.real(), 10) << " "
               << format_double(r.imag(), 10) << "i\n";
        }
        if (lag_via == "fourier" || lag_via == "both") {
            const cplx r = lagged_moment_fourier(dft(f), lv, lag_guard);
            os << "fourier " << format_double(r.real(), 10) << " "
               << format_double(r.imag(), 10) << "i\n";
        }
        std::cout << os.str();
        return 0;
    }

    if (*c_tab) {
        const GroupSpec g = parse_group(tab_group);
        const SubtractionTable t = subtraction_table(g, table_guard);
        std::ostringstream os;
        write_table_csv(os, t);
        write_text(tab_out, os.str());
        (void)tab_csv;
        return 0;
    }

    if (*c_conv) {
        std::optional<GroupSpec> g;
        if (!conv_group.empty()) g = parse_group(conv_group);
        const Side side = conv_side == "fourier" ? Side::Fourier : Side::Primal;
        const DenseFunction a = read_function_csv(conv_a, g, side);
        const DenseFunction b = read_function_csv(conv_b, a.group, side);
        const DenseFunction r = convolve(a, b);
        if (conv_out.empty()) {
            std::cout << "ordinal,re,im\n";
            for (ordinal_t i = 0; i < r.size(); ++i)
                std::cout << i << ',' << format_double(r.values[i].real(), 10) << ','
                          << format_double(r.values[i].imag(), 10) << '\n';
        } else {
            write_function_csv(conv_out, r);
        }
        return 0;
    }

    if (*c_ac) {
        if (ac_fn.empty() == ac_spec.empty())
            throw ParseError("give exactly one of --function / --spectrum");
        AutoconvStrategy strategy = AutoconvStrategy::Auto;
        if (ac_strategy == "recursive") strategy = AutoconvStrategy::Recursive;
        else if (ac_strategy == "roundtrip") strategy = AutoconvStrategy::RoundTrip;
        else if (ac_strategy != "auto") throw ParseError("bad --strategy");
        DenseFunction v = ac_fn.empty()
                              ? to_dense(read_spectrum_json(ac_spec))
                              : read_function_csv(
                                    ac_fn,
                                    ac_group.empty() ? std::optional<GroupSpec>{}
                                                     : parse_group(ac_group),
                                    Side::Primal);
        AutoconvStrategy used;
        const DenseFunction r = autoconvolve(v, ac_m, strategy, &used);
        std::cerr << "strategy: "
                  << (used == AutoconvStrategy::Recursive ? "recursive" : "roundtrip")
                  << "\n";
        if (ac_out.empty()) {
            std::cout << "ordinal,re,im\n";
            for (ordinal_t i = 0; i < r.size(); ++i)
                std::cout << i << ',' << format_double(r.values[i].real(), 10) << ','
                          << format_double(r.values[i].imag(), 10) << '\n';
        } else {
            write_function_csv(ac_out, r);
        }
        return 0;
    }

    if (*c_feas) {
        const FeasibilityInput in = read_feasibility_json(feas_in);
        const FeasibilityReport rep =
            feasibility_residual(in.group, in.magnitudes, in.phases, in.targets, in.mode,
                                 node_guard);
        if (feas_format == "json") {
            std::ostringstream os;
            os << "{\n  \"orders\": [\n";
            for (std::size_t i = 0; i < rep.orders.size(); ++i) {
                const auto& fo = rep.orders[i];
                os << "    {\"order\": " << fo.order << ", \"residual\": " << fo.residual
                   << ", \"value_re\": " << fo.value.real()
                   << ", \"value_im\": " << fo.value.imag() << "}"
                   << (i + 1 < rep.orders.size() ? ",\n" : "\n");
            }
            os << "  ],\n  \"max_residual\": " << rep.max_residual << "\n}\n";
            write_text(feas_out, os.str());
        } else {
            std::ostringstream os;
            for (const auto& fo : rep.orders) {
                os << "order " << fo.order << ": value (" << format_double(fo.value.real(), 6)
                   << ", " << format_double(fo.value.imag(), 6) << "i), target ("
                   << format_double(fo.target.real(), 6) << ", "
                   << format_double(fo.target.imag(), 6) << "i), residual "
                   << format_double(fo.residual, 6) << "\n";
                std::vector<std::size_t> order_by(fo.terms.size());
                for (std::size_t i = 0; i < order_by.size(); ++i) order_by[i] = i;
                std::sort(order_by.begin(), order_by.end(), [&](std::size_t a, std::size_t b) {
                    return std::abs(fo.contributions[a]) > std::abs(fo.contributions[b]);
                });
                const std::size_t top = std::min<std::size_t>(order_by.size(),
                                                              static_cast<std::size_t>(feas_top));
                for (std::size_t i = 0; i < top; ++i) {
                    const Term& t = fo.terms[order_by[i]];
                    os << "  " << t.multiplicity << " x {";
                    for (std::size_t q = 0; q < t.indices.size(); ++q)
                        os << (q ? "," : "") << t.indices[q];
                    os << "}: " << format_double(std::abs(fo.contributions[order_by[i]]), 6)
                       << "\n";
                }
            }
            os << "max residual " << format_double(rep.max_residual, 6) << "\n";
            write_text(feas_out, os.str());
        }
        return rep.max_residual <= 1e-9 ? 0 : 1;
    }

    if (*c_ver) return run_verify(ver_seed, ver_cases, ver_card, ver_order, ver_fault);

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidIndexError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedOperationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const GroupMismatchError& e) {
        std::cerr << "group mismatch: " << e.what() << "\n";
        return 3;
    } catch (const ResourceLimitError& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
