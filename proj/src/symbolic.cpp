#include "specmom/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace specmom {

namespace {

std::uint64_t multiset_multiplicity(const std::vector<ordinal_t>& sorted) {
    // m! / prod(count!) accumulated as prod over positions of
    // C(position, run position) to stay in integer range.
    std::uint64_t result = 1;
    std::uint64_t pos = 0, run = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        ++pos;
        run = (i > 0 && sorted[i] == sorted[i - 1]) ? run + 1 : 1;
        result = result * pos / run;
    }
    return result;
}

struct Enumerator {
    const GroupSpec& g;
    int m;
    bool central;
    const std::vector<ordinal_t>* support; // sorted, or null for all of G
    std::uint64_t guard;
    std::uint64_t nodes = 0;
    std::vector<ordinal_t> chosen;
    std::vector<Term> out;

    bool in_universe(ordinal_t j) const {
        if (central && j == 0) return false;
        if (!support) return true;
        return std::binary_search(support->begin(), support->end(), j);
    }

    ordinal_t universe_size() const {
        return support ? support->size() : g.cardinality();
    }

    ordinal_t universe_at(ordinal_t pos) const { return support ? (*support)[pos] : pos; }

    void tick() {
        if (++nodes > guard)
            throw ResourceLimitError(
                "symbolic enumeration exceeded the node guard of " + std::to_string(guard) +
                "; use the numeric moment engine instead");
    }

    // Chooses indices ascending; the last index is forced by annihilation.
    void recurse(ordinal_t from_pos, ordinal_t partial) {
        tick();
        if (static_cast<int>(chosen.size()) == m - 1) {
            const ordinal_t forced = negate_ord(g, partial);
            if ((chosen.empty() || forced >= chosen.back()) && in_universe(forced)) {
                chosen.push_back(forced);
                out.push_back(Term{chosen, multiset_multiplicity(chosen)});
                chosen.pop_back();
            }
            return;
        }
        const ordinal_t n = universe_size();
        for (ordinal_t pos = from_pos; pos < n; ++pos) {
            const ordinal_t j = universe_at(pos);
            if (central && j == 0) continue;
            chosen.push_back(j);
            recurse(pos, add_ord(g, partial, j));
            chosen.pop_back();
        }
    }
};

cplx coefficient(const SparseSpectrum& s, ordinal_t j, MomentCenter a) {
    return j == 0 ? s.at(0) - a.a : s.at(j);
}

std::string index_label(const GroupSpec& g, ordinal_t j, Notation notation) {
    switch (notation) {
        case Notation::Decimal:
            return "fh" + std::to_string(j);
        case Notation::Binary: {
            std::string bits;
            for (std::size_t l = 0; l < g.rank(); ++l)
                bits += g.digit(j, l) ? '1' : '0';
            return "fh[" + bits + "]";
        }
        case Notation::Set: {
            const auto labels = set_repr(g, j);
            std::string body;
            for (std::size_t i = 0; i < labels.size(); ++i) {
                if (i) body += ',';
                body += std::to_string(labels[i]);
            }
            return "fh{" + body + "}";
        }
    }
    return {};
}

std::string term_body(const GroupSpec& g, const Term& t, Notation notation) {
    std::string out;
    std::size_t i = 0;
    while (i < t.indices.size()) {
        std::size_t run = 1;
        while (i + run < t.indices.size() && t.indices[i + run] == t.indices[i]) ++run;
        if (!out.empty()) out += ' ';
        out += index_label(g, t.indices[i], notation);
        if (run > 1) out += '^' + std::to_string(run);
        i += run;
    }
    return out;
}

} // namespace

SymbolicMoment annihilating_terms(const GroupSpec& g, int m, CenterMode mode,
                                  const std::optional<std::vector<ordinal_t>>& support,
                                  std::uint64_t node_guard) {
    if (m < 1) throw InvalidIndexError("expansion order must be >= 1");
    std::optional<std::vector<ordinal_t>> sorted;
    if (support) {
        sorted = *support;
        std::sort(sorted->begin(), sorted->end());
        sorted->erase(std::unique(sorted->begin(), sorted->end()), sorted->end());
        for (ordinal_t j : *sorted) g.require_valid(j);
    }
    Enumerator e{g, m, mode == CenterMode::Central, sorted ? &*sorted : nullptr, node_guard,
                 0,  {}, {}};
    e.chosen.reserve(static_cast<std::size_t>(m));
    e.recurse(0, 0);
    return SymbolicMoment{g, m, mode, std::move(e.out)};
}

cplx evaluate(const SymbolicMoment& sym, const SparseSpectrum& s, MomentCenter a) {
    require_same_group(sym.group, s.group);
    cplx total{};
    for (const Term& t : sym.terms) {
        cplx prod{1.0, 0.0};
        for (ordinal_t j : t.indices) prod *= coefficient(s, j, a);
        total += static_cast<double>(t.multiplicity) * prod;
    }
    return total;
}

std::vector<cplx> evaluate_terms(const SymbolicMoment& sym, const SparseSpectrum& s,
                                 MomentCenter a) {
    require_same_group(sym.group, s.group);
    std::vector<cplx> out;
    out.reserve(sym.terms.size());
    for (const Term& t : sym.terms) {
        cplx prod{1.0, 0.0};
        for (ordinal_t j : t.indices) prod *= coefficient(s, j, a);
        out.push_back(static_cast<double>(t.multiplicity) * prod);
    }
    return out;
}

std::string render(const SymbolicMoment& sym, Notation notation) {
    if (notation != Notation::Decimal && !sym.group.is_binary())
        throw UnsupportedOperationError(
            "binary/set notation requires an all-binary group");
    if (sym.terms.empty()) return "0";

    // multiplicity classes ascending, already lexicographic within a class
    std::map<std::uint64_t, std::vector<const Term*>> classes;
    for (const Term& t : sym.terms) classes[t.multiplicity].push_back(&t);

    std::ostringstream os;
    bool first_class = true;
    for (const auto& [mult, terms] : classes) {
        if (!first_class) os << " + ";
        first_class = false;
        const bool wrap = mult > 1 || terms.size() > 1;
        if (mult > 1) os << mult;
        if (wrap && mult > 1) os << '(';
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i) os << " + ";
            os << term_body(sym.group, *terms[i], notation);
        }
        if (wrap && mult > 1) os << ')';
    }
    if (notation == Notation::Set)
        os << "   [each term's sets symmetric-difference to the empty set]";
    return os.str();
}

cplx z2n_central_closed_form(const SparseSpectrum& s, int m) {
    if (!s.group.is_binary())
        throw UnsupportedOperationError("closed forms only exist on all-binary groups");
    if (m < 2 || m > 6)
        throw UnsupportedOperationError("closed forms cover orders 2 through 6");

    // nonzero coefficients away from index 0, ascending
    std::vector<ordinal_t> idx;
    std::vector<cplx> val;
    for (const auto& [j, c] : s.entries)
        if (j != 0) {
            idx.push_back(j);
            val.push_back(c);
        }
    const std::size_t n = idx.size();
    auto find = [&](ordinal_t j) -> std::ptrdiff_t {
        const auto it = std::lower_bound(idx.begin(), idx.end(), j);
        return (it != idx.end() && *it == j) ? it - idx.begin() : -1;
    };
    auto sq = [&](std::size_t i) { return val[i] * val[i]; };

    cplx acc{};
    switch (m) {
        case 2:
            for (std::size_t j = 0; j < n; ++j) acc += sq(j);
            return acc;
        case 3:
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l) {
                    const std::ptrdiff_t mm = find(idx[k] ^ idx[l]);
                    if (mm >= 0 && idx[mm] > idx[l]) acc += val[k] * val[l] * val[mm];
                }
            return 6.0 * acc;
        case 4: {
            cplx quartic{}, paired{}, linear{};
            for (std::size_t j = 0; j < n; ++j) quartic += sq(j) * sq(j);
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t mm = l + 1; mm < n; ++mm) paired += sq(l) * sq(mm);
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t mm = l + 1; mm < n; ++mm)
                    for (std::size_t p = mm + 1; p < n; ++p) {
                        const std::ptrdiff_t q = find(idx[l] ^ idx[mm] ^ idx[p]);
                        if (q >= 0 && idx[q] > idx[p])
                            linear += val[l] * val[mm] * val[p] * val[q];
                    }
            return quartic + 6.0 * paired + 24.0 * linear;
        }
        case 5: {
            cplx repeated{}, distinct{}, linear{};
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t mm = l + 1; mm < n; ++mm) {
                    const std::ptrdiff_t p = find(idx[l] ^ idx[mm]);
                    if (p < 0 || idx[p] <= idx[mm]) continue;
                    const cplx triple = val[l] * val[mm] * val[p];
                    for (std::size_t q = 0; q < n; ++q) {
                        const bool member = q == l || q == mm || q == static_cast<std::size_t>(p);
                        (member ? repeated : distinct) += triple * sq(q);
                    }
                }
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t mm = l + 1; mm < n; ++mm)
                    for (std::size_t p = mm + 1; p < n; ++p)
                        for (std::size_t q = p + 1; q < n; ++q) {
                            const std::ptrdiff_t r = find(idx[l] ^ idx[mm] ^ idx[p] ^ idx[q]);
                            if (r >= 0 && idx[r] > idx[q])
                                linear += val[l] * val[mm] * val[p] * val[q] * val[r];
                        }
            return 20.0 * repeated + 60.0 * distinct + 120.0 * linear;
        }
        case 6: {
            cplx sextic{}, fifteen{}, ninety{}, r_in{}, r_out{}, linear{};
            for (std::size_t j = 0; j < n; ++j) sextic += sq(j) * sq(j) * sq(j);
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t mm = l + 1; mm < n; ++mm) {
                    fifteen += sq(l) * sq(l) * sq(mm) + sq(l) * sq(mm) * sq(mm);
                    for (std::size_t p = mm + 1; p < n; ++p) ninety += sq(l) * sq(mm) * sq(p);
                }
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t mm = l + 1; mm < n; ++mm)
                    for (std::size_t p = mm + 1; p < n; ++p) {
                        const std::ptrdiff_t q = find(idx[l] ^ idx[mm] ^ idx[p]);
                        if (q < 0 || idx[q] <= idx[p]) continue;
                        const cplx quad = val[l] * val[mm] * val[p] * val[q];
                        for (std::size_t r = 0; r < n; ++r) {
                            const bool member = r == l || r == mm || r == p ||
                                                r == static_cast<std::size_t>(q);
                            (member ? r_in : r_out) += quad * sq(r);
                        }
                    }
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t mm = l + 1; mm < n; ++mm)
                    for (std::size_t p = mm + 1; p < n; ++p)
                        for (std::size_t q = p + 1; q < n; ++q)
                            for (std::size_t r = q + 1; r < n; ++r) {
                                const std::ptrdiff_t ss =
                                    find(idx[l] ^ idx[mm] ^ idx[p] ^ idx[q] ^ idx[r]);
                                if (ss >= 0 && idx[ss] > idx[r])
                                    linear += val[l] * val[mm] * val[p] * val[q] * val[r] *
                                              val[ss];
                            }
            return sextic + 15.0 * fifteen + 90.0 * ninety + 120.0 * r_in + 360.0 * r_out +
                   720.0 * linear;
        }
    }
    return acc;
}

FeasibilityReport feasibility_residual(const GroupSpec& g,
                                       const std::map<ordinal_t, double>& magnitudes,
                                       const std::map<ordinal_t, double>& phases,
                                       const std::map<int, cplx>& targets,
                                       CenterMode mode, std::uint64_t node_guard) {
    if (targets.empty()) throw InvalidIndexError("no target orders given");
    if (magnitudes.size() != phases.size())
        throw GroupMismatchError("magnitude and phase supports differ");
    SparseSpectrum s(g);
    std::vector<ordinal_t> support;
    for (const auto& [j, mag] : magnitudes) {
        const auto it = phases.find(j);
        if (it == phases.end())
            throw GroupMismatchError("no phase for index " + std::to_string(j));
        s.set(j, std::polar(mag, it->second));
        support.push_back(j);
    }

    FeasibilityReport rep;
    for (const auto& [order, target] : targets) {
        const SymbolicMoment sym = annihilating_terms(g, order, mode, support, node_guard);
        FeasibilityOrder fo;
        fo.order = order;
        fo.target = target;
        fo.contributions = evaluate_terms(sym, s);
        for (const cplx& c : fo.contributions) fo.value += c;
        fo.residual = std::abs(target - fo.value);
        fo.terms = sym.terms;
        rep.max_residual = std::max(rep.max_residual, fo.residual);
        rep.orders.push_back(std::move(fo));
    }
    return rep;
}

std::map<int, cplx> gaussian_targets(double variance) {
    return {{3, cplx{0.0, 0.0}}, {4, cplx{3.0 * variance * variance, 0.0}}};
}

} // namespace specmom
