#include "specmom/timeseries.hpp"

#include <cmath>
#include <numbers>

#include "specmom/transform.hpp"

namespace specmom {

cplx lagged_moment(const DenseFunction& f, const LagVector& lags) {
    require_side(f, Side::Primal);
    const GroupSpec& g = f.group;
    std::vector<ordinal_t> shifts;
    shifts.reserve(lags.lags.size());
    for (const GroupIndex& lag : lags.lags) shifts.push_back(g.encode(lag));

    cplx sum{};
    for (ordinal_t i = 0; i < g.cardinality(); ++i) {
        cplx prod = f.values[i];
        for (ordinal_t s : shifts) prod *= f.values[add_ord(g, i, s)];
        sum += prod;
    }
    return sum / static_cast<double>(g.cardinality());
}

cplx lagged_moment_fourier(const SparseSpectrum& fhat, const LagVector& lags,
                           std::uint64_t term_guard) {
    const GroupSpec& g = fhat.group;
    const std::size_t free_count = lags.lags.size();

    std::vector<ordinal_t> support;
    std::vector<cplx> coeff;
    for (const auto& [j, c] : fhat.entries) {
        support.push_back(j);
        coeff.push_back(c);
    }
    const std::size_t s = support.size();
    if (s == 0) return cplx{};

    std::uint64_t terms = 1;
    for (std::size_t q = 0; q < free_count; ++q) {
        if (terms > term_guard / s + 1)
            terms = term_guard + 1;
        else
            terms *= s;
    }
    if (terms > term_guard)
        throw ResourceLimitError("lagged-moment term count exceeds guard of " +
                                 std::to_string(term_guard));

    // phase_tab[q][pos]: the lag-q phase angle of support index pos
    std::vector<std::vector<double>> phase_tab(free_count, std::vector<double>(s, 0.0));
    for (std::size_t q = 0; q < free_count; ++q) {
        const GroupIndex& lag = lags.lags[q];
        g.require_valid(lag);
        for (std::size_t pos = 0; pos < s; ++pos) {
            double angle = 0.0;
            for (std::size_t l = 0; l < g.rank(); ++l) {
                const std::uint64_t e =
                    (static_cast<std::uint64_t>(lag.digits[l]) * g.digit(support[pos], l)) %
                    g.modulus(l);
                angle += 2.0 * std::numbers::pi * static_cast<double>(e) / g.modulus(l);
            }
            phase_tab[q][pos] = angle;
        }
    }

    if (free_count == 0) return fhat.at(0);

    std::vector<std::size_t> pos(free_count, 0);
    cplx total{};
    for (;;) {
        ordinal_t partial = 0;
        cplx prod{1.0, 0.0};
        double angle = 0.0;
        for (std::size_t q = 0; q < free_count; ++q) {
            partial = add_ord(g, partial, support[pos[q]]);
            prod *= coeff[pos[q]];
            angle += phase_tab[q][pos[q]];
        }
        const ordinal_t forced = negate_ord(g, partial);
        if (add_ord(g, partial, forced) != 0)
            throw Error("resonance closure violated"); // never; checked per term
        const cplx last = fhat.at(forced);
        if (last != cplx{})
            total += prod * last * cplx{std::cos(angle), std::sin(angle)};

        std::size_t q = 0;
        while (q < free_count && ++pos[q] == s) pos[q++] = 0;
        if (q == free_count) break;
    }
    return total;
}

cplx lagged_moment_fourier(const DenseFunction& fhat, const LagVector& lags,
                           std::uint64_t term_guard) {
    require_side(fhat, Side::Fourier);
    return lagged_moment_fourier(to_sparse(fhat, 0.0), lags, term_guard);
}

} // namespace specmom
