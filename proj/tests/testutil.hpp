#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "specmom/function.hpp"
#include "specmom/transform.hpp"

namespace testutil {

using namespace specmom;

inline double rel_err(cplx a, cplx b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

inline GroupSpec random_group(std::mt19937_64& rng, ordinal_t max_card, int max_rank = 3) {
    std::uniform_int_distribution<int> rank_d(1, max_rank);
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

inline DenseFunction random_dense(std::mt19937_64& rng, const GroupSpec& g, Side side,
                                  bool real = false) {
    std::normal_distribution<double> val(0.0, 1.0);
    DenseFunction f(g, side);
    for (cplx& z : f.values) z = cplx{val(rng), real ? 0.0 : val(rng)};
    return f;
}

inline SparseSpectrum random_sparse(std::mt19937_64& rng, const GroupSpec& g, double density) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> val(0.0, 1.0);
    SparseSpectrum s(g);
    for (ordinal_t j = 0; j < g.cardinality(); ++j)
        if (unit(rng) < density) s.set(j, cplx{val(rng), val(rng)});
    if (s.entries.empty()) s.set(0, cplx{val(rng), 0.0});
    return s;
}

// Independent transform oracle: materializes the full transform matrix from
// the digit tuples, never factorizing by axis. O(|G|^2).
inline DenseFunction kron_dft_oracle(const DenseFunction& f) {
    const GroupSpec& g = f.group;
    const ordinal_t n = g.cardinality();
    DenseFunction out(g, Side::Fourier);
    for (ordinal_t i = 0; i < n; ++i) {
        cplx acc{};
        for (ordinal_t j = 0; j < n; ++j) {
            double angle = 0.0;
            for (std::size_t l = 0; l < g.rank(); ++l) {
                const std::uint64_t e =
                    (static_cast<std::uint64_t>(g.digit(i, l)) * g.digit(j, l)) % g.modulus(l);
                angle -= 2.0 * std::numbers::pi * static_cast<double>(e) / g.modulus(l);
            }
            acc += cplx{std::cos(angle), std::sin(angle)} * f.values[j];
        }
        out.values[i] = acc / static_cast<double>(n);
    }
    return out;
}

} // namespace testutil
