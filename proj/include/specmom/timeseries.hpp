#pragma once

#include "specmom/function.hpp"

namespace specmom {

/// The m-1 lags of an m-th-order lagged moment.
struct LagVector {
    std::vector<GroupIndex> lags;

    int order() const { return static_cast<int>(lags.size()) + 1; }
};

/// r_m(i_1,...,i_{m-1}) = (1/|G|) sum_i f_i f_(i(+)i_1) ... f_(i(+)i_{m-1}),
/// the circular lagged product average. Zero lags give the m-th raw moment.
cplx lagged_moment(const DenseFunction& f, const LagVector& lags);

inline constexpr std::uint64_t kDefaultLagTermGuard = 10'000'000;

/// Same moment from the Fourier side: a sum over (m-1)-tuples of support
/// indices with the last index forced so that all m indices annihilate, each
/// term weighted by the lag phase factor. Cost |support|^(m-1); guarded.
cplx lagged_moment_fourier(const SparseSpectrum& fhat, const LagVector& lags,
                           std::uint64_t term_guard = kDefaultLagTermGuard);
cplx lagged_moment_fourier(const DenseFunction& fhat, const LagVector& lags,
                           std::uint64_t term_guard = kDefaultLagTermGuard);

} // namespace specmom
