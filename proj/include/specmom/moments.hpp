#pragma once

#include <optional>
#include <vector>

#include "specmom/function.hpp"

namespace specmom {

/// (1/|G|) sum_i (f_i - a)^m, evaluated in the observation domain.
cplx direct_general_moment(const DenseFunction& f, MomentCenter a, int m);

/// (1/|G|) sum_i |f_i - mu|^2; always real and nonnegative.
double direct_variance(const DenseFunction& f);

/// sum over j != 0 of |fhat_j|^2.
double fourier_variance(const DenseFunction& fhat);
double fourier_variance(const SparseSpectrum& fhat);

struct MomentOptions {
    /// For m >= 2, recompute at a second split point and require agreement.
    bool verify_split = true;
    double split_tol = 1e-10;
};

/// m-th general moment about a from the spectrum alone:
/// the dot product of the (m-p)-fold and reversed p-fold self-convolutions
/// of the a-diminished spectrum. The result does not depend on the split p
/// (default: m/2 for even m, (m+1)/2 for odd).
cplx fourier_general_moment(const DenseFunction& fhat, MomentCenter a, int m,
                            std::optional<int> p = std::nullopt,
                            const MomentOptions& opts = {});

struct MomentReport {
    cplx mean{};
    double variance = 0.0;
    std::vector<cplx> raw;     ///< raw moments, orders 1..max_order
    std::vector<cplx> central; ///< central moments, orders 2..max_order
    /// general moments about a custom center, orders 1..max_order
    std::vector<cplx> general;
    std::optional<cplx> center;
    bool real_valued = false;
    int max_order = 0;

    /// Standardized moments; present only for real-valued f with sigma > 0
    /// and when the matching central order was computed.
    std::optional<double> skewness, kurtosis, hyperskewness, hyperkurtosis;

    cplx raw_moment(int m) const { return raw.at(static_cast<std::size_t>(m) - 1); }
    cplx central_moment(int m) const { return central.at(static_cast<std::size_t>(m) - 2); }
};

/// Computes raw and central moments up to max_order with one convolution
/// chain per family: the k-fold self-convolutions are built once and every
/// order 2..max_order falls out of paired dot products, so an s-sparse
/// spectrum costs O((max_order/2) |G| s). If `center` is given the general
/// moments about it are included as well.
MomentReport moment_report(const DenseFunction& fhat, int max_order,
                           std::optional<cplx> center = std::nullopt);

} // namespace specmom
