#pragma once

#include <optional>

#include "specmom/function.hpp"

namespace specmom {

/// Circular convolution: result_i = sum_j f_(i(-)j) g_j. Skips exact-zero
/// entries of whichever operand has the smaller support, so cost is
/// O(|G| * s) for an s-sparse operand.
DenseFunction convolve(const DenseFunction& f, const DenseFunction& g);

inline constexpr std::size_t kDefaultSupportGuard = 1'000'000;

/// Support-sumset convolution. Throws ResourceLimitError when the result
/// support would exceed `guard`.
SparseSpectrum convolve(const SparseSpectrum& f, const SparseSpectrum& g,
                        std::size_t guard = kDefaultSupportGuard);

/// The standard basis element e_j (defaults to e_0, the convolution identity).
DenseFunction basis_element(const GroupSpec& g, Side side, ordinal_t j = 0);

enum class AutoconvStrategy {
    Auto,      ///< RoundTrip for dense input.
    Recursive, ///< m-1 explicit convolutions.
    RoundTrip, ///< transform, elementwise m-th power, transform back
};

/// m-fold self-convolution; m = 0 gives e_0 and m = 1 gives v itself.
/// `used` (optional) reports which strategy actually ran.
DenseFunction autoconvolve(const DenseFunction& v, int m,
                           AutoconvStrategy strategy = AutoconvStrategy::Auto,
                           AutoconvStrategy* used = nullptr);

/// Sparse inputs always take the recursive route (support sumsets).
SparseSpectrum autoconvolve(const SparseSpectrum& v, int m,
                            std::size_t guard = kDefaultSupportGuard);

inline constexpr ordinal_t kDefaultCirculantGuard = ordinal_t{1} << 12;

/// The linear operator C_f with entry (i,j) = f_(i(-)j); applying it performs
/// circular convolution by the generator. Matrix-free unless materialized.
class CirculantOperator {
public:
    explicit CirculantOperator(DenseFunction generator);

    const DenseFunction& generator() const { return generator_; }
    const GroupSpec& group() const { return generator_.group; }

    /// Builds the |G| x |G| matrix; throws ResourceLimitError past `guard`.
    void materialize(ordinal_t guard = kDefaultCirculantGuard);
    bool materialized() const { return matrix_.has_value(); }

    /// f_(i(-)j), from the matrix when materialized.
    cplx entry(ordinal_t i, ordinal_t j) const;

    /// C_f g = f * g. Uses the materialized matrix when present, otherwise
    /// matrix-free accumulation.
    DenseFunction apply(const DenseFunction& g) const;

private:
    DenseFunction generator_;
    std::optional<std::vector<cplx>> matrix_;
};

/// The (constant) main-diagonal value of C^m, computed by explicit matrix
/// powers. Verifies that every diagonal entry agrees within `tol` relative
/// to the diagonal scale.
cplx power_diagonal(const CirculantOperator& c, int m, double tol = 1e-9,
                    ordinal_t guard = kDefaultCirculantGuard);

} // namespace specmom
