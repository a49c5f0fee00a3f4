#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace specmom::kernels {

using cplx = std::complex<double>;

/// The data-parallel inner loops of the library. Each entry has a scalar
/// reference implementation and may have SIMD variants; the active table is
/// picked once at startup from the CPU (override with SPECMOM_SIMD=scalar or
/// force_backend()). Every variant must agree with the scalar kernels to
/// rounding accuracy; tests/test_kernels.cpp enforces this.
struct Backend {
    const char* name;

    /// (a_i, b_i) <- (a_i + b_i, a_i - b_i) for i in [0, n). The radix-2
    /// transform pass; a and b must not overlap.
    void (*butterfly)(cplx* a, cplx* b, std::size_t n);

    /// sum_i a_i * b_i, no conjugation.
    cplx (*dot)(const cplx* a, const cplx* b, std::size_t n);

    /// a_i *= b_i.
    void (*cmul_inplace)(cplx* a, const cplx* b, std::size_t n);

    /// acc_i += w * a_i.
    void (*axpy)(cplx* acc, const cplx* a, cplx w, std::size_t n);

    /// a_i *= s.
    void (*scale)(cplx* a, double s, std::size_t n);
};

const Backend& scalar_backend();

/// Currently selected backend (scalar unless the CPU supports a compiled-in
/// SIMD variant).
const Backend& active();

/// Returns false when `name` is unknown or unavailable on this CPU.
/// Passing "auto" restores the default selection.
bool force_backend(const std::string& name);

#if defined(__x86_64__) || defined(_M_X64)
/// Null when the binary was built without AVX2 support.
const Backend* avx2_backend();
#endif

} // namespace specmom::kernels
