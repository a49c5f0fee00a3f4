// AVX2/FMA variants of the inner-loop kernels. Compiled with -mavx2 -mfma on
// x86_64 only; kernels.cpp checks cpu support before installing this table.
//
// Complex doubles are kept interleaved (re, im), two per 256-bit register.
// Complex multiply uses the usual shuffle + fmaddsub pattern:
//   even lanes: ar*br - ai*bi, odd lanes: ar*bi + ai*br.

#include "specmom/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace specmom::kernels {

namespace {

__attribute__((target("avx2,fma"))) inline __m256d cmul256(__m256d a, __m256d b) {
    const __m256d b_re = _mm256_movedup_pd(b);                  // br br
    const __m256d b_im = _mm256_permute_pd(b, 0xF);             // bi bi
    const __m256d a_sw = _mm256_permute_pd(a, 0x5);             // ai ar
    return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

__attribute__((target("avx2,fma")))
void butterfly_avx2(cplx* a, cplx* b, std::size_t n) {
    double* pa = reinterpret_cast<double*>(a);
    double* pb = reinterpret_cast<double*>(b);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        _mm256_storeu_pd(pa + 2 * i, _mm256_add_pd(va, vb));
        _mm256_storeu_pd(pb + 2 * i, _mm256_sub_pd(va, vb));
    }
    for (; i < n; ++i) {
        const cplx lo = a[i];
        const cplx hi = b[i];
        a[i] = lo + hi;
        b[i] = lo - hi;
    }
}

__attribute__((target("avx2,fma")))
cplx dot_avx2(const cplx* a, const cplx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        acc = _mm256_add_pd(acc, cmul256(va, vb));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    cplx out{lanes[0] + lanes[2], lanes[1] + lanes[3]};
    for (; i < n; ++i) out += a[i] * b[i];
    return out;
}

__attribute__((target("avx2,fma")))
void cmul_avx2(cplx* a, const cplx* b, std::size_t n) {
    double* pa = reinterpret_cast<double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        _mm256_storeu_pd(pa + 2 * i, cmul256(va, vb));
    }
    for (; i < n; ++i) a[i] *= b[i];
}

__attribute__((target("avx2,fma")))
void axpy_avx2(cplx* acc, const cplx* a, cplx w, std::size_t n) {
    double* pacc = reinterpret_cast<double*>(acc);
    const double* pa = reinterpret_cast<const double*>(a);
    const __m256d vw = _mm256_setr_pd(w.real(), w.imag(), w.real(), w.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vc = _mm256_loadu_pd(pacc + 2 * i);
        _mm256_storeu_pd(pacc + 2 * i, _mm256_add_pd(vc, cmul256(va, vw)));
    }
    for (; i < n; ++i) acc[i] += w * a[i];
}

__attribute__((target("avx2,fma")))
void scale_avx2(cplx* a, double s, std::size_t n) {
    double* pa = reinterpret_cast<double*>(a);
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        _mm256_storeu_pd(pa + 2 * i, _mm256_mul_pd(_mm256_loadu_pd(pa + 2 * i), vs));
    for (; i < n; ++i) a[i] *= s;
}

const Backend kAvx2{"avx2", butterfly_avx2, dot_avx2, cmul_avx2, axpy_avx2, scale_avx2};

} // namespace

const Backend* avx2_backend() { return &kAvx2; }

} // namespace specmom::kernels

#endif // x86_64
