#include "specmom/kernels.hpp"

#include <cstdlib>

namespace specmom::kernels {

namespace {

void butterfly_scalar(cplx* a, cplx* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const cplx lo = a[i];
        const cplx hi = b[i];
        a[i] = lo + hi;
        b[i] = lo - hi;
    }
}

cplx dot_scalar(const cplx* a, const cplx* b, std::size_t n) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void cmul_scalar(cplx* a, const cplx* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) a[i] *= b[i];
}

void axpy_scalar(cplx* acc, const cplx* a, cplx w, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) acc[i] += w * a[i];
}

void scale_scalar(cplx* a, double s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) a[i] *= s;
}

const Backend kScalar{"scalar", butterfly_scalar, dot_scalar, cmul_scalar,
                      axpy_scalar, scale_scalar};

const Backend* detect() {
#if defined(__x86_64__) || defined(_M_X64)
    if (const Backend* avx2 = avx2_backend(); avx2 && __builtin_cpu_supports("avx2") &&
        __builtin_cpu_supports("fma"))
        return avx2;
#endif
    return &kScalar;
}

const Backend* initial() {
    if (const char* env = std::getenv("SPECMOM_SIMD")) {
        const std::string want{env};
        if (want == "scalar") return &kScalar;
#if defined(__x86_64__) || defined(_M_X64)
        if (want == "avx2" && avx2_backend()) return avx2_backend();
#endif
    }
    return detect();
}

const Backend*& current() {
    static const Backend* backend = initial();
    return backend;
}

} // namespace

const Backend& scalar_backend() { return kScalar; }

const Backend& active() { return *current(); }

bool force_backend(const std::string& name) {
    if (name == "auto") {
        current() = detect();
        return true;
    }
    if (name == "scalar") {
        current() = &kScalar;
        return true;
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (name == "avx2") {
        const Backend* avx2 = avx2_backend();
        if (avx2 && __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
            current() = avx2;
            return true;
        }
        return false;
    }
#endif
    return false;
}

} // namespace specmom::kernels
