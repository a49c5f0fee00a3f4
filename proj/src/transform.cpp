#include "specmom/transform.hpp"

#include <cmath>
#include <numbers>

#include "specmom/kernels.hpp"

namespace specmom {

namespace {

// e^(s*2*pi*i*k/N) for k = 0..N-1, s = -1 forward, +1 inverse. Exponents are
// always reduced mod N before indexing so the angle stays small.
std::vector<cplx> twiddles(std::uint32_t n, bool forward) {
    std::vector<cplx> tw(n);
    const double sign = forward ? -1.0 : 1.0;
    for (std::uint32_t k = 0; k < n; ++k) {
        const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k) / n;
        tw[k] = cplx{std::cos(angle), std::sin(angle)};
    }
    return tw;
}

// Axis sizes small enough to materialize the full N x N kernel, which lets
// each output come from one contiguous dot product.
inline constexpr std::uint32_t kAxisMatrixLimit = 1024;

std::vector<cplx> axis_matrix(std::uint32_t n, const std::vector<cplx>& tw) {
    std::vector<cplx> m(static_cast<std::size_t>(n) * n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            const std::uint64_t k =
                static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
            m[static_cast<std::size_t>(a) * n + b] = tw[k];
        }
    return m;
}

// One pass of the row-column factorization along the axis with the given
// stride and size. Values with digit 0 on this axis come in runs of `stride`,
// repeating every stride*n entries.
void axis_pass(std::vector<cplx>& x, ordinal_t stride, std::uint32_t n, bool forward) {
    const auto& k = kernels::active();
    const ordinal_t total = x.size();
    if (n == 2) {
        const ordinal_t block = 2 * stride;
        for (ordinal_t base = 0; base < total; base += block)
            k.butterfly(x.data() + base, x.data() + base + stride, stride);
        return;
    }
    const std::vector<cplx> tw = twiddles(n, forward);
    const std::vector<cplx> m =
        n <= kAxisMatrixLimit ? axis_matrix(n, tw) : std::vector<cplx>{};
    std::vector<cplx> line(n), out(n);
    const ordinal_t block = static_cast<ordinal_t>(n) * stride;
    for (ordinal_t base = 0; base < total; base += block) {
        for (ordinal_t inner = 0; inner < stride; ++inner) {
            const ordinal_t start = base + inner;
            for (std::uint32_t b = 0; b < n; ++b) line[b] = x[start + b * stride];
            if (!m.empty()) {
                for (std::uint32_t a = 0; a < n; ++a)
                    out[a] = k.dot(m.data() + static_cast<std::size_t>(a) * n, line.data(), n);
            } else {
                for (std::uint32_t a = 0; a < n; ++a) {
                    cplx acc{};
                    for (std::uint32_t b = 0; b < n; ++b)
                        acc += tw[static_cast<std::uint64_t>(
                                   static_cast<unsigned __int128>(a) * b % n)] *
                               line[b];
                    out[a] = acc;
                }
            }
            for (std::uint32_t b = 0; b < n; ++b) x[start + b * stride] = out[b];
        }
    }
}

std::vector<cplx> transform_values(const DenseFunction& f, bool forward) {
    std::vector<cplx> x = f.values;
    for (std::size_t axis = 0; axis < f.group.rank(); ++axis)
        axis_pass(x, f.group.stride(axis), f.group.modulus(axis), forward);
    if (forward)
        kernels::active().scale(x.data(), 1.0 / static_cast<double>(f.group.cardinality()),
                                x.size());
    return x;
}

double max_abs(const std::vector<cplx>& v) {
    double m = 0.0;
    for (const cplx& z : v) m = std::max(m, std::abs(z));
    return m;
}

} // namespace

DenseFunction dft(const DenseFunction& f) {
    require_side(f, Side::Primal);
    return DenseFunction(f.group, Side::Fourier, transform_values(f, true));
}

DenseFunction idft(const DenseFunction& fhat) {
    require_side(fhat, Side::Fourier);
    return DenseFunction(fhat.group, Side::Primal, transform_values(fhat, false));
}

DenseFunction diminish(const DenseFunction& fhat, MomentCenter a) {
    require_side(fhat, Side::Fourier);
    DenseFunction out = fhat;
    out.values[0] -= a.a;
    return out;
}

SparseSpectrum diminish(const SparseSpectrum& fhat, MomentCenter a) {
    SparseSpectrum out = fhat;
    out.set(0, fhat.at(0) - a.a);
    return out;
}

DenseFunction reverse(const DenseFunction& v) {
    DenseFunction out(v.group, v.side);
    for (ordinal_t j = 0; j < v.size(); ++j) out.values[j] = v.values[negate_ord(v.group, j)];
    return out;
}

SparseSpectrum reverse(const SparseSpectrum& v) {
    SparseSpectrum out(v.group);
    for (const auto& [j, c] : v.entries) out.set(negate_ord(v.group, j), c);
    return out;
}

cplx dot(const DenseFunction& f, const DenseFunction& g) {
    require_same_group(f.group, g.group);
    if (f.side != g.side) throw GroupMismatchError("dot product across transform sides");
    return kernels::active().dot(f.values.data(), g.values.data(), f.values.size());
}

double parseval_gap(const DenseFunction& f, const DenseFunction& g) {
    require_side(f, Side::Primal);
    require_side(g, Side::Primal);
    const cplx lhs = dot(f, g);
    const cplx rhs = static_cast<double>(f.group.cardinality()) * dot(dft(f), reverse(dft(g)));
    return std::abs(lhs - rhs);
}

DenseFunction to_dense(const SparseSpectrum& s) {
    DenseFunction out(s.group, Side::Fourier);
    for (const auto& [j, c] : s.entries) out.values[j] = c;
    return out;
}

SparseSpectrum to_sparse(const DenseFunction& dense, double threshold) {
    SparseSpectrum out(dense.group);
    for (ordinal_t j = 0; j < dense.size(); ++j)
        if (std::abs(dense.values[j]) > threshold) out.entries[j] = dense.values[j];
    return out;
}

cplx mean_of(const DenseFunction& f) {
    if (f.side == Side::Fourier) return f.values[0];
    cplx sum{};
    for (const cplx& z : f.values) sum += z;
    return sum / static_cast<double>(f.group.cardinality());
}

bool is_real_valued(const DenseFunction& f, double rel_tol) {
    const double scale = max_abs(f.values);
    double worst = 0.0;
    for (const cplx& z : f.values) worst = std::max(worst, std::abs(z.imag()));
    return worst <= rel_tol * scale;
}

bool is_conjugate_symmetric(const DenseFunction& fhat, double rel_tol) {
    const double scale = max_abs(fhat.values);
    const DenseFunction rev = reverse(fhat);
    double worst = 0.0;
    for (ordinal_t j = 0; j < fhat.size(); ++j)
        worst = std::max(worst, std::abs(rev.values[j] - std::conj(fhat.values[j])));
    return worst <= rel_tol * scale;
}

} // namespace specmom
