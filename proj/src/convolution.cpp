#include "specmom/convolution.hpp"

#include <algorithm>
#include <cmath>

#include "specmom/kernels.hpp"
#include "specmom/transform.hpp"

namespace specmom {

namespace {

std::size_t nonzero_count(const DenseFunction& f) {
    std::size_t c = 0;
    for (const cplx& z : f.values)
        if (z != cplx{}) ++c;
    return c;
}

// out[k (+) shift] += f[k] * weight for every k, walking k in ordinal order
// with an odometer so no div/mod happens in the loop.
void accumulate_shifted(const GroupSpec& g, const std::vector<cplx>& f, ordinal_t shift,
                        cplx weight, std::vector<cplx>& out) {
    const ordinal_t card = g.cardinality();
    if (g.is_binary()) {
        for (ordinal_t k = 0; k < card; ++k) out[k ^ shift] += f[k] * weight;
        return;
    }
    const std::size_t n = g.rank();
    // axes in increasing stride order = the order ordinal increments carry
    std::vector<std::size_t> order(n);
    for (std::size_t l = 0; l < n; ++l) order[l] = l;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return g.stride(a) < g.stride(b); });

    // addt[l][d] = ((d + shift_l) mod N_l) * stride_l
    std::vector<std::vector<ordinal_t>> addt(n);
    for (std::size_t l = 0; l < n; ++l) {
        const std::uint32_t mod = g.modulus(l);
        const std::uint32_t sd = g.digit(shift, l);
        addt[l].resize(mod);
        for (std::uint32_t d = 0; d < mod; ++d)
            addt[l][d] = ((d + sd) % mod) * g.stride(l);
    }

    std::vector<std::uint32_t> kd(n, 0);
    ordinal_t t = shift;
    for (ordinal_t k = 0;; ++k) {
        out[t] += f[k] * weight;
        if (k + 1 == card) break;
        for (std::size_t pos = 0;; ++pos) {
            const std::size_t ax = order[pos];
            t -= addt[ax][kd[ax]];
            if (++kd[ax] == g.modulus(ax)) {
                kd[ax] = 0;
                t += addt[ax][0];
            } else {
                t += addt[ax][kd[ax]];
                break;
            }
        }
    }
}

} // namespace

DenseFunction convolve(const DenseFunction& f, const DenseFunction& g) {
    require_same_group(f.group, g.group);
    if (f.side != g.side) throw GroupMismatchError("convolution across transform sides");
    const bool g_sparser = nonzero_count(g) <= nonzero_count(f);
    const DenseFunction& dense = g_sparser ? f : g;
    const DenseFunction& kernel = g_sparser ? g : f;
    DenseFunction out(f.group, f.side);
    for (ordinal_t j = 0; j < kernel.size(); ++j)
        if (kernel.values[j] != cplx{})
            accumulate_shifted(f.group, dense.values, j, kernel.values[j], out.values);
    return out;
}

SparseSpectrum convolve(const SparseSpectrum& f, const SparseSpectrum& g, std::size_t guard) {
    require_same_group(f.group, g.group);
    SparseSpectrum out(f.group);
    for (const auto& [jf, cf] : f.entries)
        for (const auto& [jg, cg] : g.entries) {
            out.entries[add_ord(f.group, jf, jg)] += cf * cg;
            if (out.entries.size() > guard)
                throw ResourceLimitError("sparse convolution support exceeded guard of " +
                                         std::to_string(guard) + " entries");
        }
    // drop exact cancellations
    for (auto it = out.entries.begin(); it != out.entries.end();)
        it = it->second == cplx{} ? out.entries.erase(it) : std::next(it);
    return out;
}

DenseFunction basis_element(const GroupSpec& g, Side side, ordinal_t j) {
    g.require_valid(j);
    DenseFunction e(g, side);
    e.values[j] = cplx{1.0, 0.0};
    return e;
}

DenseFunction autoconvolve(const DenseFunction& v, int m, AutoconvStrategy strategy,
                           AutoconvStrategy* used) {
    if (m < 0) throw InvalidIndexError("autoconvolution order must be >= 0");
    if (strategy == AutoconvStrategy::Auto) strategy = AutoconvStrategy::RoundTrip;
    if (used) *used = strategy;
    if (m == 0) return basis_element(v.group, v.side);
    if (m == 1) return v;

    if (strategy == AutoconvStrategy::Recursive) {
        DenseFunction acc = v;
        for (int i = 2; i <= m; ++i) acc = convolve(v, acc);
        return acc;
    }

    // Elementwise m-th power on the other side of the transform.
    const auto& k = kernels::active();
    if (v.side == Side::Fourier) {
        const DenseFunction base = idft(v);
        DenseFunction powed = base;
        for (int i = 2; i <= m; ++i)
            k.cmul_inplace(powed.values.data(), base.values.data(), powed.values.size());
        return dft(powed);
    }
    // Primal side: f * g pairs with |G| fhat . ghat, so m copies pick up
    // a factor |G|^(m-1).
    DenseFunction base = dft(v);
    DenseFunction powed = base;
    for (int i = 2; i <= m; ++i)
        k.cmul_inplace(powed.values.data(), base.values.data(), powed.values.size());
    k.scale(powed.values.data(),
            std::pow(static_cast<double>(v.group.cardinality()), m - 1), powed.values.size());
    return idft(powed);
}

SparseSpectrum autoconvolve(const SparseSpectrum& v, int m, std::size_t guard) {
    if (m < 0) throw InvalidIndexError("autoconvolution order must be >= 0");
    SparseSpectrum acc(v.group);
    acc.set(0, cplx{1.0, 0.0});
    for (int i = 1; i <= m; ++i) acc = convolve(v, acc, guard);
    return acc;
}

CirculantOperator::CirculantOperator(DenseFunction generator)
    : generator_(std::move(generator)) {}

void CirculantOperator::materialize(ordinal_t guard) {
    if (matrix_) return;
    const ordinal_t n = group().cardinality();
    if (n > guard)
        throw ResourceLimitError("circulant materialization guard exceeded: |G| = " +
                                 std::to_string(n) + " > " + std::to_string(guard));
    std::vector<cplx> m(n * n);
    for (ordinal_t i = 0; i < n; ++i)
        for (ordinal_t j = 0; j < n; ++j)
            m[i * n + j] = generator_.values[subtract_ord(group(), i, j)];
    matrix_ = std::move(m);
}

cplx CirculantOperator::entry(ordinal_t i, ordinal_t j) const {
    if (matrix_) return (*matrix_)[i * group().cardinality() + j];
    return generator_.values[subtract_ord(group(), i, j)];
}

DenseFunction CirculantOperator::apply(const DenseFunction& g) const {
    require_same_group(group(), g.group);
    if (!matrix_) return convolve(generator_, g);
    const ordinal_t n = group().cardinality();
    DenseFunction out(g.group, g.side);
    for (ordinal_t i = 0; i < n; ++i)
        out.values[i] = kernels::active().dot(matrix_->data() + i * n, g.values.data(), n);
    return out;
}

cplx power_diagonal(const CirculantOperator& c, int m, double tol, ordinal_t guard) {
    if (m < 0) throw InvalidIndexError("matrix power must be >= 0");
    const ordinal_t n = c.group().cardinality();
    if (n > guard)
        throw ResourceLimitError("circulant power guard exceeded: |G| = " + std::to_string(n) +
                                 " > " + std::to_string(guard));
    if (m == 0) return cplx{1.0, 0.0};

    std::vector<cplx> base(n * n);
    for (ordinal_t i = 0; i < n; ++i)
        for (ordinal_t j = 0; j < n; ++j) base[i * n + j] = c.entry(i, j);

    std::vector<cplx> acc = base, next(n * n);
    for (int step = 2; step <= m; ++step) {
        for (ordinal_t i = 0; i < n; ++i)
            for (ordinal_t j = 0; j < n; ++j) {
                cplx s{};
                for (ordinal_t l = 0; l < n; ++l) s += acc[i * n + l] * base[l * n + j];
                next[i * n + j] = s;
            }
        acc.swap(next);
    }

    const cplx diag = acc[0];
    double scale = std::abs(diag);
    for (ordinal_t i = 1; i < n; ++i) scale = std::max(scale, std::abs(acc[i * n + i]));
    for (ordinal_t i = 1; i < n; ++i)
        if (std::abs(acc[i * n + i] - diag) > tol * std::max(1.0, scale))
            throw Error("circulant power diagonal is not constant");
    return diag;
}

} // namespace specmom
