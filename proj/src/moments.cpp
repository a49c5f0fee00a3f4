#include "specmom/moments.hpp"

#include <cmath>

#include "specmom/convolution.hpp"
#include "specmom/transform.hpp"

namespace specmom {

namespace {

cplx pow_int(cplx z, int m) {
    cplx acc{1.0, 0.0};
    for (int i = 0; i < m; ++i) acc *= z;
    return acc;
}

// chain[k] = k-fold self-convolution of g, built by repeated convolution.
std::vector<DenseFunction> convolution_chain(const DenseFunction& g, int kmax) {
    std::vector<DenseFunction> chain;
    chain.reserve(static_cast<std::size_t>(kmax) + 1);
    chain.push_back(basis_element(g.group, g.side));
    if (kmax >= 1) chain.push_back(g);
    for (int k = 2; k <= kmax; ++k) chain.push_back(convolve(g, chain.back()));
    return chain;
}

cplx paired_moment(const std::vector<DenseFunction>& chain, int m, int p) {
    return dot(chain[static_cast<std::size_t>(m - p)],
               reverse(chain[static_cast<std::size_t>(p)]));
}

int default_split(int m) { return m % 2 == 0 ? m / 2 : (m + 1) / 2; }

} // namespace

cplx direct_general_moment(const DenseFunction& f, MomentCenter a, int m) {
    require_side(f, Side::Primal);
    if (m < 0) throw InvalidIndexError("moment order must be >= 0");
    cplx sum{};
    for (const cplx& z : f.values) sum += pow_int(z - a.a, m);
    return sum / static_cast<double>(f.group.cardinality());
}

double direct_variance(const DenseFunction& f) {
    require_side(f, Side::Primal);
    const cplx mu = mean_of(f);
    double sum = 0.0;
    for (const cplx& z : f.values) sum += std::norm(z - mu);
    return sum / static_cast<double>(f.group.cardinality());
}

double fourier_variance(const DenseFunction& fhat) {
    require_side(fhat, Side::Fourier);
    double sum = 0.0;
    for (ordinal_t j = 1; j < fhat.size(); ++j) sum += std::norm(fhat.values[j]);
    return sum;
}

double fourier_variance(const SparseSpectrum& fhat) {
    double sum = 0.0;
    for (const auto& [j, c] : fhat.entries)
        if (j != 0) sum += std::norm(c);
    return sum;
}

cplx fourier_general_moment(const DenseFunction& fhat, MomentCenter a, int m,
                            std::optional<int> p_opt, const MomentOptions& opts) {
    require_side(fhat, Side::Fourier);
    if (m < 0) throw InvalidIndexError("moment order must be >= 0");
    const int p = p_opt.value_or(default_split(m));
    if (p < 0 || p > m) throw InvalidIndexError("split p must satisfy 0 <= p <= m");

    const bool check_split = opts.verify_split && m >= 2;
    const int p2 = check_split ? (p > 0 ? p - 1 : p + 1) : p;
    const int kmax = std::max({m - p, p, m - p2, p2});

    const DenseFunction g = diminish(fhat, a);
    const auto chain = convolution_chain(g, kmax);
    const cplx value = paired_moment(chain, m, p);

    if (check_split) {
        const cplx check = paired_moment(chain, m, p2);
        if (std::abs(value - check) > opts.split_tol * std::max(1.0, std::abs(value)))
            throw Error("moment value depends on the convolution split; the spectrum "
                        "chain is numerically inconsistent");
    }
    return value;
}

MomentReport moment_report(const DenseFunction& fhat, int max_order,
                           std::optional<cplx> center) {
    require_side(fhat, Side::Fourier);
    if (max_order < 2) throw InvalidIndexError("report order must be >= 2");

    MomentReport rep;
    rep.max_order = max_order;
    rep.mean = fhat.values[0];
    rep.variance = fourier_variance(fhat);
    rep.real_valued = is_conjugate_symmetric(fhat);
    rep.center = center;

    const int kmax = (max_order + 1) / 2;
    auto family = [&](cplx a) {
        const auto chain = convolution_chain(diminish(fhat, MomentCenter{a}), kmax);
        std::vector<cplx> out; // orders 1..max_order
        out.reserve(static_cast<std::size_t>(max_order));
        for (int m = 1; m <= max_order; ++m)
            out.push_back(paired_moment(chain, m, m / 2));
        return out;
    };

    rep.raw = family(cplx{0.0, 0.0});
    std::vector<cplx> central_full = family(rep.mean);

    // order 0 and 1 sanity: e0.e0 = 1 exactly, and the mu-diminished chain
    // has zeroth entry 0, so the first central moment must vanish.
    if (std::abs(central_full[0]) > 1e-12 * std::max(1.0, std::abs(rep.mean)))
        throw Error("first central moment did not vanish");
    rep.central.assign(central_full.begin() + 1, central_full.end());

    if (center) rep.general = family(*center);

    if (rep.real_valued) {
        const double mu2 = rep.central_moment(2).real();
        if (std::abs(mu2 - rep.variance) > 1e-8 * std::max(1.0, rep.variance))
            throw Error("second central moment disagrees with the variance for real input");
    }

    const double sigma = std::sqrt(rep.variance);
    if (rep.real_valued && sigma > 0.0) {
        auto standardized = [&](int m) -> std::optional<double> {
            if (m > max_order) return std::nullopt;
            return rep.central_moment(m).real() / std::pow(sigma, m);
        };
        rep.skewness = standardized(3);
        rep.kurtosis = standardized(4);
        rep.hyperskewness = standardized(5);
        rep.hyperkurtosis = standardized(6);
    }
    return rep;
}

} // namespace specmom
