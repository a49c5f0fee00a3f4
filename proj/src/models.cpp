#include "specmom/models.hpp"

#include <cmath>

namespace specmom {

namespace {

GroupSpec binary_group(int n) {
    if (n < 1) throw InvalidIndexError("need at least one factor");
    return GroupSpec(std::vector<std::uint32_t>(static_cast<std::size_t>(n), 2));
}

void check_label(int v, int n) {
    if (v < 1 || v > n)
        throw InvalidIndexError("vertex label " + std::to_string(v) + " outside 1.." +
                                std::to_string(n));
}

} // namespace

GraphBetSpec GraphBetSpec::complete(int n, double vertex_effect, double edge_weight) {
    GraphBetSpec spec;
    spec.n = n;
    spec.vertex_effects.assign(static_cast<std::size_t>(n), vertex_effect);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) spec.edge_weights[{u, v}] = edge_weight;
    return spec;
}

SparseSpectrum direct_effect_spectrum(int n, double d) {
    SparseSpectrum s(binary_group(n));
    for (int l = 1; l <= n; ++l)
        s.set(s.group.stride(static_cast<std::size_t>(l - 1)), cplx{d, 0.0});
    return s;
}

SparseSpectrum graph_spectrum(const GraphBetSpec& spec) {
    SparseSpectrum s(binary_group(spec.n));
    if (spec.vertex_effects.size() != static_cast<std::size_t>(spec.n))
        throw InvalidIndexError("vertex effect list must have one entry per vertex");

    auto assign = [&](ordinal_t j, double w) {
        if (s.entries.count(j))
            throw InvalidIndexError("coefficient index " + std::to_string(j) +
                                    " assigned twice");
        s.set(j, cplx{w, 0.0});
    };

    for (int v = 1; v <= spec.n; ++v) {
        const double w = spec.vertex_effects[static_cast<std::size_t>(v - 1)];
        if (w != 0.0) assign(index_of_set(s.group, {v}), w);
    }
    for (const auto& [edge, w] : spec.edge_weights) {
        check_label(edge.first, spec.n);
        check_label(edge.second, spec.n);
        if (edge.first >= edge.second) throw InvalidIndexError("edge endpoints must be u < v");
        if (w != 0.0) assign(index_of_set(s.group, {edge.first, edge.second}), w);
    }
    for (const auto& [labels, w] : spec.hyperedges) {
        if (labels.size() < 3)
            throw InvalidIndexError("hyperedges need at least three factors");
        std::vector<int> sorted(labels.begin(), labels.end());
        for (int v : sorted) check_label(v, spec.n);
        if (w != 0.0) assign(index_of_set(s.group, sorted), w);
    }
    return s;
}

BinomialMoments binomial_reference_moments(int n, double d) {
    if (n < 1) throw InvalidIndexError("need at least one factor");
    const double nn = static_cast<double>(n);
    BinomialMoments m{};
    m.sigma2 = nn * d * d;
    m.mu3 = 0.0;
    m.mu4 = (3.0 * nn * nn - 2.0 * nn) * std::pow(d, 4);
    m.mu5 = 0.0;
    m.mu6 = (15.0 * nn * nn * nn - 30.0 * nn * nn + 16.0 * nn) * std::pow(d, 6);
    m.skewness = 0.0;
    m.kurtosis = 3.0 - 2.0 / nn;
    m.hyperskewness = 0.0;
    m.hyperkurtosis = 15.0 - 30.0 / nn + 16.0 / (nn * nn);
    return m;
}

CompleteGraphMoments complete_graph_reference_moments(int n, double a) {
    if (n < 1) throw InvalidIndexError("need at least one vertex");
    const double nn = static_cast<double>(n);
    CompleteGraphMoments m{};
    m.sigma2 = nn + nn * (nn - 1.0) * a * a / 2.0;
    m.mu3 = -3.0 * nn * (nn - 1.0) * a - nn * (nn - 1.0) * (nn - 2.0) * a * a * a;
    m.mu4 = nn * (3.0 * nn - 2.0) + 3.0 * nn * (5.0 * nn * nn - 13.0 * nn + 8.0) * a * a +
            nn * (15.0 * nn * nn * nn - 78.0 * nn * nn + 131.0 * nn - 68.0) *
                std::pow(a, 4) / 4.0;
    return m;
}

} // namespace specmom
