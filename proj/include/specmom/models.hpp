#pragma once

#include <map>
#include <set>
#include <vector>

#include "specmom/function.hpp"

namespace specmom {

/// A bet design on n binary factors: vertex payoffs are degree-1
/// coefficients, pairwise bets are degree-2, larger side bets are hyperedges.
struct GraphBetSpec {
    int n = 0;
    std::vector<double> vertex_effects;                 ///< size n, label v -> effect
    std::map<std::pair<int, int>, double> edge_weights; ///< u < v, 1-based labels
    std::map<std::set<int>, double> hyperedges;         ///< |set| >= 3

    static GraphBetSpec complete(int n, double vertex_effect, double edge_weight);
};

/// Spectrum of n independent binary factors with equal effect d: value d at
/// every degree-1 index, zero elsewhere.
SparseSpectrum direct_effect_spectrum(int n, double d);

/// Spectrum of a bet design; throws on out-of-range labels or duplicate
/// assignments.
SparseSpectrum graph_spectrum(const GraphBetSpec& spec);

/// Closed-form central and standardized moments for n independent binary
/// factors with equal effect d.
struct BinomialMoments {
    double sigma2, mu3, mu4, mu5, mu6;
    double skewness, kurtosis, hyperskewness, hyperkurtosis;
};
BinomialMoments binomial_reference_moments(int n, double d);

/// Closed-form sigma^2, mu3, mu4 for the complete graph on n vertices with
/// unit vertex effects and edge weight -a.
struct CompleteGraphMoments {
    double sigma2, mu3, mu4;
};
CompleteGraphMoments complete_graph_reference_moments(int n, double a);

} // namespace specmom
