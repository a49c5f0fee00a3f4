#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specmom/function.hpp"

namespace specmom {

/// One canonical term of an m-th moment expansion: a sorted multiset of m
/// coefficient indices whose group sum is zero, weighted by the number of
/// ordered tuples that collapse onto it (m! over the factorials of the
/// repeat counts).
struct Term {
    std::vector<ordinal_t> indices; ///< ascending, size m
    std::uint64_t multiplicity = 1;

    bool operator==(const Term& o) const {
        return indices == o.indices && multiplicity == o.multiplicity;
    }
};

enum class CenterMode { Raw, Central };

struct SymbolicMoment {
    GroupSpec group;
    int order = 0;
    CenterMode mode = CenterMode::Raw;
    std::vector<Term> terms; ///< lexicographic by index multiset
};

inline constexpr std::uint64_t kDefaultNodeGuard = 10'000'000;

/// Every multiset of m indices from `support` (or all of G), excluding index
/// 0 in central mode, whose indices annihilate under group addition.
/// Enumerates by sorted backtracking over the first m-1 indices with the last
/// one forced by negating the partial sum. Throws ResourceLimitError when the
/// backtracking frontier passes `node_guard`.
SymbolicMoment annihilating_terms(const GroupSpec& g, int m, CenterMode mode,
                                  const std::optional<std::vector<ordinal_t>>& support =
                                      std::nullopt,
                                  std::uint64_t node_guard = kDefaultNodeGuard);

/// sum over terms of multiplicity * product of a-diminished coefficients.
cplx evaluate(const SymbolicMoment& sym, const SparseSpectrum& s,
              MomentCenter a = MomentCenter::raw());

/// Per-term contributions, in the symbolic term order.
std::vector<cplx> evaluate_terms(const SymbolicMoment& sym, const SparseSpectrum& s,
                                 MomentCenter a = MomentCenter::raw());

enum class Notation { Decimal, Binary, Set };

/// Human-readable grouped expansion, multiplicity classes ascending and
/// each class in lexicographic multiset order, e.g.
/// "fh0^3 + ... + 3(fh0 fh1^2 + ...) + 6(...)". Binary and set notation
/// require an all-binary group.
std::string render(const SymbolicMoment& sym, Notation notation = Notation::Decimal);

/// The grouped closed forms of the central moments on all-binary groups for
/// m = 2..6 (coefficient families 1; 6; 1,6,24; 20,60,120; 1,15,90,120,360,720).
/// Agrees with the general engine; kept as an independent route.
cplx z2n_central_closed_form(const SparseSpectrum& s, int m);

struct FeasibilityOrder {
    int order = 0;
    cplx value{};     ///< moment implied by the candidate phases
    cplx target{};
    double residual = 0.0;
    std::vector<Term> terms;           ///< the contributing terms
    std::vector<cplx> contributions;   ///< aligned with `terms`
};

struct FeasibilityReport {
    std::vector<FeasibilityOrder> orders;
    double max_residual = 0.0;
};

/// Residuals |target_m - implied moment| for a candidate phase assignment on
/// a known-magnitude spectrum; exposes per-term contributions for search
/// heuristics. Magnitude and phase maps must have identical supports.
FeasibilityReport feasibility_residual(const GroupSpec& g,
                                       const std::map<ordinal_t, double>& magnitudes,
                                       const std::map<ordinal_t, double>& phases,
                                       const std::map<int, cplx>& targets,
                                       CenterMode mode,
                                       std::uint64_t node_guard = kDefaultNodeGuard);

/// Targets for a normal-shape constraint: third moment 0 and fourth moment
/// 3 sigma^4.
std::map<int, cplx> gaussian_targets(double variance);

} // namespace specmom
