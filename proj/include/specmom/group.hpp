#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specmom/errors.hpp"

namespace specmom {

using ordinal_t = std::uint64_t;

/// How an n-tuple maps to its ordinal (decimal equivalent).
///
/// MostSignificantFirst:  i = sum_l i_l * prod_{k>l} N_k  (first digit varies slowest)
/// LeastSignificantFirst: i = sum_l i_l * prod_{k<l} N_k  (first digit varies fastest;
///                        on all-binary groups this is i = sum_l i_l 2^(l-1))
enum class Ordering { MostSignificantFirst, LeastSignificantFirst };

/// An element of the group as a digit tuple; digit l lives in [0, N_l).
struct GroupIndex {
    std::vector<std::uint32_t> digits;

    GroupIndex() = default;
    explicit GroupIndex(std::vector<std::uint32_t> d) : digits(std::move(d)) {}

    bool operator==(const GroupIndex& o) const { return digits == o.digits; }
};

/// A finite abelian group Z_{N1} x ... x Z_{Nn} together with the ordinal
/// codec used to flatten its elements. Immutable after construction.
class GroupSpec {
public:
    /// Ordering defaults to LeastSignificantFirst when every modulus is 2
    /// and MostSignificantFirst otherwise.
    explicit GroupSpec(std::vector<std::uint32_t> moduli);
    GroupSpec(std::vector<std::uint32_t> moduli, Ordering ordering);

    std::size_t rank() const { return moduli_.size(); }
    std::uint32_t modulus(std::size_t axis) const { return moduli_[axis]; }
    const std::vector<std::uint32_t>& moduli() const { return moduli_; }
    Ordering ordering() const { return ordering_; }
    ordinal_t cardinality() const { return cardinality_; }
    /// Ordinal distance between consecutive values of digit `axis`.
    ordinal_t stride(std::size_t axis) const { return strides_[axis]; }
    bool is_binary() const { return binary_; }

    bool operator==(const GroupSpec& o) const {
        return moduli_ == o.moduli_ && ordering_ == o.ordering_;
    }
    bool operator!=(const GroupSpec& o) const { return !(*this == o); }

    ordinal_t encode(const GroupIndex& i) const;
    GroupIndex decode(ordinal_t i) const;

    std::uint32_t digit(ordinal_t i, std::size_t axis) const {
        return static_cast<std::uint32_t>((i / strides_[axis]) % moduli_[axis]);
    }

    void require_valid(const GroupIndex& i) const;
    void require_valid(ordinal_t i) const;

    /// Shorthand form: "64", "3x2", "2^13".
    std::string to_string() const;

private:
    std::vector<std::uint32_t> moduli_;
    Ordering ordering_;
    ordinal_t cardinality_ = 1;
    std::vector<ordinal_t> strides_;
    bool binary_ = false;
};

/// Parses the shorthand grammar "64", "3x2", "2^13" (optionally suffixed with
/// ":msf" or ":lsf" to pin the codec).
GroupSpec parse_group(const std::string& text);

// ---- group arithmetic on tuples -------------------------------------------

GroupIndex add(const GroupSpec& g, const GroupIndex& i, const GroupIndex& j);
GroupIndex negate(const GroupSpec& g, const GroupIndex& j);
GroupIndex subtract(const GroupSpec& g, const GroupIndex& i, const GroupIndex& j);

// ---- group arithmetic on ordinals ------------------------------------------

ordinal_t add_ord(const GroupSpec& g, ordinal_t i, ordinal_t j);
ordinal_t negate_ord(const GroupSpec& g, ordinal_t j);
ordinal_t subtract_ord(const GroupSpec& g, ordinal_t i, ordinal_t j);

// ---- all-binary views -------------------------------------------------------

/// Number of participating factors (popcount of the digit tuple).
/// Only defined when every modulus is 2.
int degree(const GroupSpec& g, ordinal_t j);

/// 1-based labels of the participating factors of j, ascending.
std::vector<int> set_repr(const GroupSpec& g, ordinal_t j);

/// Ordinal of the index whose participating-factor set is `labels` (1-based).
ordinal_t index_of_set(const GroupSpec& g, const std::vector<int>& labels);

// ---- subtraction table ------------------------------------------------------

/// The |G| x |G| table with entry (i,j) = encode(i (-) j). Every row and
/// column is a permutation of the ordinals.
class SubtractionTable {
public:
    SubtractionTable(GroupSpec group, std::vector<std::uint32_t> entries);

    const GroupSpec& group() const { return group_; }
    ordinal_t entry(ordinal_t row, ordinal_t col) const {
        return entries_[row * group_.cardinality() + col];
    }
    bool symmetric() const;

private:
    GroupSpec group_;
    std::vector<std::uint32_t> entries_;
};

inline constexpr ordinal_t kDefaultTableGuard = ordinal_t{1} << 14;

/// Materializes the subtraction table. Throws ResourceLimitError when
/// |G| exceeds `guard` (O(|G|^2) memory).
SubtractionTable subtraction_table(const GroupSpec& g,
                                   ordinal_t guard = kDefaultTableGuard);

} // namespace specmom
