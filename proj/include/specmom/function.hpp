#pragma once

#include <complex>
#include <map>
#include <vector>

#include "specmom/group.hpp"

namespace specmom {

using cplx = std::complex<double>;

/// Which side of the transform a vector of values lives on.
enum class Side { Primal, Fourier };

/// |G| complex values in ordinal order.
struct DenseFunction {
    GroupSpec group;
    Side side;
    std::vector<cplx> values;

    DenseFunction(GroupSpec g, Side s)
        : group(std::move(g)), side(s), values(group.cardinality(), cplx{}) {}

    DenseFunction(GroupSpec g, Side s, std::vector<cplx> v)
        : group(std::move(g)), side(s), values(std::move(v)) {
        if (values.size() != group.cardinality())
            throw GroupMismatchError("value vector length != |G|");
    }

    cplx& operator[](ordinal_t i) { return values[i]; }
    const cplx& operator[](ordinal_t i) const { return values[i]; }
    ordinal_t size() const { return group.cardinality(); }
};

/// Map from ordinal to coefficient; absent keys are exact zeros and explicit
/// zeros are dropped on insertion.
struct SparseSpectrum {
    GroupSpec group;
    std::map<ordinal_t, cplx> entries;

    explicit SparseSpectrum(GroupSpec g) : group(std::move(g)) {}

    void set(ordinal_t j, cplx value) {
        group.require_valid(j);
        if (value == cplx{})
            entries.erase(j);
        else
            entries[j] = value;
    }

    cplx at(ordinal_t j) const {
        auto it = entries.find(j);
        return it == entries.end() ? cplx{} : it->second;
    }

    std::vector<ordinal_t> support() const {
        std::vector<ordinal_t> s;
        s.reserve(entries.size());
        for (const auto& [j, v] : entries) s.push_back(j);
        return s;
    }
};

/// The centering point a of a general moment.
struct MomentCenter {
    cplx a{0.0, 0.0};

    static MomentCenter raw() { return MomentCenter{}; }
    static MomentCenter at(cplx value) { return MomentCenter{value}; }
};

inline void require_same_group(const GroupSpec& a, const GroupSpec& b) {
    if (a != b) throw GroupMismatchError("operands live on different groups");
}

inline void require_side(const DenseFunction& f, Side s) {
    if (f.side != s)
        throw GroupMismatchError(s == Side::Primal ? "expected a primal-side function"
                                                   : "expected a Fourier-side function");
}

} // namespace specmom
