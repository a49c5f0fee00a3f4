#include "specmom/group.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace specmom {

namespace {

Ordering default_ordering(const std::vector<std::uint32_t>& moduli) {
    const bool all_two =
        std::all_of(moduli.begin(), moduli.end(), [](std::uint32_t n) { return n == 2; });
    return all_two ? Ordering::LeastSignificantFirst : Ordering::MostSignificantFirst;
}

} // namespace

GroupSpec::GroupSpec(std::vector<std::uint32_t> moduli)
    : GroupSpec(moduli, default_ordering(moduli)) {}

GroupSpec::GroupSpec(std::vector<std::uint32_t> moduli, Ordering ordering)
    : moduli_(std::move(moduli)), ordering_(ordering) {
    if (moduli_.empty()) throw InvalidIndexError("group needs at least one factor");
    for (std::uint32_t n : moduli_) {
        if (n < 2) throw InvalidIndexError("every factor modulus must be >= 2");
        if (cardinality_ > std::numeric_limits<ordinal_t>::max() / n)
            throw ResourceLimitError("group cardinality overflows the ordinal type");
        cardinality_ *= n;
    }
    binary_ = std::all_of(moduli_.begin(), moduli_.end(),
                          [](std::uint32_t n) { return n == 2; });

    strides_.assign(moduli_.size(), 1);
    if (ordering_ == Ordering::MostSignificantFirst) {
        for (std::size_t l = moduli_.size(); l-- > 1;)
            strides_[l - 1] = strides_[l] * moduli_[l];
    } else {
        for (std::size_t l = 1; l < moduli_.size(); ++l)
            strides_[l] = strides_[l - 1] * moduli_[l - 1];
    }
}

void GroupSpec::require_valid(const GroupIndex& i) const {
    if (i.digits.size() != moduli_.size())
        throw InvalidIndexError("index has " + std::to_string(i.digits.size()) +
                                " digits, group has rank " + std::to_string(moduli_.size()));
    for (std::size_t l = 0; l < moduli_.size(); ++l)
        if (i.digits[l] >= moduli_[l])
            throw InvalidIndexError("digit " + std::to_string(l + 1) + " out of range");
}

void GroupSpec::require_valid(ordinal_t i) const {
    if (i >= cardinality_)
        throw InvalidIndexError("ordinal " + std::to_string(i) + " out of range for |G| = " +
                                std::to_string(cardinality_));
}

ordinal_t GroupSpec::encode(const GroupIndex& i) const {
    require_valid(i);
    ordinal_t out = 0;
    for (std::size_t l = 0; l < moduli_.size(); ++l) out += i.digits[l] * strides_[l];
    return out;
}

GroupIndex GroupSpec::decode(ordinal_t i) const {
    require_valid(i);
    GroupIndex out;
    out.digits.resize(moduli_.size());
    for (std::size_t l = 0; l < moduli_.size(); ++l) out.digits[l] = digit(i, l);
    return out;
}

std::string GroupSpec::to_string() const {
    const bool uniform = std::all_of(moduli_.begin(), moduli_.end(),
                                     [&](std::uint32_t n) { return n == moduli_[0]; });
    std::ostringstream os;
    if (uniform && moduli_.size() > 1)
        os << moduli_[0] << '^' << moduli_.size();
    else {
        for (std::size_t l = 0; l < moduli_.size(); ++l) {
            if (l) os << 'x';
            os << moduli_[l];
        }
    }
    return os.str();
}

GroupSpec parse_group(const std::string& text) {
    std::string body = text;
    std::optional<Ordering> ord;
    if (auto pos = body.rfind(":msf"); pos != std::string::npos && pos == body.size() - 4) {
        ord = Ordering::MostSignificantFirst;
        body.resize(pos);
    } else if (auto p2 = body.rfind(":lsf"); p2 != std::string::npos && p2 == body.size() - 4) {
        ord = Ordering::LeastSignificantFirst;
        body.resize(p2);
    }
    auto parse_int = [&](const std::string& s) -> std::uint32_t {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("bad group shorthand: '" + text + "'");
        unsigned long v = std::stoul(s);
        if (v < 2 || v > std::numeric_limits<std::uint32_t>::max())
            throw ParseError("group factor out of range in '" + text + "'");
        return static_cast<std::uint32_t>(v);
    };

    std::vector<std::uint32_t> moduli;
    if (auto caret = body.find('^'); caret != std::string::npos) {
        std::uint32_t base = parse_int(body.substr(0, caret));
        std::string exp_s = body.substr(caret + 1);
        if (exp_s.empty() || !std::all_of(exp_s.begin(), exp_s.end(),
                                          [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("bad group shorthand: '" + text + "'");
        unsigned long exp = std::stoul(exp_s);
        if (exp < 1 || exp > 63) throw ParseError("group exponent out of range in '" + text + "'");
        moduli.assign(exp, base);
    } else {
        std::size_t start = 0;
        while (start <= body.size()) {
            std::size_t x = body.find('x', start);
            std::string piece = body.substr(start, x == std::string::npos ? x : x - start);
            moduli.push_back(parse_int(piece));
            if (x == std::string::npos) break;
            start = x + 1;
        }
    }
    return ord ? GroupSpec(std::move(moduli), *ord) : GroupSpec(std::move(moduli));
}

GroupIndex add(const GroupSpec& g, const GroupIndex& i, const GroupIndex& j) {
    g.require_valid(i);
    g.require_valid(j);
    GroupIndex out;
    out.digits.resize(g.rank());
    for (std::size_t l = 0; l < g.rank(); ++l)
        out.digits[l] = (i.digits[l] + j.digits[l]) % g.modulus(l);
    return out;
}

GroupIndex negate(const GroupSpec& g, const GroupIndex& j) {
    g.require_valid(j);
    GroupIndex out;
    out.digits.resize(g.rank());
    for (std::size_t l = 0; l < g.rank(); ++l)
        out.digits[l] = j.digits[l] == 0 ? 0 : g.modulus(l) - j.digits[l];
    return out;
}

GroupIndex subtract(const GroupSpec& g, const GroupIndex& i, const GroupIndex& j) {
    return add(g, i, negate(g, j));
}

ordinal_t add_ord(const GroupSpec& g, ordinal_t i, ordinal_t j) {
    g.require_valid(i);
    g.require_valid(j);
    if (g.is_binary()) return i ^ j;
    ordinal_t out = 0;
    for (std::size_t l = 0; l < g.rank(); ++l) {
        const std::uint32_t d = (g.digit(i, l) + g.digit(j, l)) % g.modulus(l);
        out += d * g.stride(l);
    }
    return out;
}

ordinal_t negate_ord(const GroupSpec& g, ordinal_t j) {
    g.require_valid(j);
    if (g.is_binary()) return j;
    ordinal_t out = 0;
    for (std::size_t l = 0; l < g.rank(); ++l) {
        const std::uint32_t d = g.digit(j, l);
        out += (d == 0 ? 0 : g.modulus(l) - d) * g.stride(l);
    }
    return out;
}

ordinal_t subtract_ord(const GroupSpec& g, ordinal_t i, ordinal_t j) {
    g.require_valid(i);
    g.require_valid(j);
    if (g.is_binary()) return i ^ j;
    ordinal_t out = 0;
    for (std::size_t l = 0; l < g.rank(); ++l) {
        const std::uint32_t di = g.digit(i, l);
        const std::uint32_t dj = g.digit(j, l);
        const std::uint32_t d = di >= dj ? di - dj : di + g.modulus(l) - dj;
        out += d * g.stride(l);
    }
    return out;
}

int degree(const GroupSpec& g, ordinal_t j) {
    if (!g.is_binary())
        throw UnsupportedOperationError("degree is only defined on all-binary groups");
    g.require_valid(j);
    int deg = 0;
    for (std::size_t l = 0; l < g.rank(); ++l) deg += static_cast<int>(g.digit(j, l));
    return deg;
}

std::vector<int> set_repr(const GroupSpec& g, ordinal_t j) {
    if (!g.is_binary())
        throw UnsupportedOperationError("set representation is only defined on all-binary groups");
    g.require_valid(j);
    std::vector<int> labels;
    for (std::size_t l = 0; l < g.rank(); ++l)
        if (g.digit(j, l)) labels.push_back(static_cast<int>(l) + 1);
    return labels;
}

ordinal_t index_of_set(const GroupSpec& g, const std::vector<int>& labels) {
    if (!g.is_binary())
        throw UnsupportedOperationError("set representation is only defined on all-binary groups");
    ordinal_t out = 0;
    for (int label : labels) {
        if (label < 1 || static_cast<std::size_t>(label) > g.rank())
            throw InvalidIndexError("factor label " + std::to_string(label) + " out of range");
        const ordinal_t bit = g.stride(static_cast<std::size_t>(label - 1));
        if (out & bit) throw InvalidIndexError("factor label repeated");
        out += bit;
    }
    return out;
}

SubtractionTable::SubtractionTable(GroupSpec group, std::vector<std::uint32_t> entries)
    : group_(std::move(group)), entries_(std::move(entries)) {
    if (entries_.size() != group_.cardinality() * group_.cardinality())
        throw InvalidIndexError("subtraction table has wrong size");
}

bool SubtractionTable::symmetric() const {
    const ordinal_t n = group_.cardinality();
    for (ordinal_t i = 0; i < n; ++i)
        for (ordinal_t j = i + 1; j < n; ++j)
            if (entry(i, j) != entry(j, i)) return false;
    return true;
}

SubtractionTable subtraction_table(const GroupSpec& g, ordinal_t guard) {
    const ordinal_t n = g.cardinality();
    if (n > guard)
        throw ResourceLimitError("subtraction table guard exceeded: |G| = " + std::to_string(n) +
                                 " > " + std::to_string(guard));
    std::vector<std::uint32_t> entries(n * n);
    for (ordinal_t i = 0; i < n; ++i)
        for (ordinal_t j = 0; j < n; ++j)
            entries[i * n + j] = static_cast<std::uint32_t>(subtract_ord(g, i, j));
    return SubtractionTable(g, std::move(entries));
}

} // namespace specmom
