#pragma once

#include "pgr/arity.hpp"
#include "pgr/verify.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace pgr {

// Identity of a group element. For adiag(C_k, C_k) the pair (m, n) holds the
// generator exponents of the upper-right and lower-left antidiagonal entries;
// for a group derived from C_k, `m` is the element of Z_k and `n` is 0.
//
// Keys order by (n, m), which is the order of the legacy labels
// g_i with i = k*n + m + 1.
struct GroupKey {
    std::uint32_t m = 0;
    std::uint32_t n = 0;

    friend bool operator==(const GroupKey&, const GroupKey&) = default;
    friend std::strong_ordering operator<=>(const GroupKey& a, const GroupKey& b) {
        if (auto c = a.n <=> b.n; c != 0) return c;
        return a.m <=> b.m;
    }
};

// A finite n-ary group. Immutable after construction.
class NaryGroup {
public:
    enum class Kind { adiag_cyclic, derived_cyclic };

    // Ternary group of antidiagonal 2x2 matrices over C_k (k^2 elements).
    static NaryGroup adiag_cyclic(std::uint32_t k);
    // The n-ary group obtained by iterating the binary operation of C_k.
    static NaryGroup derived_cyclic(std::uint32_t k, Arity arity);

    Kind kind() const noexcept { return kind_; }
    std::uint32_t order_k() const noexcept { return k_; }
    Arity arity() const noexcept { return arity_; }
    std::size_t size() const noexcept;
    std::string label() const;

    bool contains(const GroupKey& g) const noexcept;
    // Throws KeyRangeError when g is outside the universe.
    void require(const GroupKey& g) const;

    GroupKey mul(std::span<const GroupKey> polyad) const;
    GroupKey quer(const GroupKey& g) const;
    NaryOp<GroupKey> op() const;

    // Deterministic enumeration in GroupKey order.
    std::vector<GroupKey> elements() const;

    // 1-based legacy label and its inverse.
    std::size_t legacy_index(const GroupKey& g) const;
    GroupKey from_legacy_index(std::size_t index) const;

    std::string render(const GroupKey& g) const;

private:
    NaryGroup(Kind kind, std::uint32_t k, Arity arity) : kind_(kind), k_(k), arity_(arity) {}

    Kind kind_;
    std::uint32_t k_;
    Arity arity_;
};

// Free-function surface over NaryGroup.
GroupKey gmul(const NaryGroup& group, std::span<const GroupKey> polyad);
GroupKey gquer(const NaryGroup& group, const GroupKey& g);
std::vector<GroupKey> gelements(const NaryGroup& group);

// Every e with mul[x, e, ..., e] = x for all x, x placed first or last.
std::vector<GroupKey> gidentities(const NaryGroup& group);

// Every (n-1)-tuple t with mul[x, t] = x and mul[t, x] = x for all x.
std::vector<std::vector<GroupKey>> gneutral_polyads(const NaryGroup& group);

bool gidempotent_check(const NaryGroup& group, const GroupKey& g, Arity ell);

Domain<GroupKey> group_domain(const NaryGroup& group);

}  // namespace pgr
