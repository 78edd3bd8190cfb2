#pragma once

#include "pgr/arity.hpp"
#include "pgr/verify.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace pgr {

using BigInt = boost::multiprecision::cpp_int;

// Element j_q*k of a j-root ring, stored as its integer coefficient k. The
// adjoined zero of an extended ring is a separate state with k = 0.
struct RingScalar {
    BigInt k = 0;
    bool adjoined_zero = false;

    static RingScalar of(BigInt k) { return {std::move(k), false}; }
    static RingScalar dotted_zero() { return {0, true}; }

    friend bool operator==(const RingScalar& a, const RingScalar& b) {
        return a.adjoined_zero == b.adjoined_zero && a.k == b.k;
    }
    friend std::strong_ordering operator<=>(const RingScalar& a, const RingScalar& b) {
        if (a.adjoined_zero != b.adjoined_zero) {
            return a.adjoined_zero ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        if (a.k < b.k) return std::strong_ordering::less;
        if (b.k < a.k) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

// The (2, q+1)-ring j_q*Z with j_q^q = -1, optionally reduced mod N.
//
// Binary addition adds coefficients. The (q+1)-ary product of j_q*k_i is
// j_q^(q+1) * prod k_i = -j_q * prod k_i, so its coefficient is -prod k_i.
// q = 1 is taken as the ordinary integers with the plain binary product.
class PolyadicRing {
public:
    enum class Carrier { integers, odd_integers };

    static PolyadicRing jroot(unsigned q, std::optional<BigInt> modulus = std::nullopt);
    // The zeroless multiplicative substructure {j_q*k : k odd} over Z.
    static PolyadicRing odd_jroot(unsigned q);

    unsigned q() const noexcept { return q_; }
    Arity add_arity() const noexcept { return 2; }
    Arity mul_arity() const noexcept { return Arity{q_} + 1; }
    const std::optional<BigInt>& modulus() const noexcept { return modulus_; }
    bool is_finite() const noexcept { return modulus_.has_value(); }
    Carrier carrier() const noexcept { return carrier_; }
    bool has_adjoined_zero() const noexcept { return adjoined_zero_; }

    // "" for q = 1, "j" for q = 2, "j<q>" otherwise.
    std::string symbol() const;
    std::string label() const;

    // Reduces k when the ring is modular.
    RingScalar scalar(BigInt k) const;
    bool contains(const RingScalar& r) const;

    RingScalar add(std::span<const RingScalar> polyad) const;
    RingScalar mul(std::span<const RingScalar> polyad) const;
    NaryOp<RingScalar> add_op() const;
    NaryOp<RingScalar> mul_op() const;

    // Sum of any number of terms by iterated addition, padding with the zero up
    // to the next admissible length. Empty input yields the zero.
    RingScalar sum(std::span<const RingScalar> terms) const;

    std::optional<RingScalar> zero() const;
    bool is_zero(const RingScalar& r) const;

    // Finite rings only; throws InfiniteUniverse otherwise.
    std::vector<RingScalar> elements() const;

    std::string render(const RingScalar& r) const;

    PolyadicRing with_adjoined_zero() const;

private:
    PolyadicRing(unsigned q, std::optional<BigInt> modulus, Carrier carrier)
        : q_(q), modulus_(std::move(modulus)), carrier_(carrier) {}

    void require(const RingScalar& r) const;
    RingScalar checked(RingScalar r, const char* what) const;

    unsigned q_;
    std::optional<BigInt> modulus_;
    Carrier carrier_;
    bool adjoined_zero_ = false;
};

RingScalar radd(const PolyadicRing& ring, std::span<const RingScalar> polyad);
RingScalar rmul(const PolyadicRing& ring, std::span<const RingScalar> polyad);
std::optional<RingScalar> rzero(const PolyadicRing& ring);

// Every e with mul[r, e, ..., e] = r for all r. Exhaustive for finite rings;
// over Z this is decided analytically from sign * e^q = 1.
std::vector<RingScalar> ridentity_search(const PolyadicRing& ring);

// Querelement of a nonzero r; throws NotFound when r is not a unit.
RingScalar rquer(const PolyadicRing& ring, const RingScalar& r);
std::vector<RingScalar> runits(const PolyadicRing& ring);

// Returns the ring unchanged when it already has a zero.
PolyadicRing radjoin_zero(const PolyadicRing& ring);

// Throws NoZero when the ring has no zero.
bool rnilpotent_check(const PolyadicRing& ring, const RingScalar& r, Arity ell);

// Coefficients uniform in [lo, hi] over Z (odd values for the odd carrier),
// uniform over Z_N for modular rings.
RingScalar random_scalar(const PolyadicRing& ring, Rng& rng, std::int64_t lo = -50, std::int64_t hi = 50);

Domain<RingScalar> ring_domain(const PolyadicRing& ring, std::int64_t lo = -50, std::int64_t hi = 50);

}  // namespace pgr
