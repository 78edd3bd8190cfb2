#include "pgr/pring.hpp"

#include <algorithm>

namespace pgr {

PolyadicRing PolyadicRing::jroot(unsigned q, std::optional<BigInt> modulus) {
    if (q < 1) throw DomainError("root order q must be at least 1");
    if (modulus && *modulus < 2) throw DomainError("modulus must be at least 2");
    return PolyadicRing(q, std::move(modulus), Carrier::integers);
}

PolyadicRing PolyadicRing::odd_jroot(unsigned q) {
    if (q < 1) throw DomainError("root order q must be at least 1");
    return PolyadicRing(q, std::nullopt, Carrier::odd_integers);
}

std::string PolyadicRing::symbol() const {
    if (q_ == 1) return "";
    if (q_ == 2) return "j";
    return "j" + std::to_string(q_);
}

std::string PolyadicRing::label() const {
    std::string out = q_ == 1 ? "Z" : symbol() + "Z";
    if (carrier_ == Carrier::odd_integers) out = (q_ == 1 ? "" : symbol()) + "(2Z+1)";
    if (modulus_) out += " mod " + modulus_->str();
    if (adjoined_zero_) out += " + zdot";
    return out;
}

RingScalar PolyadicRing::scalar(BigInt k) const {
    if (modulus_) {
        k %= *modulus_;
        if (k < 0) k += *modulus_;
    }
    return RingScalar::of(std::move(k));
}

bool PolyadicRing::contains(const RingScalar& r) const {
    if (r.adjoined_zero) return adjoined_zero_;
    if (modulus_ && (r.k < 0 || r.k >= *modulus_)) return false;
    if (carrier_ == Carrier::odd_integers && (r.k % 2) == 0) return false;
    return true;
}

void PolyadicRing::require(const RingScalar& r) const {
    if (!contains(r)) throw DomainError(render(r) + " is not an element of " + label());
}

RingScalar PolyadicRing::checked(RingScalar r, const char* what) const {
    if (!contains(r)) throw DomainError(std::string(what) + " " + render(r) + " leaves " + label());
    return r;
}

RingScalar PolyadicRing::add(std::span<const RingScalar> polyad) const {
    if (polyad.size() != add_arity()) throw ArityMismatch(label() + " addition", add_arity(), polyad.size());
    BigInt total = 0;
    bool any_proper = false;
    for (const auto& r : polyad) {
        require(r);
        if (r.adjoined_zero) continue;
        total += r.k;
        any_proper = true;
    }
    if (!any_proper) return RingScalar::dotted_zero();
    return checked(scalar(std::move(total)), "sum");
}

RingScalar PolyadicRing::mul(std::span<const RingScalar> polyad) const {
    if (polyad.size() != mul_arity()) {
        throw ArityMismatch(label() + " multiplication", mul_arity(), polyad.size());
    }
    BigInt product = 1;
    bool absorbed = false;
    for (const auto& r : polyad) {
        require(r);
        if (r.adjoined_zero) absorbed = true;
        product *= r.k;
    }
    if (absorbed) return RingScalar::dotted_zero();
    if (q_ > 1) product = -product;
    return checked(scalar(std::move(product)), "product");
}

NaryOp<RingScalar> PolyadicRing::add_op() const {
    return {add_arity(), [ring = *this](std::span<const RingScalar> p) { return ring.add(p); }};
}

NaryOp<RingScalar> PolyadicRing::mul_op() const {
    return {mul_arity(), [ring = *this](std::span<const RingScalar> p) { return ring.mul(p); }};
}

RingScalar PolyadicRing::sum(std::span<const RingScalar> terms) const {
    const Arity m = add_arity();
    if (terms.size() == 1) return terms.front();
    if (terms.empty() || (terms.size() - 1) % (m - 1) != 0) {
        const auto z = zero();
        if (!z) throw NoZero("summing " + std::to_string(terms.size()) + " terms in " + label() + " needs a zero");
        if (terms.empty()) return *z;
        std::vector<RingScalar> padded(terms.begin(), terms.end());
        while ((padded.size() - 1) % (m - 1) != 0) padded.push_back(*z);
        return iterate_word(add_op(), std::span<const RingScalar>(padded));
    }
    return iterate_word(add_op(), terms);
}

std::optional<RingScalar> PolyadicRing::zero() const {
    if (adjoined_zero_) return RingScalar::dotted_zero();
    if (carrier_ == Carrier::odd_integers) return std::nullopt;
    return RingScalar::of(0);
}

bool PolyadicRing::is_zero(const RingScalar& r) const {
    const auto z = zero();
    return z && *z == r;
}

std::vector<RingScalar> PolyadicRing::elements() const {
    if (!modulus_) throw InfiniteUniverse(label() + " is infinite");
    std::vector<RingScalar> out;
    if (adjoined_zero_) out.push_back(RingScalar::dotted_zero());
    for (BigInt k = 0; k < *modulus_; ++k) out.push_back(RingScalar::of(k));
    return out;
}

std::string PolyadicRing::render(const RingScalar& r) const {
    if (r.adjoined_zero) return "zdot";
    if (r.k == 0) return "0";
    return r.k.str() + symbol();
}

PolyadicRing PolyadicRing::with_adjoined_zero() const {
    PolyadicRing out = *this;
    out.adjoined_zero_ = true;
    return out;
}

RingScalar radd(const PolyadicRing& ring, std::span<const RingScalar> polyad) { return ring.add(polyad); }

RingScalar rmul(const PolyadicRing& ring, std::span<const RingScalar> polyad) { return ring.mul(polyad); }

std::optional<RingScalar> rzero(const PolyadicRing& ring) { return ring.zero(); }

namespace {

// Probe set for laws over Z; every law here is linear or monomial in the
// probed coefficient, so a handful of values of both signs suffices.
std::vector<RingScalar> probes(const PolyadicRing& ring) {
    if (ring.is_finite()) return ring.elements();
    std::vector<RingScalar> out;
    for (int k : {1, -1, 2, -3, 5, 7, -11}) {
        auto r = ring.scalar(k);
        if (ring.contains(r)) out.push_back(r);
    }
    return out;
}

bool neutral_on_probes(const PolyadicRing& ring, const RingScalar& e) {
    const auto op = ring.mul_op();
    const auto xs = probes(ring);
    return std::all_of(xs.begin(), xs.end(),
                       [&](const RingScalar& x) { return is_neutral_for(op, e, x, Placement::every_position); });
}

}  // namespace

std::vector<RingScalar> ridentity_search(const PolyadicRing& ring) {
    std::vector<RingScalar> candidates;
    if (ring.is_finite()) {
        candidates = ring.elements();
    } else if (ring.q() == 1) {
        candidates = {ring.scalar(1)};
    } else if (ring.q() % 2 == 1) {
        // -e^q = 1 has the integer root e = -1 only for odd q.
        candidates = {ring.scalar(-1)};
    }
    std::vector<RingScalar> out;
    for (const auto& e : candidates) {
        if (ring.contains(e) && neutral_on_probes(ring, e)) out.push_back(e);
    }
    return out;
}

RingScalar rquer(const PolyadicRing& ring, const RingScalar& r) {
    if (ring.mul_arity() < 3) throw DomainError("querelements need multiplication arity of at least 3");
    if (!ring.contains(r)) throw DomainError(ring.render(r) + " is not an element of " + ring.label());
    if (ring.is_zero(r) || r.adjoined_zero || r.k == 0) {
        throw NotFound("the zero is absorbing and has no querelement");
    }

    const auto op = ring.mul_op();
    if (ring.is_finite()) {
        for (const auto& candidate : ring.elements()) {
            if (candidate.adjoined_zero) continue;
            if (is_querelement_of(op, candidate, r)) return candidate;
        }
    } else if (r.k == 1 || r.k == -1) {
        // -rbar * k^q = k, so rbar = -k^(q-1) for k = +-1.
        BigInt rbar = -boost::multiprecision::pow(r.k, ring.q() - 1);
        const auto candidate = ring.scalar(rbar);
        if (ring.contains(candidate) && is_querelement_of(op, candidate, r)) return candidate;
    }
    throw NotFound(ring.render(r) + " has no querelement in " + ring.label());
}

std::vector<RingScalar> runits(const PolyadicRing& ring) {
    std::vector<RingScalar> candidates =
        ring.is_finite() ? ring.elements() : std::vector<RingScalar>{ring.scalar(-1), ring.scalar(1)};
    std::vector<RingScalar> out;
    for (const auto& r : candidates) {
        if (!ring.contains(r)) continue;
        try {
            rquer(ring, r);
            out.push_back(r);
        } catch (const NotFound&) {
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PolyadicRing radjoin_zero(const PolyadicRing& ring) {
    if (ring.zero()) return ring;
    return ring.with_adjoined_zero();
}

bool rnilpotent_check(const PolyadicRing& ring, const RingScalar& r, Arity ell) {
    const auto z = ring.zero();
    if (!z) throw NoZero(ring.label() + " has no zero");
    return polyadic_power(ring.mul_op(), r, ell) == *z;
}

RingScalar random_scalar(const PolyadicRing& ring, Rng& rng, std::int64_t lo, std::int64_t hi) {
    if (ring.is_finite()) {
        const auto n = static_cast<std::int64_t>(*ring.modulus());
        return ring.scalar(rng.uniform(0, n - 1));
    }
    if (ring.carrier() == PolyadicRing::Carrier::odd_integers) {
        std::int64_t k = rng.uniform(lo, hi);
        if (k % 2 == 0) k += k < hi ? 1 : -1;
        return ring.scalar(k);
    }
    return ring.scalar(rng.uniform(lo, hi));
}

Domain<RingScalar> ring_domain(const PolyadicRing& ring, std::int64_t lo, std::int64_t hi) {
    Domain<RingScalar> d;
    if (ring.is_finite()) d.universe = ring.elements();
    d.sampler = [ring, lo, hi](Rng& rng) { return random_scalar(ring, rng, lo, hi); };
    d.render = [ring](const RingScalar& r) { return ring.render(r); };
    return d;
}

}  // namespace pgr
