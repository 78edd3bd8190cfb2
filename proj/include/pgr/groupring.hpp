#pragma once

#include "pgr/arity.hpp"
#include "pgr/ngroup.hpp"
#include "pgr/pring.hpp"
#include "pgr/verify.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pgr {

using RawSupport = std::map<GroupKey, RingScalar>;

// A finite formal sum of group elements with ring coefficients, always in
// canonical form: no coefficient equals the ring zero and keys iterate in
// GroupKey order. The zero of the group ring is the empty support.
class GroupRingElement {
public:
    GroupRingElement() = default;

    const RawSupport& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t support_size() const noexcept { return terms_.size(); }

    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

private:
    friend class GroupRingContext;
    explicit GroupRingElement(RawSupport terms) : terms_(std::move(terms)) {}

    RawSupport terms_;
};

// Ring, group and validated arity profile of a group ring R[G].
class GroupRingContext {
public:
    // Validates the profile against the ring's (m_r, n_r) and the group's n_g.
    GroupRingContext(PolyadicRing ring, NaryGroup group, Arity ell_m = 1, Arity ell_n = 1, Arity ell_g = 1);

    const PolyadicRing& ring() const noexcept { return ring_; }
    const NaryGroup& group() const noexcept { return group_; }
    const ArityProfile& profile() const noexcept { return profile_; }
    Arity add_arity() const noexcept { return profile_.add_arity; }
    Arity mul_arity() const noexcept { return profile_.mul_arity; }

    // Upper bound on the number of Cartesian-product combinations one
    // multiplication may expand.
    std::uint64_t mul_budget() const noexcept { return mul_budget_; }
    void set_mul_budget(std::uint64_t budget) noexcept { mul_budget_ = budget; }

    // Drops zero coefficients and validates keys and scalars.
    GroupRingElement normalize(RawSupport raw) const;
    GroupRingElement monomial(const RingScalar& r, const GroupKey& g) const;

    std::string render(const GroupRingElement& x) const;

private:
    PolyadicRing ring_;
    NaryGroup group_;
    ArityProfile profile_;
    std::uint64_t mul_budget_ = 10'000'000;
};

GroupRingElement normalize(const GroupRingContext& ctx, RawSupport raw);

// Componentwise M_r-ary addition; missing keys contribute the ring zero.
GroupRingElement gr_add(const GroupRingContext& ctx, std::span<const GroupRingElement> operands);

// One term of the N_r-fold product expansion: the chosen term of each operand
// and the resulting coefficient and group key.
struct Contribution {
    std::vector<GroupKey> keys;
    std::vector<RingScalar> coefficients;
    GroupKey key;
    RingScalar coefficient;
};

// Expands the Cartesian product of the operand supports, in lexicographic
// order of the term choices (first operand outermost).
std::vector<Contribution> gr_mul_expand(const GroupRingContext& ctx, std::span<const GroupRingElement> operands);

// Gathers contributions with equal keys by ring addition, then normalizes.
GroupRingElement gather(const GroupRingContext& ctx, std::span<const Contribution> contributions);

GroupRingElement gr_mul(const GroupRingContext& ctx, std::span<const GroupRingElement> operands);

// Replaces each coefficient r by mul[l_1, ..., l_{n_r-1}, r].
GroupRingElement gr_scalar_action(const GroupRingContext& ctx, std::span<const RingScalar> lambdas,
                                  const GroupRingElement& x);

GroupRingElement gr_zero(const GroupRingContext& ctx);

// e_R * e_G for each ring identity and group identity, kept when neutral for
// the group ring multiplication with the subject first or last.
std::vector<GroupRingElement> gr_trivial_identities(const GroupRingContext& ctx);

// Querelement of x; throws NotFound when none is located within the search
// bound (not a proof that none exists).
GroupRingElement gr_quer(const GroupRingContext& ctx, const GroupRingElement& x,
                         std::uint64_t search_budget = 200'000);

RingScalar augmentation(const GroupRingContext& ctx, const GroupRingElement& x);
bool in_augmentation_ideal(const GroupRingContext& ctx, const GroupRingElement& x);

// All canonical elements of a finite group ring (|R|^|G| of them).
std::vector<GroupRingElement> enumerate_elements(const GroupRingContext& ctx, std::uint64_t budget = 1'000'000);

NaryOp<GroupRingElement> gr_add_op(const GroupRingContext& ctx);
NaryOp<GroupRingElement> gr_mul_op(const GroupRingContext& ctx);

// Support of 1..max_support distinct keys, coefficients per random_scalar.
GroupRingElement random_element(const GroupRingContext& ctx, Rng& rng, std::size_t max_support = 2,
                                std::int64_t lo = -50, std::int64_t hi = 50);
Domain<GroupRingElement> element_domain(const GroupRingContext& ctx, std::size_t max_support = 2);

// eps(add[x_1..x_M]) = (nu_R)^ell_m[eps(x_1)..] and
// eps(mul[x_1..x_N]) = (mu_R)^ell_n[eps(x_1)..], as two reports.
std::vector<Checked<GroupRingElement>> check_augmentation_homomorphism(const GroupRingContext& ctx,
                                                                      const CheckMode& mode,
                                                                      std::size_t max_support = 2);

// One expected expansion term, as a reference table states it.
struct ExpectedTerm {
    RingScalar coefficient;
    GroupKey key;
};

struct Reconciliation {
    bool coefficients_match = false;      // multisets of coefficients agree
    std::vector<std::string> notes;       // one per term whose key disagrees
    std::size_t disagreeing_terms = 0;
};

// Compares an expansion with a reference table term by term (same order).
Reconciliation reconcile_expansion(const GroupRingContext& ctx, std::span<const Contribution> computed,
                                   std::span<const ExpectedTerm> expected);

}  // namespace pgr
