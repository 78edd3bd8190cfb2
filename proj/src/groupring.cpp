#include "pgr/groupring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pgr {

GroupRingContext::GroupRingContext(PolyadicRing ring, NaryGroup group, Arity ell_m, Arity ell_n, Arity ell_g)
    : ring_(std::move(ring)),
      group_(std::move(group)),
      profile_(validate_profile(ring_.add_arity(), ring_.mul_arity(), group_.arity(), ell_m, ell_n, ell_g)) {}

GroupRingElement GroupRingContext::normalize(RawSupport raw) const {
    for (auto it = raw.begin(); it != raw.end();) {
        group_.require(it->first);
        if (!ring_.contains(it->second)) {
            throw DomainError(ring_.render(it->second) + " is not an element of " + ring_.label());
        }
        if (ring_.is_zero(it->second)) {
            it = raw.erase(it);
        } else {
            ++it;
        }
    }
    return GroupRingElement(std::move(raw));
}

GroupRingElement GroupRingContext::monomial(const RingScalar& r, const GroupKey& g) const {
    return normalize(RawSupport{{g, r}});
}

std::string GroupRingContext::render(const GroupRingElement& x) const {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [key, r] : x.terms()) {
        if (!out.empty()) out += " + ";
        out += ring_.render(r) + "*" + group_.render(key);
    }
    return out;
}

GroupRingElement normalize(const GroupRingContext& ctx, RawSupport raw) { return ctx.normalize(std::move(raw)); }

GroupRingElement gr_add(const GroupRingContext& ctx, std::span<const GroupRingElement> operands) {
    const Arity arity = ctx.add_arity();
    if (operands.size() != arity) throw ArityMismatch("group ring addition", arity, operands.size());

    std::set<GroupKey> keys;
    for (const auto& x : operands) {
        for (const auto& [key, r] : x.terms()) keys.insert(key);
    }
    const auto z = ctx.ring().zero();
    const auto add = ctx.ring().add_op();

    RawSupport out;
    std::vector<RingScalar> column(operands.size());
    for (const auto& key : keys) {
        for (std::size_t i = 0; i < operands.size(); ++i) {
            const auto& terms = operands[i].terms();
            if (auto it = terms.find(key); it != terms.end()) {
                column[i] = it->second;
            } else if (z) {
                column[i] = *z;
            } else {
                throw NoZero("operand " + std::to_string(i) + " lacks " + ctx.group().render(key) + " and " +
                             ctx.ring().label() + " has no zero");
            }
        }
        out[key] = iterate_op(add, ctx.profile().ell_m, column);
    }
    return ctx.normalize(std::move(out));
}

std::vector<Contribution> gr_mul_expand(const GroupRingContext& ctx, std::span<const GroupRingElement> operands) {
    const Arity arity = ctx.mul_arity();
    if (operands.size() != arity) throw ArityMismatch("group ring multiplication", arity, operands.size());

    std::uint64_t combinations = 1;
    for (const auto& x : operands) {
        if (__builtin_mul_overflow(combinations, x.support_size(), &combinations) ||
            combinations > ctx.mul_budget()) {
            throw BudgetExceeded("product expands to more than " + std::to_string(ctx.mul_budget()) +
                                 " combinations");
        }
    }
    if (combinations == 0) return {};

    std::vector<std::vector<std::pair<GroupKey, RingScalar>>> supports;
    for (const auto& x : operands) supports.emplace_back(x.terms().begin(), x.terms().end());

    const auto ring_mul = ctx.ring().mul_op();
    const auto group_mul = ctx.group().op();
    const Arity ell_n = ctx.profile().ell_n;
    const Arity ell_g = ctx.profile().ell_g;

    std::vector<Contribution> out;
    out.reserve(combinations);
    std::vector<std::size_t> digits(operands.size(), 0);
    for (std::uint64_t c = 0; c < combinations; ++c) {
        Contribution term;
        for (std::size_t i = 0; i < operands.size(); ++i) {
            term.keys.push_back(supports[i][digits[i]].first);
            term.coefficients.push_back(supports[i][digits[i]].second);
        }
        term.coefficient = iterate_op(ring_mul, ell_n, term.coefficients);
        term.key = iterate_op(group_mul, ell_g, term.keys);
        out.push_back(std::move(term));
        for (std::size_t j = digits.size(); j-- > 0;) {
            if (++digits[j] < supports[j].size()) break;
            digits[j] = 0;
        }
    }
    return out;
}

GroupRingElement gather(const GroupRingContext& ctx, std::span<const Contribution> contributions) {
    std::map<GroupKey, std::vector<RingScalar>> buckets;
    for (const auto& c : contributions) buckets[c.key].push_back(c.coefficient);
    RawSupport out;
    for (const auto& [key, coefficients] : buckets) {
        out[key] = ctx.ring().sum(std::span<const RingScalar>(coefficients));
    }
    return ctx.normalize(std::move(out));
}

GroupRingElement gr_mul(const GroupRingContext& ctx, std::span<const GroupRingElement> operands) {
    const auto contributions = gr_mul_expand(ctx, operands);
    return gather(ctx, contributions);
}

GroupRingElement gr_scalar_action(const GroupRingContext& ctx, std::span<const RingScalar> lambdas,
                                  const GroupRingElement& x) {
    const Arity slots = ctx.ring().mul_arity() - 1;
    if (lambdas.size() != slots) throw ArityMismatch("scalar action", slots, lambdas.size());
    RawSupport out;
    std::vector<RingScalar> polyad(lambdas.begin(), lambdas.end());
    polyad.emplace_back();
    for (const auto& [key, r] : x.terms()) {
        polyad.back() = r;
        out[key] = ctx.ring().mul(polyad);
    }
    return ctx.normalize(std::move(out));
}

GroupRingElement gr_zero(const GroupRingContext& ctx) {
    if (!ctx.ring().zero()) throw NoZero(ctx.ring().label() + " has no zero");
    return {};
}

namespace {

// Monomials r*g over all group elements. Multiplication distributes over the
// gathering sum, so laws of the form mul[x, e, ...] = x hold for every element
// once they hold on monomials.
std::vector<GroupRingElement> monomial_probes(const GroupRingContext& ctx) {
    std::vector<RingScalar> coefficients;
    if (ctx.ring().is_finite()) {
        for (const auto& r : ctx.ring().elements()) {
            if (!ctx.ring().is_zero(r)) coefficients.push_back(r);
        }
    } else {
        for (int k : {1, -1, 2, -3, 7}) {
            auto r = ctx.ring().scalar(k);
            if (ctx.ring().contains(r)) coefficients.push_back(r);
        }
    }
    std::vector<GroupRingElement> out;
    for (const auto& g : ctx.group().elements()) {
        for (const auto& r : coefficients) out.push_back(ctx.monomial(r, g));
    }
    return out;
}

std::set<GroupKey> support_closure(const GroupRingContext& ctx, const GroupRingElement& x) {
    const auto& group = ctx.group();
    std::set<GroupKey> closure;
    for (const auto& [key, r] : x.terms()) closure.insert(key);

    const auto all = group.elements();
    const std::size_t n = group.arity();
    for (bool grew = true; grew;) {
        grew = false;
        const std::vector<GroupKey> current(closure.begin(), closure.end());
        const auto tuples = detail::checked_pow(current.size(), n);
        if (!tuples || *tuples > 100'000) return {all.begin(), all.end()};
        for (const auto& g : current) grew |= closure.insert(group.quer(g)).second;
        std::vector<std::size_t> digits(n, 0);
        std::vector<GroupKey> polyad(n);
        for (std::uint64_t c = 0; c < *tuples; ++c) {
            for (std::size_t j = 0; j < n; ++j) polyad[j] = current[digits[j]];
            grew |= closure.insert(group.mul(polyad)).second;
            for (std::size_t j = n; j-- > 0;) {
                if (++digits[j] < current.size()) break;
                digits[j] = 0;
            }
        }
    }
    return closure;
}

}  // namespace

std::vector<GroupRingElement> gr_trivial_identities(const GroupRingContext& ctx) {
    const auto ring_ids = ridentity_search(ctx.ring());
    if (ring_ids.empty()) return {};
    const auto group_ids = gidentities(ctx.group());
    const auto op = gr_mul_op(ctx);
    const auto probes = monomial_probes(ctx);

    std::vector<GroupRingElement> out;
    for (const auto& e_r : ring_ids) {
        for (const auto& e_g : group_ids) {
            const auto candidate = ctx.monomial(e_r, e_g);
            const bool neutral = std::all_of(probes.begin(), probes.end(), [&](const GroupRingElement& x) {
                return is_neutral_for(op, candidate, x, Placement::outer_positions);
            });
            if (neutral) out.push_back(candidate);
        }
    }
    return out;
}

GroupRingElement gr_quer(const GroupRingContext& ctx, const GroupRingElement& x, std::uint64_t search_budget) {
    if (x.is_zero()) throw NotFound("the zero is absorbing and has no querelement");
    const auto op = gr_mul_op(ctx);

    std::vector<RingScalar> alphabet;
    if (x.support_size() == 1) {
        const auto& [g, r] = *x.terms().begin();
        try {
            const auto rbar = rquer(ctx.ring(), r);
            alphabet.push_back(rbar);
            const auto candidate = ctx.monomial(rbar, ctx.group().quer(g));
            if (is_querelement_of(op, candidate, x)) return candidate;
        } catch (const DomainError&) {
            // not a ring unit, or the ring has no querelements; fall through
        }
    }

    std::vector<RingScalar> units;
    try {
        units = runits(ctx.ring());
    } catch (const DomainError&) {
    }
    for (const auto& u : units) {
        if (std::find(alphabet.begin(), alphabet.end(), u) == alphabet.end()) alphabet.push_back(u);
    }
    if (alphabet.empty()) throw NotFound("no unit coefficients available for a querelement of " + ctx.render(x));

    const auto closure = support_closure(ctx, x);
    const std::vector<GroupKey> keys(closure.begin(), closure.end());
    // Digit 0 leaves a key out of the candidate's support.
    const std::size_t base = alphabet.size() + 1;
    std::vector<std::size_t> digits(keys.size(), 0);
    std::uint64_t examined = 0;
    while (true) {
        std::size_t j = keys.size();
        while (j-- > 0) {
            if (++digits[j] < base) break;
            digits[j] = 0;
        }
        if (j == static_cast<std::size_t>(-1)) break;
        if (++examined > search_budget) break;

        RawSupport raw;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (digits[i] != 0) raw[keys[i]] = alphabet[digits[i] - 1];
        }
        const auto candidate = ctx.normalize(std::move(raw));
        if (!candidate.is_zero() && is_querelement_of(op, candidate, x)) return candidate;
    }
    throw NotFound("no querelement of " + ctx.render(x) + " found among " + std::to_string(examined) +
                   " candidates supported on the closure of its support");
}

RingScalar augmentation(const GroupRingContext& ctx, const GroupRingElement& x) {
    std::vector<RingScalar> coefficients;
    for (const auto& [key, r] : x.terms()) coefficients.push_back(r);
    return ctx.ring().sum(std::span<const RingScalar>(coefficients));
}

bool in_augmentation_ideal(const GroupRingContext& ctx, const GroupRingElement& x) {
    return ctx.ring().is_zero(augmentation(ctx, x));
}

std::vector<GroupRingElement> enumerate_elements(const GroupRingContext& ctx, std::uint64_t budget) {
    const auto scalars = ctx.ring().elements();
    const auto keys = ctx.group().elements();
    const auto total = detail::checked_pow(scalars.size(), keys.size());
    if (!total || *total > budget) {
        throw BudgetExceeded("group ring has more than " + std::to_string(budget) + " elements");
    }
    std::vector<GroupRingElement> out;
    out.reserve(*total);
    std::vector<std::size_t> digits(keys.size(), 0);
    for (std::uint64_t c = 0; c < *total; ++c) {
        RawSupport raw;
        for (std::size_t i = 0; i < keys.size(); ++i) raw[keys[i]] = scalars[digits[i]];
        out.push_back(ctx.normalize(std::move(raw)));
        for (std::size_t j = keys.size(); j-- > 0;) {
            if (++digits[j] < scalars.size()) break;
            digits[j] = 0;
        }
    }
    return out;
}

NaryOp<GroupRingElement> gr_add_op(const GroupRingContext& ctx) {
    return {ctx.add_arity(), [ctx](std::span<const GroupRingElement> p) { return gr_add(ctx, p); }};
}

NaryOp<GroupRingElement> gr_mul_op(const GroupRingContext& ctx) {
    return {ctx.mul_arity(), [ctx](std::span<const GroupRingElement> p) { return gr_mul(ctx, p); }};
}

GroupRingElement random_element(const GroupRingContext& ctx, Rng& rng, std::size_t max_support, std::int64_t lo,
                                std::int64_t hi) {
    auto keys = ctx.group().elements();
    const std::size_t limit = std::min(max_support, keys.size());
    const std::size_t size = 1 + rng.index(limit);
    RawSupport raw;
    for (std::size_t i = 0; i < size; ++i) {
        // partial Fisher-Yates: keys[i] is drawn from the untouched suffix
        std::swap(keys[i], keys[i + rng.index(keys.size() - i)]);
        raw[keys[i]] = random_scalar(ctx.ring(), rng, lo, hi);
    }
    return ctx.normalize(std::move(raw));
}

Domain<GroupRingElement> element_domain(const GroupRingContext& ctx, std::size_t max_support) {
    Domain<GroupRingElement> d;
    d.sampler = [ctx, max_support](Rng& rng) { return random_element(ctx, rng, max_support); };
    d.render = [ctx](const GroupRingElement& x) { return ctx.render(x); };
    return d;
}

std::vector<Checked<GroupRingElement>> check_augmentation_homomorphism(const GroupRingContext& ctx,
                                                                      const CheckMode& mode,
                                                                      std::size_t max_support) {
    const auto domain = element_domain(ctx, max_support);
    const std::string label = ctx.ring().label() + "[" + ctx.group().label() + "]";
    const auto& ring = ctx.ring();

    auto additive = detail::run_words(
        label, "augmentation-additive", domain, ctx.add_arity(), mode,
        [&](std::span<const GroupRingElement> word) -> std::optional<Violation> {
            std::vector<RingScalar> images;
            for (const auto& x : word) images.push_back(augmentation(ctx, x));
            const auto lhs = augmentation(ctx, gr_add(ctx, word));
            const auto rhs = iterate_op(ring.add_op(), ctx.profile().ell_m, images);
            if (lhs == rhs) return std::nullopt;
            return Violation{ring.render(lhs), ring.render(rhs), "augmentation of the sum"};
        });
    auto multiplicative = detail::run_words(
        label, "augmentation-multiplicative", domain, ctx.mul_arity(), mode,
        [&](std::span<const GroupRingElement> word) -> std::optional<Violation> {
            std::vector<RingScalar> images;
            for (const auto& x : word) images.push_back(augmentation(ctx, x));
            const auto lhs = augmentation(ctx, gr_mul(ctx, word));
            const auto rhs = iterate_op(ring.mul_op(), ctx.profile().ell_n, images);
            if (lhs == rhs) return std::nullopt;
            return Violation{ring.render(lhs), ring.render(rhs), "augmentation of the product"};
        });
    return {std::move(additive), std::move(multiplicative)};
}

Reconciliation reconcile_expansion(const GroupRingContext& ctx, std::span<const Contribution> computed,
                                   std::span<const ExpectedTerm> expected) {
    Reconciliation out;
    std::vector<RingScalar> lhs;
    std::vector<RingScalar> rhs;
    for (const auto& c : computed) lhs.push_back(c.coefficient);
    for (const auto& e : expected) rhs.push_back(e.coefficient);
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    out.coefficients_match = lhs == rhs;

    const auto& group = ctx.group();
    auto label = [&](const GroupKey& g) {
        return "g" + std::to_string(group.legacy_index(g)) + " = " + group.render(g);
    };
    if (computed.size() != expected.size()) {
        out.notes.push_back("expansion has " + std::to_string(computed.size()) + " terms, reference lists " +
                            std::to_string(expected.size()));
    }
    for (std::size_t i = 0; i < std::min(computed.size(), expected.size()); ++i) {
        const auto& c = computed[i];
        const auto& e = expected[i];
        if (c.key == e.key && c.coefficient == e.coefficient) continue;
        ++out.disagreeing_terms;
        std::ostringstream note;
        note << "term " << i + 1 << " (";
        for (std::size_t j = 0; j < c.keys.size(); ++j) {
            if (j > 0) note << ", ";
            note << ctx.ring().render(c.coefficients[j]) << "*g" << group.legacy_index(c.keys[j]);
        }
        note << "): reference gives " << ctx.ring().render(e.coefficient) << " at " << label(e.key)
             << ", product evaluates to " << ctx.ring().render(c.coefficient) << " at " << label(c.key);
        out.notes.push_back(note.str());
    }
    return out;
}

}  // namespace pgr
