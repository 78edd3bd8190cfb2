#pragma once

// Deliberately corrupted group-ring structures over jZ x adiag(C3). Each one
// breaks exactly one law; the verification engine must catch all four.

#include "pgr/groupring.hpp"

#include <string>

namespace controls {

using namespace pgr;

inline GroupRingElement map_coefficients(const GroupRingContext& ctx, const GroupRingElement& x,
                                         const std::function<BigInt(const BigInt&)>& f) {
    RawSupport raw;
    for (const auto& [g, r] : x.terms()) raw[g] = ctx.ring().scalar(f(r.k));
    return ctx.normalize(std::move(raw));
}

inline GroupRingElement scale(const GroupRingContext& ctx, const GroupRingElement& x, long c) {
    return map_coefficients(ctx, x, [c](const BigInt& k) { return k * c; });
}

// (a, b, c) -> a - b + 2c, componentwise.
inline NaryOp<GroupRingElement> skew_ternary(const GroupRingContext& ctx) {
    return {3, [ctx](std::span<const GroupRingElement> p) {
                const auto add = gr_add_op(ctx);
                return add({add({p[0], scale(ctx, p[1], -1)}), scale(ctx, p[2], 2)});
            }};
}

// The product with the sign of the first operand's coefficients dropped.
inline NaryOp<GroupRingElement> sign_dropped_mul(const GroupRingContext& ctx) {
    return {ctx.mul_arity(), [ctx](std::span<const GroupRingElement> p) {
                std::vector<GroupRingElement> q(p.begin(), p.end());
                q[0] = map_coefficients(ctx, q[0], [](const BigInt& k) { return k < 0 ? BigInt(-k) : k; });
                return gr_mul(ctx, q);
            }};
}

// (a, b) -> a + 2b.
inline NaryOp<GroupRingElement> lopsided_add(const GroupRingContext& ctx) {
    return {2, [ctx](std::span<const GroupRingElement> p) { return gr_add(ctx, std::vector{p[0], scale(ctx, p[1], 2)}); }};
}

// A nonzero element posing as the zero.
inline GroupRingElement fake_zero(const GroupRingContext& ctx) { return ctx.monomial(ctx.ring().scalar(1), {0, 0}); }

struct Outcome {
    std::string name;
    AxiomReport report;
    bool reproduced = false;  // the witness, re-evaluated directly, shows the violation
};

inline std::vector<Outcome> run_all(const GroupRingContext& ctx, std::uint64_t samples, std::uint64_t seed) {
    const auto d = element_domain(ctx);
    const auto mode = CheckMode::sampled(samples, seed);
    const std::string label = "corrupted " + ctx.ring().label() + "[" + ctx.group().label() + "]";
    std::vector<Outcome> out;

    {
        const auto op = skew_ternary(ctx);
        auto c = check_total_associativity(label, op, d, mode);
        bool reproduced = false;
        if (c.witness.size() == 5) {
            const auto& w = c.witness;
            const auto left = op({op({w[0], w[1], w[2]}), w[3], w[4]});
            const auto middle = op({w[0], op({w[1], w[2], w[3]}), w[4]});
            const auto right = op({w[0], w[1], op({w[2], w[3], w[4]})});
            reproduced = !(left == middle && middle == right);
        }
        out.push_back({"associativity of (a,b,c) -> a-b+2c", c.report, reproduced});
    }
    {
        const auto add = gr_add_op(ctx);
        const auto mul = sign_dropped_mul(ctx);
        auto c = check_distributivity(label, add, mul, d, mode);
        bool reproduced = false;
        if (c.witness.size() == 4) {
            const auto& w = c.witness;
            for (std::size_t slot = 0; slot < 3 && !reproduced; ++slot) {
                auto at = [&](const GroupRingElement& x) {
                    std::vector<GroupRingElement> p{w[2], w[3]};
                    p.insert(p.begin() + static_cast<std::ptrdiff_t>(slot), x);
                    return mul(p);
                };
                reproduced = !(at(add({w[0], w[1]})) == add({at(w[0]), at(w[1])}));
            }
        }
        out.push_back({"distributivity with a sign-dropped product", c.report, reproduced});
    }
    {
        const auto op = lopsided_add(ctx);
        auto c = check_commutativity(label, "additive-commutativity", op, d, mode);
        bool reproduced = c.witness.size() == 2 && !(op({c.witness[0], c.witness[1]}) == op({c.witness[1], c.witness[0]}));
        out.push_back({"commutativity of (a,b) -> a+2b", c.report, reproduced});
    }
    {
        const auto z = fake_zero(ctx);
        const auto add = gr_add_op(ctx);
        auto c = check_zero_law(label, std::optional(add), gr_mul_op(ctx), z, d, mode);
        bool reproduced = false;
        if (!c.witness.empty()) {
            const auto& x = c.witness[0];
            reproduced = !(add({x, z}) == x) || !(gr_mul(ctx, std::vector{c.witness[0], c.witness[1], z}) == z);
        }
        out.push_back({"zero law for a nonzero element", c.report, reproduced});
    }
    return out;
}

}  // namespace controls
