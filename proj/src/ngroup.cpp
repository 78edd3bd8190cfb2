#include "pgr/ngroup.hpp"

namespace pgr {

NaryGroup NaryGroup::adiag_cyclic(std::uint32_t k) {
    if (k < 1) throw DomainError("cyclic order must be at least 1");
    return NaryGroup(Kind::adiag_cyclic, k, 3);
}

NaryGroup NaryGroup::derived_cyclic(std::uint32_t k, Arity arity) {
    if (k < 1) throw DomainError("cyclic order must be at least 1");
    if (arity < 2) throw DomainError("group arity must be at least 2");
    return NaryGroup(Kind::derived_cyclic, k, arity);
}

std::size_t NaryGroup::size() const noexcept {
    return kind_ == Kind::adiag_cyclic ? std::size_t{k_} * k_ : std::size_t{k_};
}

std::string NaryGroup::label() const {
    if (kind_ == Kind::adiag_cyclic) return "adiag(C" + std::to_string(k_) + ")";
    return "derived" + std::to_string(arity_) + "(C" + std::to_string(k_) + ")";
}

bool NaryGroup::contains(const GroupKey& g) const noexcept {
    if (kind_ == Kind::adiag_cyclic) return g.m < k_ && g.n < k_;
    return g.m < k_ && g.n == 0;
}

void NaryGroup::require(const GroupKey& g) const {
    if (!contains(g)) throw KeyRangeError(render(g) + " is not an element of " + label());
}

GroupKey NaryGroup::mul(std::span<const GroupKey> polyad) const {
    if (polyad.size() != arity_) throw ArityMismatch(label() + " product", arity_, polyad.size());
    for (const auto& g : polyad) require(g);

    if (kind_ == Kind::derived_cyclic) {
        std::uint64_t sum = 0;
        for (const auto& g : polyad) sum += g.m;
        return {static_cast<std::uint32_t>(sum % k_), 0};
    }
    // (0 a^m1; a^n1 0)(0 a^m2; a^n2 0)(0 a^m3; a^n3 0) = (0 a^(m1+n2+m3); a^(n1+m2+n3) 0)
    const auto& [m1, n1] = polyad[0];
    const auto& [m2, n2] = polyad[1];
    const auto& [m3, n3] = polyad[2];
    return {static_cast<std::uint32_t>((std::uint64_t{m1} + n2 + m3) % k_),
            static_cast<std::uint32_t>((std::uint64_t{n1} + m2 + n3) % k_)};
}

GroupKey NaryGroup::quer(const GroupKey& g) const {
    require(g);
    if (kind_ == Kind::adiag_cyclic) return {(k_ - g.n) % k_, (k_ - g.m) % k_};
    const auto all = elements();
    if (auto found = find_querelement(op(), std::span<const GroupKey>(all), g)) return *found;
    throw NotFound("no querelement for " + render(g) + " in " + label());
}

NaryOp<GroupKey> NaryGroup::op() const {
    return {arity_, [group = *this](std::span<const GroupKey> polyad) { return group.mul(polyad); }};
}

std::vector<GroupKey> NaryGroup::elements() const {
    std::vector<GroupKey> out;
    out.reserve(size());
    if (kind_ == Kind::adiag_cyclic) {
        for (std::uint32_t n = 0; n < k_; ++n) {
            for (std::uint32_t m = 0; m < k_; ++m) out.push_back({m, n});
        }
    } else {
        for (std::uint32_t m = 0; m < k_; ++m) out.push_back({m, 0});
    }
    return out;
}

std::size_t NaryGroup::legacy_index(const GroupKey& g) const {
    require(g);
    return kind_ == Kind::adiag_cyclic ? std::size_t{k_} * g.n + g.m + 1 : std::size_t{g.m} + 1;
}

GroupKey NaryGroup::from_legacy_index(std::size_t index) const {
    if (index < 1 || index > size()) {
        throw KeyRangeError("g" + std::to_string(index) + " is outside g1..g" + std::to_string(size()) +
                            " of " + label());
    }
    const auto i = static_cast<std::uint32_t>(index - 1);
    if (kind_ == Kind::adiag_cyclic) return {i % k_, i / k_};
    return {i, 0};
}

std::string NaryGroup::render(const GroupKey& g) const {
    if (kind_ == Kind::adiag_cyclic) return "g(" + std::to_string(g.m) + "," + std::to_string(g.n) + ")";
    return "g(" + std::to_string(g.m) + ")";
}

GroupKey gmul(const NaryGroup& group, std::span<const GroupKey> polyad) { return group.mul(polyad); }

GroupKey gquer(const NaryGroup& group, const GroupKey& g) { return group.quer(g); }

std::vector<GroupKey> gelements(const NaryGroup& group) { return group.elements(); }

std::vector<GroupKey> gidentities(const NaryGroup& group) {
    const auto op = group.op();
    const auto all = group.elements();
    std::vector<GroupKey> out;
    for (const auto& e : all) {
        bool neutral = true;
        for (const auto& x : all) {
            if (!is_neutral_for(op, e, x, Placement::outer_positions)) {
                neutral = false;
                break;
            }
        }
        if (neutral) out.push_back(e);
    }
    return out;
}

std::vector<std::vector<GroupKey>> gneutral_polyads(const NaryGroup& group) {
    const auto all = group.elements();
    const std::size_t width = group.arity() - 1;
    const auto total = detail::checked_pow(all.size(), width);
    if (!total || *total > 10'000'000) {
        throw BudgetExceeded("neutral polyad search over " + group.label() + " is too large");
    }

    std::vector<std::vector<GroupKey>> out;
    std::vector<std::size_t> digits(width, 0);
    std::vector<GroupKey> tuple(width);
    std::vector<GroupKey> polyad(width + 1);
    for (std::uint64_t c = 0; c < *total; ++c) {
        for (std::size_t j = 0; j < width; ++j) tuple[j] = all[digits[j]];
        bool neutral = true;
        for (const auto& x : all) {
            polyad[0] = x;
            std::copy(tuple.begin(), tuple.end(), polyad.begin() + 1);
            if (!(group.mul(polyad) == x)) {
                neutral = false;
                break;
            }
            std::copy(tuple.begin(), tuple.end(), polyad.begin());
            polyad[width] = x;
            if (!(group.mul(polyad) == x)) {
                neutral = false;
                break;
            }
        }
        if (neutral) out.push_back(tuple);
        for (std::size_t j = width; j-- > 0;) {
            if (++digits[j] < all.size()) break;
            digits[j] = 0;
        }
    }
    return out;
}

bool gidempotent_check(const NaryGroup& group, const GroupKey& g, Arity ell) {
    return polyadic_power(group.op(), g, ell) == g;
}

Domain<GroupKey> group_domain(const NaryGroup& group) {
    Domain<GroupKey> d;
    d.universe = group.elements();
    d.render = [group](const GroupKey& g) { return group.render(g); };
    return d;
}

}  // namespace pgr
