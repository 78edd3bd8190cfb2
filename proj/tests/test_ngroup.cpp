#include "oracles.hpp"

#include "pgr/ngroup.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace pgr;

namespace {

GroupKey key_of(const oracle::Mat& m) {
    const auto [a, b] = oracle::exponents(m);
    return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
}

oracle::Mat mat_of(const GroupKey& g, int k) { return oracle::adiag(static_cast<int>(g.m), static_cast<int>(g.n), k); }

std::set<GroupKey> brute_identities(const NaryGroup& g, bool all_slots) {
    std::set<GroupKey> out;
    const auto all = g.elements();
    const std::size_t n = g.arity();
    for (const auto& e : all) {
        bool ok = true;
        for (const auto& x : all) {
            for (std::size_t slot = 0; slot < n && ok; ++slot) {
                if (!all_slots && slot != 0 && slot != n - 1) continue;
                std::vector<GroupKey> p(n, e);
                p[slot] = x;
                ok = g.mul(p) == x;
            }
        }
        if (ok) out.insert(e);
    }
    return out;
}

}  // namespace

TEST_CASE("adiag(C3) product examples") {
    const auto g = NaryGroup::adiag_cyclic(3);
    CHECK(gmul(g, std::vector<GroupKey>{{1, 1}, {0, 2}, {1, 0}}) == GroupKey{1, 1});
    for (const auto& x : g.elements()) CHECK(gmul(g, std::vector<GroupKey>{{0, 0}, {0, 0}, x}) == x);
    CHECK(gmul(g, std::vector<GroupKey>{{1, 1}, {1, 2}, {1, 0}}) == GroupKey{1, 2});
    CHECK_THROWS_AS(gmul(g, std::vector<GroupKey>{{1, 1}, {1, 2}}), ArityMismatch);
    CHECK_THROWS_AS(g.require({3, 0}), KeyRangeError);
}

TEST_CASE("matrix oracle agrees with the ternary product on all 729 triples") {
    for (int k : {2, 3, 4}) {
        const auto g = NaryGroup::adiag_cyclic(static_cast<std::uint32_t>(k));
        const auto all = g.elements();
        for (const auto& a : all)
            for (const auto& b : all)
                for (const auto& c : all) {
                    const auto expected = key_of(oracle::product({mat_of(a, k), mat_of(b, k), mat_of(c, k)}));
                    CHECK(g.mul(std::vector<GroupKey>{a, b, c}) == expected);
                }
    }
}

TEST_CASE("legacy labels follow the manifest table") {
    const auto g = NaryGroup::adiag_cyclic(3);
    for (int i = 1; i <= 9; ++i) {
        const auto [m, n] = oracle::kLegacyTable[static_cast<std::size_t>(i - 1)];
        const GroupKey key{static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(n)};
        CHECK(g.from_legacy_index(static_cast<std::size_t>(i)) == key);
        CHECK(g.legacy_index(key) == static_cast<std::size_t>(i));
        CHECK(oracle::legacy_label(m, n) == i);
    }
    CHECK_THROWS_AS(g.from_legacy_index(0), KeyRangeError);
    CHECK_THROWS_AS(g.from_legacy_index(10), KeyRangeError);
    // GroupKey order is legacy-label order.
    const auto all = g.elements();
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(g.legacy_index(all[i]) == i + 1);
}

TEST_CASE("querelements") {
    const auto g = NaryGroup::adiag_cyclic(3);
    CHECK(gquer(g, {1, 2}) == GroupKey{1, 2});
    CHECK(gquer(g, {0, 0}) == GroupKey{0, 0});
    CHECK(gquer(g, {1, 0}) == GroupKey{0, 2});

    // Closed form against exhaustive search, querelement at every position.
    for (std::uint32_t k = 2; k <= 5; ++k) {
        const auto gk = NaryGroup::adiag_cyclic(k);
        const auto all = gk.elements();
        for (const auto& x : all) {
            std::vector<GroupKey> found;
            for (const auto& cand : all) {
                bool ok = true;
                for (std::size_t slot = 0; slot < 3; ++slot) {
                    std::vector<GroupKey> p(3, x);
                    p[slot] = cand;
                    ok = ok && gk.mul(p) == x;
                }
                if (ok) found.push_back(cand);
            }
            REQUIRE(found.size() == 1);
            CHECK(gquer(gk, x) == found.front());
        }
    }

    const auto d = NaryGroup::derived_cyclic(5, 3);
    for (const auto& x : d.elements()) {
        CHECK(is_querelement_of(d.op(), gquer(d, x), x));
    }
}

TEST_CASE("identities") {
    const auto g = NaryGroup::adiag_cyclic(3);
    const auto ids = gidentities(g);
    const std::set<GroupKey> got(ids.begin(), ids.end());
    CHECK(got == std::set<GroupKey>{{0, 0}, {1, 2}, {2, 1}});
    CHECK(got == brute_identities(g, false));
    // In the middle slot e swaps the two exponents, so no element is neutral there.
    CHECK(brute_identities(g, true).empty());

    for (std::uint32_t k = 2; k <= 5; ++k) {
        const auto gk = NaryGroup::adiag_cyclic(k);
        const auto list = gidentities(gk);
        std::set<GroupKey> expected;
        for (std::uint32_t t = 0; t < k; ++t) expected.insert({t, (k - t) % k});
        CHECK(std::set<GroupKey>(list.begin(), list.end()) == expected);
        CHECK(expected == brute_identities(gk, false));
    }

    const auto d = NaryGroup::derived_cyclic(3, 3);
    CHECK(gidentities(d) == std::vector<GroupKey>{{0, 0}});
    CHECK(brute_identities(d, true) == std::set<GroupKey>{{0, 0}});
}

TEST_CASE("neutral polyads") {
    const auto g = NaryGroup::adiag_cyclic(3);
    const auto polyads = gneutral_polyads(g);
    CHECK(polyads.size() == 9);
    std::set<std::vector<GroupKey>> got(polyads.begin(), polyads.end());
    std::set<std::vector<GroupKey>> expected;
    for (std::uint32_t m = 0; m < 3; ++m) {
        for (std::uint32_t n = 0; n < 3; ++n) expected.insert({{m, n}, {(3 - n) % 3, (3 - m) % 3}});
    }
    CHECK(got == expected);

    std::set<GroupKey> constant;
    for (const auto& p : polyads) {
        if (p[0] == p[1]) constant.insert(p[0]);
    }
    const auto ids = gidentities(g);
    CHECK(constant == std::set<GroupKey>(ids.begin(), ids.end()));

    const auto c2 = NaryGroup::derived_cyclic(2, 3);
    const auto p2 = gneutral_polyads(c2);
    CHECK(std::set<std::vector<GroupKey>>(p2.begin(), p2.end()) ==
          std::set<std::vector<GroupKey>>{{{0, 0}, {0, 0}}, {{1, 0}, {1, 0}}});
}

TEST_CASE("idempotents") {
    const auto g = NaryGroup::adiag_cyclic(3);
    for (const auto& x : g.elements()) CHECK(gidempotent_check(g, x, 3));
    CHECK_FALSE(gidempotent_check(g, {1, 0}, 1));
    CHECK(polyadic_power(g.op(), GroupKey{1, 0}, 1) == GroupKey{2, 1});
    CHECK(gidempotent_check(g, {0, 0}, 1));
    for (std::uint32_t k = 2; k <= 5; ++k) {
        const auto gk = NaryGroup::adiag_cyclic(k);
        for (const auto& x : gk.elements()) CHECK(gidempotent_check(gk, x, k));
    }
}

TEST_CASE("element enumeration") {
    CHECK(gelements(NaryGroup::adiag_cyclic(3)).size() == 9);
    CHECK(gelements(NaryGroup::adiag_cyclic(2)).size() == 4);
    CHECK(gelements(NaryGroup::derived_cyclic(3, 3)).size() == 3);
    const auto all = gelements(NaryGroup::adiag_cyclic(4));
    CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("binary matrix products leave adiag(C3)") {
    const auto g = NaryGroup::adiag_cyclic(3);
    const auto all = g.elements();
    std::size_t leaving = 0;
    for (const auto& a : all) {
        for (const auto& b : all) leaving += !oracle::is_antidiagonal(oracle::product(mat_of(a, 3), mat_of(b, 3)));
    }
    CHECK(leaving == 81);
}

TEST_CASE("rendering") {
    const auto g = NaryGroup::adiag_cyclic(3);
    CHECK(g.render({2, 1}) == "g(2,1)");
    CHECK(g.label() == "adiag(C3)");
    const auto d = NaryGroup::derived_cyclic(3, 3);
    CHECK(d.render({2, 0}) == "g(2)");
}
