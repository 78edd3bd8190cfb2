#include "pgr/dsl/commands.hpp"
#include "pgr/dsl/syntax.hpp"

#include <doctest.h>

#include <sstream>

using namespace pgr;
using namespace pgr::dsl;

namespace {

GroupRingContext example1() { return build_context({}); }

GroupRingElement mono(const GroupRingContext& ctx, long k, std::uint32_t m, std::uint32_t n) {
    return ctx.monomial(ctx.ring().scalar(k), {m, n});
}

}  // namespace

TEST_CASE("parsing the worked example elements") {
    const auto ctx = example1();
    CHECK(parse(ctx, "5j*g(1,1)") == mono(ctx, 5, 1, 1));
    CHECK(parse(ctx, "5j*g5") == mono(ctx, 5, 1, 1));
    const auto r2 = parse(ctx, "2j*g(0,2) + -7j*g(1,2)");
    CHECK(r2 == gr_add(ctx, std::vector{mono(ctx, 2, 0, 2), mono(ctx, -7, 1, 2)}));
    CHECK(parse(ctx, "2j*g7 + -7j*g8") == r2);
    CHECK(parse(ctx, "0").is_zero());
    CHECK(parse(ctx, "  0 ").is_zero());
    CHECK(parse(ctx, " 2j * g( 0 , 2 )+-7j*g8") == r2);
    CHECK(parse(ctx, "+3j*g1") == mono(ctx, 3, 0, 0));
    CHECK(parse(ctx, "3j*g1 + 4j*g(0,0) + -7j*g1").is_zero());
    CHECK(parse(ctx, "0j*g1").is_zero());
    CHECK(parse(ctx, "123456789012345678901234567890j*g9").terms().begin()->second.k ==
          BigInt("123456789012345678901234567890"));
}

TEST_CASE("parse errors carry offsets and expectations") {
    const auto ctx = example1();
    auto offset_of = [&](const std::string& text) -> std::size_t {
        try {
            parse(ctx, text);
        } catch (const ParseError& e) {
            return e.offset();
        }
        return 9999;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("5j g5") == 3);
    CHECK(offset_of("5j*h5") == 3);
    CHECK(offset_of("5j*g(1,1") == 8);
    CHECK(offset_of("5j*g5 - 2j*g1") == 6);
    CHECK(offset_of("5*g5") == 1);
    CHECK(offset_of("5j4*g5") == 1);
    CHECK(offset_of("5j*g5 +") == 7);
    try {
        parse(ctx, "5j*g(1;1)");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 6);
        CHECK(std::string(e.what()) == "parse error at offset 6: expected ')', found ';'");
    }
}

TEST_CASE("key range errors") {
    const auto ctx = example1();
    CHECK_THROWS_AS(parse(ctx, "5j*g(3,0)"), KeyRangeError);
    CHECK_THROWS_AS(parse(ctx, "5j*g(1)"), KeyRangeError);
    CHECK_THROWS_AS(parse(ctx, "5j*g10"), KeyRangeError);
    CHECK_THROWS_AS(parse(ctx, "5j*g0"), KeyRangeError);
    CHECK_THROWS_AS(parse(ctx, "5j*g99999999999999999999"), KeyRangeError);

    ContextSpec s;
    s.group_kind = "derived_cyclic";
    s.k = 3;
    const auto d = build_context(s);
    CHECK(parse(d, "2j*g(1)") == d.monomial(d.ring().scalar(2), {1, 0}));
    CHECK(parse(d, "2j*g2") == d.monomial(d.ring().scalar(2), {1, 0}));
    CHECK_THROWS_AS(parse(d, "2j*g(1,0)"), KeyRangeError);
}

TEST_CASE("ring symbols follow the context") {
    ContextSpec s;
    s.q = 4;
    s.ell_g = 2;
    const auto j4 = build_context(s);
    CHECK(parse(j4, "3j4*g(1,1)") == j4.monomial(j4.ring().scalar(3), {1, 1}));
    CHECK_THROWS_AS(parse(j4, "3j*g(1,1)"), ParseError);

    ContextSpec z;
    z.q = 1;
    z.group_kind = "derived_cyclic";
    z.group_arity = 2;
    const auto zc = build_context(z);
    CHECK(print_canonical(zc, parse(zc, "2*g(1) + -1*g(0)")) == "-1*g(0) + 2*g(1)");
    CHECK_THROWS_AS(parse(zc, "2j*g(1)"), ParseError);
}

TEST_CASE("canonical printing") {
    const auto ctx = example1();
    const auto stated = parse(ctx, "-105j*g3 + 40j*g5 + -70j*g6 + 135j*g9");
    CHECK(print_canonical(ctx, stated) == "-105j*g(2,0) + 40j*g(1,1) + -70j*g(2,1) + 135j*g(2,2)");
    CHECK(print_canonical(ctx, GroupRingElement{}) == "0");
    const auto oracle_total = parse(ctx, "275j*g9 + -140j*g8 + -70j*g6 + 40j*g5 + -105j*g3");
    CHECK(print_canonical(ctx, oracle_total) ==
          "-105j*g(2,0) + 40j*g(1,1) + -70j*g(2,1) + -140j*g(1,2) + 275j*g(2,2)");
}

TEST_CASE("round trip on random elements") {
    std::vector<ContextSpec> specs(4);
    specs[1].q = 4;
    specs[1].ell_g = 2;
    specs[2].modulus = BigInt(7);
    specs[3].q = 1;
    specs[3].group_kind = "derived_cyclic";
    specs[3].k = 5;
    specs[3].group_arity = 2;
    Rng rng(2024);
    int checked = 0;
    for (const auto& s : specs) {
        const auto ctx = build_context(s);
        for (int t = 0; t < 500; ++t) {
            const auto x = random_element(ctx, rng, ctx.group().size(), -1000, 1000);
            const auto text = print_canonical(ctx, x);
            const auto back = parse(ctx, text);
            CHECK(back == x);
            CHECK(print_canonical(ctx, back) == text);
            ++checked;
        }
    }
    CHECK(checked == 2000);
}

TEST_CASE("configuration") {
    using nlohmann::json;
    const auto ex1 = build_context(spec_from_json(json::parse(
        R"({"ring":{"kind":"jroot","q":2},"group":{"kind":"adiag_cyclic","k":3},"powers":{"ell_m":1,"ell_n":1,"ell_g":1}})")));
    CHECK(ex1.add_arity() == 2);
    CHECK(ex1.mul_arity() == 3);

    const auto ex2 = build_context(spec_from_json(json::parse(
        R"({"ring":{"kind":"jroot","q":4},"group":{"kind":"adiag_cyclic","k":3},"powers":{"ell_m":1,"ell_n":1,"ell_g":2}})")));
    CHECK(ex2.mul_arity() == 5);

    const auto bad = spec_from_json(json::parse(
        R"({"ring":{"kind":"jroot","q":2},"group":{"kind":"adiag_cyclic","k":3},"powers":{"ell_m":1,"ell_n":1,"ell_g":3}})"));
    CHECK_THROWS_AS(build_context(bad), QuantizationMismatch);

    const auto modular = spec_from_json(json::parse(R"({"ring":{"modulus":5}})"));
    CHECK(modular.modulus == BigInt(5));
    CHECK(build_context(modular).ring().label() == "jZ mod 5");

    for (const char* broken : {R"({"rings":{}})", R"({"ring":{"q":"2"}})", R"({"ring":{"q":0}})",
                               R"({"ring":{"kind":"field"}})", R"({"group":{"kind":"adiag_cyclic","k":-3}})",
                               R"({"powers":{"ell_x":1}})", R"({"ring":{"modulus":1}})", R"([1,2])",
                               R"({"group":{"kind":"derived_cyclic","arity":1}})"}) {
        INFO(broken);
        CHECK_THROWS_AS(spec_from_json(json::parse(broken)), ConfigError);
    }
    CHECK_THROWS_AS(load_config_file("/nonexistent/pgr.json"), ConfigError);

    ContextSpec base;
    base.q = 4;
    const auto merged = spec_from_json(json::parse(R"({"powers":{"ell_g":2}})"), base);
    CHECK(merged.q == 4);
    CHECK(merged.ell_g == 2);
    CHECK(spec_from_json(to_json(merged)).ell_g == 2);
}

TEST_CASE("commands") {
    Session s(example1());
    auto run = [&](const std::string& line) { return run_line(s, line); };

    auto r = run("aug 2j*g(0,2) + -7j*g(1,2)");
    CHECK(r.out == "-5j\n");
    CHECK(r.exit_code == 0);

    r = run("mul 5j*g(1,1) ; 1j*g(0,0)");
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
    CHECK(r.err == "error: mul operands: expected 3 operands, got 2\n");

    r = run("mul 5j*g5 ; 2j*g7 + -7j*g8 ; -4j*g2 + 7j*g3 + -3j*g6");
    CHECK(r.out == "-105j*g(2,0) + 40j*g(1,1) + -70j*g(2,1) + -140j*g(1,2) + 275j*g(2,2)\n");

    r = run("identities");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "g(0,0)\ng(2,1)\ng(1,2)\n");
    CHECK(run("identities ring").out == "none\n");
    CHECK(run("identities monoid").exit_code == 1);

    CHECK(run("add 2j*g7 + -7j*g8 ; -2j*g7").out == "-7j*g(1,2)\n");
    CHECK(run("eval 0").out == "0\n");
    CHECK(run("eval 5j*g(1,1").exit_code == 1);
    CHECK(run("eval 5j*g(4,1)").exit_code == 2);
    CHECK(run("quer 1j*g5").out == "-1j*g(2,2)\n");
    CHECK(run("quer 2j*g5").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 1);

    r = run("table g5 g1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("g(1,1) g(1,1) g(1,1) -> g(0,0)\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 8);
    const auto full = run("table").out;
    CHECK(std::count(full.begin(), full.end(), '\n') == 729);

    CHECK(run("arity").out == "m_r=2 n_r=3 n_g=3 ell_m=1 ell_n=1 ell_g=1 M_r=2 N_r=3\n");
    CHECK(run("arity length 3 2").out == "5\n");
    CHECK(run("arity power 3 7").out == "3\n");
    CHECK(run("arity power 3 6").exit_code == 2);
    CHECK(run("arity power 3 x").exit_code == 1);

    r = run("verify group-assoc");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "structure=adiag(C3) axiom=total-associativity mode=exhaustive cases=59049 status=holds\n");
    CHECK(run("verify no-such-axiom").exit_code == 1);
    r = run("verify all");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("status=fails") == std::string::npos);
}

TEST_CASE("json output") {
    Session s(example1());
    s.json = true;
    auto doc = nlohmann::json::parse(run_line(s, "aug 5j*g5").out);
    CHECK(doc["result"] == "5j");
    CHECK(doc["in_kernel"] == false);
    doc = nlohmann::json::parse(run_line(s, "verify group-quer").out);
    CHECK(doc["status"] == "holds");
    CHECK(doc["reports"][0]["cases"] == 9);
    const auto failed = run_line(s, "eval 5j*");
    CHECK(failed.exit_code == 1);
    doc = nlohmann::json::parse(failed.out);
    CHECK(doc["exit_code"] == 1);
    CHECK(doc["error"] == "parse error at offset 3: expected 'g', found end of input");
}

TEST_CASE("verification failures exit with code 3") {
    Session a(example1());
    const auto strict = run_line(a, "verify group-identity-strict");
    CHECK(strict.exit_code == 3);
    CHECK(strict.out.find("status=fails") != std::string::npos);
    CHECK(strict.out.find("detail=\"subject at slot 1\"") != std::string::npos);

    ContextSpec derived;
    derived.group_kind = "derived_cyclic";
    Session d(build_context(derived));
    CHECK(run_line(d, "verify group-identity-strict").exit_code == 0);

    ContextSpec spec;
    spec.ring_kind = "odd_jroot";
    Session s(build_context(spec));
    // Sums of two odd coefficients leave the odd carrier.
    CHECK(run_line(s, "verify ring-distrib").exit_code == 2);
    CHECK(run_line(s, "verify ring-zero").exit_code == 2);

    Session m(build_context({}));
    m.samples = 20;
    CHECK(run_line(m, "verify gr-mul-assoc").exit_code == 0);
}

TEST_CASE("the repl survives errors") {
    Session s(example1());
    std::istringstream in("eval 5j*g5\neval 5j*\n:seed 12\n:ctx\neval nonsense\nmul 1j*g1\n\n# comment\naug 5j*g5\n:quit\neval 1j*g1\n");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_repl(s, in, out, err, false);
    CHECK(code == 0);
    CHECK(s.seed == 12);
    CHECK(out.str() ==
          "5j*g(1,1)\njZ x adiag(C3) m_r=2 n_r=3 n_g=3 ell_m=1 ell_n=1 ell_g=1 M_r=2 N_r=3 seed=12\n5j\n");
    const auto errors = err.str();
    CHECK(std::count(errors.begin(), errors.end(), '\n') == 3);
}
