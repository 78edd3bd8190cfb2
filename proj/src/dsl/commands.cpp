#include "pgr/dsl/commands.hpp"

#include "pgr/dsl/syntax.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace pgr::dsl {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

std::vector<std::string> split_operands(const std::string& args) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = args.find(';', start);
        out.push_back(trim(std::string_view(args).substr(start, pos == std::string::npos ? pos : pos - start)));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

std::uint64_t parse_count(const std::string& word, const char* what) {
    try {
        std::size_t used = 0;
        const auto v = std::stoull(word, &used);
        if (used == word.size() && word.find('-') == std::string::npos) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(0, {std::string(what)}, word);
}

class Runner {
public:
    explicit Runner(Session& s) : s_(s), ctx_(s.ctx) {}

    void run(const Command& c) {
        if (c.verb == "eval") return eval(c.args);
        if (c.verb == "mul") return polyadic(c.args, true);
        if (c.verb == "add") return polyadic(c.args, false);
        if (c.verb == "aug") return aug(c.args);
        if (c.verb == "quer") return quer(c.args);
        if (c.verb == "identities") return identities(c.args);
        if (c.verb == "table") return table(c.args);
        if (c.verb == "verify") return verify(c.args);
        if (c.verb == "arity") return arity(c.args);
        throw ParseError(0, {"eval", "mul", "add", "aug", "quer", "identities", "table", "verify", "arity"},
                         c.verb);
    }

    CommandResult result;

private:
    void emit(const std::string& text, const json& doc) {
        if (s_.json) {
            result.out += doc.dump() + "\n";
        } else if (!text.empty()) {
            result.out += text + "\n";
        }
    }

    GroupRingElement element(const std::string& text) { return parse(ctx_, text); }

    void eval(const std::string& args) {
        const auto x = element(args);
        emit(ctx_.render(x), {{"result", ctx_.render(x)}});
    }

    void polyadic(const std::string& args, bool multiply) {
        const auto texts = split_operands(args);
        const Arity wanted = multiply ? ctx_.mul_arity() : ctx_.add_arity();
        if (texts.size() != wanted) {
            throw ArityMismatch(std::string(multiply ? "mul" : "add") + " operands", wanted, texts.size());
        }
        std::vector<GroupRingElement> operands;
        for (const auto& t : texts) operands.push_back(element(t));
        const auto x = multiply ? gr_mul(ctx_, operands) : gr_add(ctx_, operands);
        emit(ctx_.render(x), {{"result", ctx_.render(x)}});
    }

    void aug(const std::string& args) {
        const auto r = augmentation(ctx_, element(args));
        const std::string text = ctx_.ring().render(r);
        emit(text, {{"result", text}, {"in_kernel", ctx_.ring().is_zero(r)}});
    }

    void quer(const std::string& args) {
        const auto q = gr_quer(ctx_, element(args));
        emit(ctx_.render(q), {{"result", ctx_.render(q)}});
    }

    void identities(const std::string& args) {
        const auto w = words(args);
        if (w.size() > 1) throw ParseError(0, {"group", "ring", "groupring"}, w[1]);
        const std::string which = w.empty() ? "group" : w[0];
        std::vector<std::string> found;
        if (which == "group") {
            for (const auto& g : gidentities(ctx_.group())) found.push_back(ctx_.group().render(g));
        } else if (which == "ring") {
            for (const auto& r : ridentity_search(ctx_.ring())) found.push_back(ctx_.ring().render(r));
        } else if (which == "groupring") {
            for (const auto& x : gr_trivial_identities(ctx_)) found.push_back(ctx_.render(x));
        } else {
            throw ParseError(0, {"group", "ring", "groupring"}, which);
        }
        std::string text;
        for (const auto& f : found) text += (text.empty() ? "" : "\n") + f;
        emit(found.empty() ? "none" : text, {{"structure", which}, {"identities", found}});
    }

    void table(const std::string& args) {
        const auto& group = ctx_.group();
        std::vector<GroupKey> gens;
        for (const auto& w : words(args)) gens.push_back(to_key(ctx_, parse_basis(w)));
        if (gens.empty()) {
            if (group.size() > 16) {
                throw DomainError("full table only for groups of order at most 16; " + group.label() + " has " +
                                  std::to_string(group.size()) + " elements, list generators instead");
            }
            gens = group.elements();
        }
        const std::size_t n = group.arity();
        const auto rows = detail::checked_pow(gens.size(), n);
        constexpr std::uint64_t max_rows = 100'000;
        if (!rows || *rows > max_rows) {
            throw BudgetExceeded("table would have more than " + std::to_string(max_rows) + " rows");
        }
        std::string text;
        json doc = json::array();
        std::vector<std::size_t> digits(n, 0);
        std::vector<GroupKey> polyad(n);
        for (std::uint64_t r = 0; r < *rows; ++r) {
            for (std::size_t i = 0; i < n; ++i) polyad[i] = gens[digits[i]];
            const auto product = group.mul(polyad);
            json operands = json::array();
            for (std::size_t i = 0; i < n; ++i) {
                text += group.render(polyad[i]) + " ";
                operands.push_back(group.render(polyad[i]));
            }
            text += "-> " + group.render(product) + (r + 1 < *rows ? "\n" : "");
            doc.push_back({{"operands", operands}, {"product", group.render(product)}});
            for (std::size_t i = n; i-- > 0;) {
                if (++digits[i] < gens.size()) break;
                digits[i] = 0;
            }
        }
        emit(text, {{"group", group.label()}, {"rows", doc}});
    }

    CheckMode finite_mode() const {
        CheckMode m = CheckMode::exhaustive();
        m.samples = s_.samples;
        m.seed = s_.seed;
        return m;
    }
    CheckMode sampled_mode() const { return CheckMode::sampled(s_.samples, s_.seed); }
    CheckMode ring_mode() const { return ctx_.ring().is_finite() ? finite_mode() : sampled_mode(); }

    std::string gr_label() const { return ctx_.ring().label() + "[" + ctx_.group().label() + "]"; }

    std::vector<AxiomReport> check(const std::string& axiom) {
        const auto& group = ctx_.group();
        const auto& ring = ctx_.ring();
        std::vector<AxiomReport> out;
        auto renamed = [](AxiomReport r, const char* name) {
            r.axiom = name;
            return r;
        };

        if (axiom == "group-assoc") {
            out.push_back(check_total_associativity(group.label(), group.op(), group_domain(group), finite_mode()).report);
        } else if (axiom == "group-quer") {
            const std::function<std::optional<GroupKey>(const GroupKey&)> q = [&](const GroupKey& g) {
                return std::optional<GroupKey>(group.quer(g));
            };
            out.push_back(check_quer_law(group.label(), group.op(), q, group_domain(group), finite_mode()).report);
        } else if (axiom == "group-identity") {
            const auto ids = gidentities(group);
            for (const auto& e : ids) {
                auto r = check_identity_law(group.label(), group.op(), e, group_domain(group), finite_mode()).report;
                r.note = "e=" + group.render(e) + "; " + r.note;
                out.push_back(std::move(r));
            }
            if (ids.empty()) {
                AxiomReport r;
                r.structure = group.label();
                r.axiom = "identity-law";
                r.note = "no identity elements";
                out.push_back(std::move(r));
            }
        } else if (axiom == "group-identity-strict") {
            for (const auto& e : gidentities(group)) {
                auto r = check_identity_law(group.label(), group.op(), e, group_domain(group), finite_mode(),
                                            Placement::every_position)
                             .report;
                r.note = "e=" + group.render(e) + "; " + r.note;
                out.push_back(std::move(r));
            }
        } else if (axiom == "ring-assoc") {
            const auto d = ring_domain(ring);
            out.push_back(renamed(check_total_associativity(ring.label(), ring.add_op(), d, ring_mode()).report,
                                  "additive-associativity"));
            out.push_back(renamed(check_total_associativity(ring.label(), ring.mul_op(), d, ring_mode()).report,
                                  "multiplicative-associativity"));
        } else if (axiom == "ring-distrib") {
            out.push_back(
                check_distributivity(ring.label(), ring.add_op(), ring.mul_op(), ring_domain(ring), ring_mode()).report);
        } else if (axiom == "ring-comm") {
            out.push_back(check_commutativity(ring.label(), "additive-commutativity", ring.add_op(), ring_domain(ring),
                                              ring_mode())
                              .report);
        } else if (axiom == "ring-zero") {
            const auto z = ring.zero();
            if (!z) throw NoZero(ring.label() + " has no zero");
            out.push_back(check_zero_law(ring.label(), std::optional(ring.add_op()), ring.mul_op(), *z,
                                         ring_domain(ring), ring_mode())
                              .report);
        } else if (axiom == "gr-mul-assoc") {
            out.push_back(renamed(
                check_total_associativity(gr_label(), gr_mul_op(ctx_), element_domain(ctx_), sampled_mode()).report,
                "multiplicative-associativity"));
        } else if (axiom == "gr-add-assoc") {
            out.push_back(renamed(
                check_total_associativity(gr_label(), gr_add_op(ctx_), element_domain(ctx_), sampled_mode()).report,
                "additive-associativity"));
        } else if (axiom == "gr-add-comm") {
            out.push_back(check_commutativity(gr_label(), "additive-commutativity", gr_add_op(ctx_),
                                              element_domain(ctx_), sampled_mode())
                              .report);
        } else if (axiom == "gr-distrib") {
            out.push_back(check_distributivity(gr_label(), gr_add_op(ctx_), gr_mul_op(ctx_), element_domain(ctx_),
                                               sampled_mode())
                              .report);
        } else if (axiom == "gr-zero") {
            out.push_back(check_zero_law(gr_label(), std::optional(gr_add_op(ctx_)), gr_mul_op(ctx_), gr_zero(ctx_),
                                         element_domain(ctx_), sampled_mode())
                              .report);
        } else if (axiom == "aug-hom") {
            for (auto& c : check_augmentation_homomorphism(ctx_, sampled_mode())) out.push_back(std::move(c.report));
        } else {
            std::vector<std::string> expected = verify_axioms();
            expected.push_back("group-identity-strict");
            expected.push_back("all");
            throw ParseError(0, expected, axiom);
        }
        return out;
    }

    void verify(const std::string& args) {
        const auto w = words(args);
        if (w.size() > 1) throw ParseError(0, {"one axiom name"}, w[1]);
        const std::string which = w.empty() ? "all" : w[0];
        std::vector<AxiomReport> reports;
        if (which == "all") {
            for (const auto& a : verify_axioms()) {
                // Rings without a zero skip the zero law instead of aborting the batch.
                if (a == "ring-zero" && !ctx_.ring().zero()) continue;
                if (a == "gr-zero" && !ctx_.ring().zero()) continue;
                for (auto& r : check(a)) reports.push_back(std::move(r));
            }
        } else {
            reports = check(which);
        }
        bool all_hold = true;
        std::string text;
        json docs = json::array();
        for (const auto& r : reports) {
            all_hold = all_hold && r.holds();
            text += (text.empty() ? "" : "\n") + r.to_text();
            docs.push_back(r.to_json());
        }
        emit(text, {{"status", all_hold ? "holds" : "fails"}, {"reports", docs}});
        if (!all_hold) result.exit_code = verification_failure;
    }

    void arity(const std::string& args) {
        const auto w = words(args);
        if (w.empty()) {
            const auto& p = ctx_.profile();
            emit(to_string(p), {{"m_r", p.m_r},
                                {"n_r", p.n_r},
                                {"n_g", p.n_g},
                                {"ell_m", p.ell_m},
                                {"ell_n", p.ell_n},
                                {"ell_g", p.ell_g},
                                {"M_r", p.add_arity},
                                {"N_r", p.mul_arity}});
            return;
        }
        if (w.size() != 3 || (w[0] != "length" && w[0] != "power")) {
            throw ParseError(0, {"'arity'", "'arity length <n> <ell>'", "'arity power <n> <length>'"}, args);
        }
        const auto n = parse_count(w[1], "arity");
        const auto v = parse_count(w[2], w[0] == "length" ? "power" : "length");
        if (n < 2) throw DomainError("arity must be at least 2");
        if (w[0] == "length") {
            const auto len = admissible_length(n, v);
            emit(std::to_string(len), {{"n", n}, {"ell", v}, {"length", len}});
        } else {
            const auto ell = power_for_length(n, v);
            emit(std::to_string(ell), {{"n", n}, {"length", v}, {"ell", ell}});
        }
    }

    Session& s_;
    const GroupRingContext& ctx_;
};

}  // namespace

const std::vector<std::string>& verify_axioms() {
    static const std::vector<std::string> names = {
        "group-assoc", "group-quer",   "group-identity", "ring-assoc",  "ring-distrib",
        "ring-comm",   "ring-zero",    "gr-mul-assoc",   "gr-add-assoc", "gr-add-comm",
        "gr-distrib",  "gr-zero",      "aug-hom"};
    return names;
}

Command parse_command(const std::string& line) {
    const std::string t = trim(line);
    const auto space = t.find_first_of(" \t");
    if (space == std::string::npos) return {t, ""};
    return {t.substr(0, space), trim(std::string_view(t).substr(space + 1))};
}

CommandResult run_command(Session& session, const Command& command) {
    Runner runner(session);
    auto fail = [&](int code, const std::string& message) {
        runner.result.out.clear();
        runner.result.exit_code = code;
        if (session.json) {
            runner.result.out = json{{"error", message}, {"exit_code", code}}.dump() + "\n";
        }
        runner.result.err = "error: " + message + "\n";
    };
    try {
        runner.run(command);
    } catch (const ParseError& e) {
        fail(parse_failure, e.what());
    } catch (const DomainError& e) {
        fail(domain_failure, e.what());
    } catch (const Error& e) {
        fail(domain_failure, e.what());
    }
    return std::move(runner.result);
}

CommandResult run_line(Session& session, const std::string& line) { return run_command(session, parse_command(line)); }

int run_repl(Session& session, std::istream& in, std::ostream& out, std::ostream& err, bool prompt) {
    int last = ok;
    std::string line;
    while (true) {
        if (prompt) out << "pgr> " << std::flush;
        if (!std::getline(in, line)) break;
        const Command c = parse_command(line);
        if (c.verb.empty() || c.verb[0] == '#') continue;
        if (c.verb == ":quit") break;
        if (c.verb == ":ctx") {
            out << describe(session.ctx) << " seed=" << session.seed << "\n";
            last = ok;
            continue;
        }
        if (c.verb == ":seed") {
            try {
                session.seed = parse_count(c.args, "seed");
                last = ok;
            } catch (const ParseError& e) {
                err << "error: " << e.what() << "\n";
                last = parse_failure;
            }
            continue;
        }
        const auto r = run_command(session, c);
        out << r.out;
        err << r.err;
        last = r.exit_code;
    }
    if (prompt) out << "\n";
    return last;
}

}  // namespace pgr::dsl
