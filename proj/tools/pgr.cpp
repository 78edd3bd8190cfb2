#include "pgr/dsl/commands.hpp"

#include <CLI11.hpp>

#include <unistd.h>

#include <cstdlib>
#include <iostream>

namespace {

struct Flags {
    std::string config;
    std::string ring;
    std::optional<unsigned> q;
    std::optional<std::uint64_t> modulus;
    std::string group;
    std::optional<std::uint32_t> k;
    std::string base;
    std::optional<pgr::Arity> arity;
    std::optional<pgr::Arity> ell_m;
    std::optional<pgr::Arity> ell_n;
    std::optional<pgr::Arity> ell_g;
};

pgr::dsl::ContextSpec resolve(const Flags& f) {
    using pgr::ConfigError;
    pgr::dsl::ContextSpec spec;
    std::string path = f.config;
    if (path.empty()) {
        if (const char* env = std::getenv("PGR_CONFIG"); env && *env) path = env;
    }
    if (!path.empty()) spec = pgr::dsl::load_config_file(path, spec);

    if (!f.ring.empty()) {
        if (f.ring != "jroot" && f.ring != "odd_jroot") throw ConfigError("--ring must be jroot or odd_jroot");
        spec.ring_kind = f.ring;
    }
    if (f.q) {
        if (*f.q < 1 || *f.q > 64) throw ConfigError("--q must be in 1..64");
        spec.q = *f.q;
    }
    if (f.modulus) {
        if (*f.modulus < 2) throw ConfigError("--mod must be at least 2");
        spec.modulus = pgr::BigInt(*f.modulus);
    }
    if (!f.group.empty()) {
        if (f.group == "adiag") {
            spec.group_kind = "adiag_cyclic";
        } else if (f.group == "derived") {
            spec.group_kind = "derived_cyclic";
        } else {
            throw ConfigError("--group must be adiag or derived");
        }
    }
    if (!f.base.empty()) {
        const std::string prefix = "cyclic:";
        if (f.base.rfind(prefix, 0) != 0) throw ConfigError("--base must look like cyclic:<int>");
        try {
            const auto k = std::stoul(f.base.substr(prefix.size()));
            if (k < 1 || k > 65535) throw ConfigError("--base order must be in 1..65535");
            spec.k = static_cast<std::uint32_t>(k);
        } catch (const std::logic_error&) {
            throw ConfigError("--base must look like cyclic:<int>");
        }
    }
    if (f.k) {
        if (*f.k < 1 || *f.k > 65535) throw ConfigError("--k must be in 1..65535");
        spec.k = *f.k;
    }
    if (f.arity) {
        if (*f.arity < 2) throw ConfigError("--arity must be at least 2");
        spec.group_arity = *f.arity;
    }
    for (auto [flag, dst] : {std::pair{&f.ell_m, &spec.ell_m}, {&f.ell_n, &spec.ell_n}, {&f.ell_g, &spec.ell_g}}) {
        if (*flag) {
            if (**flag < 1) throw ConfigError("polyadic powers must be positive");
            *dst = **flag;
        }
    }
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polyadic group rings: evaluate, multiply and verify elements of R[G]", "pgr"};
    app.set_version_flag("--version", "pgr 0.1.0");

    Flags f;
    std::uint64_t seed = 0;
    std::uint64_t samples = 500;
    bool json = false;
    std::vector<std::string> words;

    app.add_option("--config", f.config, "JSON context file (default: $PGR_CONFIG)");
    app.add_option("--ring", f.ring, "ring kind: jroot or odd_jroot");
    app.add_option("--q", f.q, "root order q of j_q (multiplication arity q+1)");
    app.add_option("--mod", f.modulus, "reduce ring coefficients modulo this value");
    app.add_option("--group", f.group, "group kind: adiag or derived");
    app.add_option("--k", f.k, "order of the cyclic group C_k");
    app.add_option("--base", f.base, "base group of a derived group, cyclic:<k>");
    app.add_option("--arity", f.arity, "arity of a derived group");
    app.add_option("--ell-m", f.ell_m, "polyadic power of the ring addition");
    app.add_option("--ell-n", f.ell_n, "polyadic power of the ring multiplication");
    app.add_option("--ell-g", f.ell_g, "polyadic power of the group operation");
    app.add_option("--seed", seed, "seed for sampled checks");
    app.add_option("--samples", samples, "number of samples for sampled checks");
    app.add_flag("--json", json, "machine-readable output");
    app.add_option("command", words,
                   "eval|mul|add|aug|quer|identities|table|verify|arity|repl followed by operands")
        ->required();
    app.footer("Operands of mul and add are separated by ';'. Exit codes: 0 ok, 1 parse error, "
               "2 arity or domain error, 3 verification failure.");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : pgr::dsl::parse_failure;
    }

    std::optional<pgr::dsl::Session> session;
    try {
        session.emplace(pgr::dsl::build_context(resolve(f)));
    } catch (const pgr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return pgr::dsl::domain_failure;
    }
    session->seed = seed;
    session->samples = samples;
    session->json = json;

    if (words.front() == "repl") {
        if (words.size() > 1) {
            std::cerr << "error: repl takes no operands\n";
            return pgr::dsl::parse_failure;
        }
        return pgr::dsl::run_repl(*session, std::cin, std::cout, std::cerr, isatty(STDIN_FILENO) != 0);
    }

    std::string args;
    for (std::size_t i = 1; i < words.size(); ++i) args += (i > 1 ? " " : "") + words[i];
    const auto result = pgr::dsl::run_command(*session, {words.front(), args});
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
