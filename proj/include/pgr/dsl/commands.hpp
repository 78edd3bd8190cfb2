#pragma once

#include "pgr/dsl/config.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pgr::dsl {

enum ExitCode : int { ok = 0, parse_failure = 1, domain_failure = 2, verification_failure = 3 };

struct Session {
    explicit Session(GroupRingContext context) : ctx(std::move(context)) {}

    GroupRingContext ctx;
    std::uint64_t seed = 0;
    std::uint64_t samples = 500;
    bool json = false;
};

// verb is one of eval, mul, add, aug, quer, identities, table, verify, arity.
struct Command {
    std::string verb;
    std::string args;
};

struct CommandResult {
    std::string out;
    std::string err;
    int exit_code = ok;
};

Command parse_command(const std::string& line);

// Never throws for library errors; they become exit codes and messages.
CommandResult run_command(Session& session, const Command& command);
CommandResult run_line(Session& session, const std::string& line);

// Names run by `verify all`, in order. `verify` also accepts
// group-identity-strict, which tests each identity at every slot.
const std::vector<std::string>& verify_axioms();

// Reads commands until end of input or `:quit`. Meta-commands: `:ctx`,
// `:seed N`, `:quit`. Errors are reported and the session continues.
// Returns the exit code of the last command.
int run_repl(Session& session, std::istream& in, std::ostream& out, std::ostream& err, bool prompt);

}  // namespace pgr::dsl
