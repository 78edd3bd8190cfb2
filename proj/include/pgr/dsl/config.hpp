#pragma once

#include "pgr/groupring.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace pgr::dsl {

// Parameters of a group-ring context, as read from JSON and command-line flags.
//
//   {"ring":  {"kind": "jroot", "q": 2, "modulus": 5},
//    "group": {"kind": "adiag_cyclic", "k": 3}
//             | {"kind": "derived_cyclic", "k": 3, "arity": 3},
//    "powers": {"ell_m": 1, "ell_n": 1, "ell_g": 1}}
struct ContextSpec {
    std::string ring_kind = "jroot";  // jroot | odd_jroot
    unsigned q = 2;
    std::optional<BigInt> modulus;
    std::string group_kind = "adiag_cyclic";  // adiag_cyclic | derived_cyclic
    std::uint32_t k = 3;
    Arity group_arity = 3;
    Arity ell_m = 1;
    Arity ell_n = 1;
    Arity ell_g = 1;
};

// Throws ConfigError on unknown keys, wrong types or out-of-range values.
ContextSpec spec_from_json(const nlohmann::json& doc, ContextSpec base = {});
ContextSpec load_config_file(const std::string& path, ContextSpec base = {});

nlohmann::json to_json(const ContextSpec& spec);

// Runs validate_profile; throws QuantizationMismatch on a mismatch.
GroupRingContext build_context(const ContextSpec& spec);

// One-line description of a context: ring, group and arity profile.
std::string describe(const GroupRingContext& ctx);

}  // namespace pgr::dsl
