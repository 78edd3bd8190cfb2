#include "pgr/dsl/config.hpp"

#include <fstream>
#include <set>

namespace pgr::dsl {

namespace {

using nlohmann::json;

void only_keys(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
    if (!obj.is_object()) throw ConfigError(where + " must be an object");
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
    }
}

std::uint64_t positive(const json& obj, const std::string& where, const char* key) {
    const json& v = obj.at(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
        throw ConfigError(where + "." + key + " must be a positive integer");
    }
    return v.get<std::uint64_t>();
}

std::string text(const json& obj, const std::string& where, const char* key) {
    const json& v = obj.at(key);
    if (!v.is_string()) throw ConfigError(where + "." + key + " must be a string");
    return v.get<std::string>();
}

}  // namespace

ContextSpec spec_from_json(const json& doc, ContextSpec base) {
    only_keys(doc, "config", {"ring", "group", "powers"});

    if (doc.contains("ring")) {
        const json& ring = doc["ring"];
        only_keys(ring, "ring", {"kind", "q", "modulus"});
        if (ring.contains("kind")) base.ring_kind = text(ring, "ring", "kind");
        if (base.ring_kind != "jroot" && base.ring_kind != "odd_jroot") {
            throw ConfigError("ring.kind must be \"jroot\" or \"odd_jroot\", got \"" + base.ring_kind + "\"");
        }
        if (ring.contains("q")) {
            const auto q = positive(ring, "ring", "q");
            if (q > 64) throw ConfigError("ring.q must be at most 64");
            base.q = static_cast<unsigned>(q);
        }
        if (ring.contains("modulus")) {
            if (ring["modulus"].is_null()) {
                base.modulus.reset();
            } else {
                const auto n = positive(ring, "ring", "modulus");
                if (n < 2) throw ConfigError("ring.modulus must be at least 2");
                base.modulus = BigInt(n);
            }
        }
    }

    if (doc.contains("group")) {
        const json& group = doc["group"];
        only_keys(group, "group", {"kind", "k", "arity"});
        if (group.contains("kind")) base.group_kind = text(group, "group", "kind");
        if (base.group_kind != "adiag_cyclic" && base.group_kind != "derived_cyclic") {
            throw ConfigError("group.kind must be \"adiag_cyclic\" or \"derived_cyclic\", got \"" +
                              base.group_kind + "\"");
        }
        if (group.contains("k")) {
            const auto k = positive(group, "group", "k");
            if (k > 65535) throw ConfigError("group.k must be at most 65535");
            base.k = static_cast<std::uint32_t>(k);
        }
        if (group.contains("arity")) {
            base.group_arity = positive(group, "group", "arity");
            if (base.group_arity < 2) throw ConfigError("group.arity must be at least 2");
        }
    }

    if (doc.contains("powers")) {
        const json& powers = doc["powers"];
        only_keys(powers, "powers", {"ell_m", "ell_n", "ell_g"});
        if (powers.contains("ell_m")) base.ell_m = positive(powers, "powers", "ell_m");
        if (powers.contains("ell_n")) base.ell_n = positive(powers, "powers", "ell_n");
        if (powers.contains("ell_g")) base.ell_g = positive(powers, "powers", "ell_g");
    }
    return base;
}

ContextSpec load_config_file(const std::string& path, ContextSpec base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    return spec_from_json(doc, std::move(base));
}

json to_json(const ContextSpec& spec) {
    json ring = {{"kind", spec.ring_kind}, {"q", spec.q}};
    if (spec.modulus) ring["modulus"] = spec.modulus->convert_to<std::uint64_t>();
    json group = {{"kind", spec.group_kind}, {"k", spec.k}};
    if (spec.group_kind == "derived_cyclic") group["arity"] = spec.group_arity;
    return {{"ring", ring},
            {"group", group},
            {"powers", {{"ell_m", spec.ell_m}, {"ell_n", spec.ell_n}, {"ell_g", spec.ell_g}}}};
}

GroupRingContext build_context(const ContextSpec& spec) {
    if (spec.ring_kind == "odd_jroot" && spec.modulus) {
        throw ConfigError("the odd j-root carrier is defined over Z only; drop ring.modulus");
    }
    PolyadicRing ring =
        spec.ring_kind == "odd_jroot" ? PolyadicRing::odd_jroot(spec.q) : PolyadicRing::jroot(spec.q, spec.modulus);
    NaryGroup group = spec.group_kind == "derived_cyclic" ? NaryGroup::derived_cyclic(spec.k, spec.group_arity)
                                                          : NaryGroup::adiag_cyclic(spec.k);
    return GroupRingContext(std::move(ring), std::move(group), spec.ell_m, spec.ell_n, spec.ell_g);
}

std::string describe(const GroupRingContext& ctx) {
    return ctx.ring().label() + " x " + ctx.group().label() + " " + to_string(ctx.profile());
}

}  // namespace pgr::dsl
