#pragma once

#include "pgr/groupring.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pgr::dsl {

// Grammar (whitespace allowed between tokens):
//
//   element     := term ("+" term)* | "0"
//   term        := signed-int ring-symbol "*" basis
//   ring-symbol := "j" digits? | ""
//   basis       := "g(" int ("," int)? ")" | "g" int
//
// "g(m,n)" names an antidiagonal element, "g(x)" an element of a derived
// cyclic group, and "g<i>" the legacy 1-based label.
struct BasisExpr {
    bool legacy = false;
    std::vector<std::uint64_t> indices;
    std::size_t offset = 0;
};

struct TermExpr {
    bool negative = false;
    BigInt magnitude;
    std::string ring_symbol;
    std::size_t symbol_offset = 0;
    BasisExpr basis;
    std::size_t offset = 0;
};

// An empty term list is the literal "0".
struct ElementExpr {
    std::vector<TermExpr> terms;
};

ElementExpr parse_element(std::string_view text);
BasisExpr parse_basis(std::string_view text);

// Resolves against the active context: checks the ring symbol, maps keys
// (KeyRangeError when out of range) and gathers repeated keys.
GroupRingElement to_element(const GroupRingContext& ctx, const ElementExpr& expr);
GroupKey to_key(const GroupRingContext& ctx, const BasisExpr& basis);

GroupRingElement parse(const GroupRingContext& ctx, std::string_view text);

std::string print_canonical(const GroupRingContext& ctx, const GroupRingElement& x);

}  // namespace pgr::dsl
