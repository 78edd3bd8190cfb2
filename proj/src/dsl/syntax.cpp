#include "pgr/dsl/syntax.hpp"

#include <cctype>

namespace pgr::dsl {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ElementExpr element() {
        skip_ws();
        if (at_end()) fail({"term", "'0'"});
        if (peek() == '0') {
            const std::size_t saved = pos_;
            ++pos_;
            skip_ws();
            if (at_end()) return {};
            pos_ = saved;
        }
        ElementExpr out;
        out.terms.push_back(term());
        while (true) {
            skip_ws();
            if (at_end()) break;
            if (peek() != '+') fail({"'+'", "end of input"});
            ++pos_;
            skip_ws();
            out.terms.push_back(term());
        }
        return out;
    }

    BasisExpr basis_only() {
        skip_ws();
        BasisExpr b = basis();
        skip_ws();
        if (!at_end()) fail({"end of input"});
        return b;
    }

private:
    TermExpr term() {
        TermExpr t;
        t.offset = pos_;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
            t.negative = peek() == '-';
            ++pos_;
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail({"integer"});
        t.magnitude = BigInt(std::string(digits()));
        t.symbol_offset = pos_;
        if (!at_end() && peek() == 'j') {
            const std::size_t start = pos_++;
            digits();
            t.ring_symbol = std::string(text_.substr(start, pos_ - start));
        }
        skip_ws();
        expect('*', "'*'");
        skip_ws();
        t.basis = basis();
        return t;
    }

    BasisExpr basis() {
        BasisExpr b;
        b.offset = pos_;
        expect('g', "'g'");
        if (!at_end() && peek() == '(') {
            ++pos_;
            skip_ws();
            b.indices.push_back(index());
            skip_ws();
            if (!at_end() && peek() == ',') {
                ++pos_;
                skip_ws();
                b.indices.push_back(index());
                skip_ws();
            }
            expect(')', "')'");
            return b;
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail({"'('", "label index"});
        b.legacy = true;
        b.indices.push_back(index());
        return b;
    }

    std::uint64_t index() {
        const std::size_t start = pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail({"integer"});
        const auto d = digits();
        if (d.size() > 18) throw KeyRangeError("group index at offset " + std::to_string(start) + " is too large");
        return std::stoull(std::string(d));
    }

    std::string_view digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    void expect(char c, const char* name) {
        if (at_end() || peek() != c) fail({name});
        ++pos_;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        std::string found = at_end() ? "" : std::string(1, peek());
        throw ParseError(pos_, std::move(expected), found);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ElementExpr parse_element(std::string_view text) { return Parser(text).element(); }

BasisExpr parse_basis(std::string_view text) { return Parser(text).basis_only(); }

GroupKey to_key(const GroupRingContext& ctx, const BasisExpr& basis) {
    const auto& group = ctx.group();
    if (basis.legacy) return group.from_legacy_index(basis.indices.front());

    const std::size_t wanted = group.kind() == NaryGroup::Kind::adiag_cyclic ? 2 : 1;
    if (basis.indices.size() != wanted) {
        throw KeyRangeError("elements of " + group.label() + " take " + std::to_string(wanted) +
                            " index(es), offset " + std::to_string(basis.offset));
    }
    for (auto i : basis.indices) {
        if (i >= group.order_k()) {
            throw KeyRangeError("index " + std::to_string(i) + " at offset " + std::to_string(basis.offset) +
                                " is outside Z_" + std::to_string(group.order_k()));
        }
    }
    GroupKey key{static_cast<std::uint32_t>(basis.indices[0]), 0};
    if (wanted == 2) key.n = static_cast<std::uint32_t>(basis.indices[1]);
    return key;
}

GroupRingElement to_element(const GroupRingContext& ctx, const ElementExpr& expr) {
    const auto& ring = ctx.ring();
    std::map<GroupKey, std::vector<RingScalar>> buckets;
    for (const auto& t : expr.terms) {
        if (t.ring_symbol != ring.symbol()) {
            const std::string wanted = ring.symbol().empty() ? "no ring symbol" : "'" + ring.symbol() + "'";
            throw ParseError(t.symbol_offset, {wanted}, t.ring_symbol.empty() ? "*" : t.ring_symbol);
        }
        BigInt k = t.magnitude;
        if (t.negative) k = -k;
        const auto r = ring.scalar(std::move(k));
        if (!ring.contains(r)) {
            throw DomainError(ring.render(r) + " at offset " + std::to_string(t.offset) + " is not in " +
                              ring.label());
        }
        buckets[to_key(ctx, t.basis)].push_back(r);
    }
    RawSupport raw;
    for (const auto& [key, coefficients] : buckets) {
        raw[key] = ring.sum(std::span<const RingScalar>(coefficients));
    }
    return ctx.normalize(std::move(raw));
}

GroupRingElement parse(const GroupRingContext& ctx, std::string_view text) {
    return to_element(ctx, parse_element(text));
}

std::string print_canonical(const GroupRingContext& ctx, const GroupRingElement& x) { return ctx.render(x); }

}  // namespace pgr::dsl
