#pragma once

#include "pgr/errors.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace pgr {

using Arity = std::uint64_t;

// The arities and polyadic powers of a group-ring construction. `add_arity`
// and `mul_arity` are the derived arities of the group ring itself.
struct ArityProfile {
    Arity m_r = 2;
    Arity n_r = 2;
    Arity n_g = 2;
    Arity ell_m = 1;
    Arity ell_n = 1;
    Arity ell_g = 1;
    Arity add_arity = 2;
    Arity mul_arity = 2;

    bool operator==(const ArityProfile&) const = default;
};

// Number of letters consumed by `ell` nested n-ary operations: ell*(n-1)+1.
Arity admissible_length(Arity n, Arity ell);

// Inverse of admissible_length; throws InadmissibleLength when no integral power exists.
Arity power_for_length(Arity n, Arity length);

// Builds a profile, requiring ell_n*(n_r-1) == ell_g*(n_g-1).
ArityProfile validate_profile(Arity m_r, Arity n_r, Arity n_g, Arity ell_m, Arity ell_n, Arity ell_g);

std::string to_string(const ArityProfile& profile);

template <class T>
struct NaryOp {
    Arity arity = 2;
    std::function<T(std::span<const T>)> fn;

    T operator()(std::span<const T> polyad) const {
        if (polyad.size() != arity) throw ArityMismatch("n-ary operation", arity, polyad.size());
        return fn(polyad);
    }
    T operator()(const std::vector<T>& polyad) const { return (*this)(std::span<const T>(polyad)); }
};

// Left-nested composition op[op[...op[w0..w_{n-1}]...], ...] over a word of
// admissible length for (op.arity, ell).
template <class T>
T iterate_op(const NaryOp<T>& op, Arity ell, std::span<const T> word) {
    const Arity expected = admissible_length(op.arity, ell);
    if (word.size() != expected) {
        throw InadmissibleLength("word of length " + std::to_string(word.size()) +
                                 " cannot be composed by " + std::to_string(ell) + " " +
                                 std::to_string(op.arity) + "-ary operations (needs " +
                                 std::to_string(expected) + ")");
    }
    const std::size_t n = op.arity;
    std::vector<T> polyad(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(n));
    T acc = op(polyad);
    for (std::size_t pos = n; pos < word.size(); pos += n - 1) {
        polyad[0] = acc;
        for (std::size_t i = 1; i < n; ++i) polyad[i] = word[pos + i - 1];
        acc = op(polyad);
    }
    return acc;
}

template <class T>
T iterate_op(const NaryOp<T>& op, Arity ell, const std::vector<T>& word) {
    return iterate_op(op, ell, std::span<const T>(word));
}

// Same as iterate_op, with the power inferred from the word length.
template <class T>
T iterate_word(const NaryOp<T>& op, std::span<const T> word) {
    return iterate_op(op, power_for_length(op.arity, word.size()), word);
}

// x^<ell>: ell nested applications over ell*(n-1)+1 copies of x.
template <class T>
T polyadic_power(const NaryOp<T>& op, const T& x, Arity ell) {
    const std::vector<T> word(admissible_length(op.arity, ell), x);
    return iterate_op(op, ell, std::span<const T>(word));
}

}  // namespace pgr
