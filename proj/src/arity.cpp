#include "pgr/arity.hpp"

#include <sstream>

namespace pgr {

namespace {

Arity checked_mul(Arity a, Arity b) {
    Arity out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw DomainError("arity arithmetic overflows 64 bits");
    return out;
}

Arity checked_add(Arity a, Arity b) {
    Arity out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw DomainError("arity arithmetic overflows 64 bits");
    return out;
}

void require_arity(Arity n, const char* name) {
    if (n < 2) throw DomainError(std::string(name) + " must be at least 2, got " + std::to_string(n));
}

void require_power(Arity ell, const char* name) {
    if (ell < 1) throw DomainError(std::string(name) + " must be at least 1, got 0");
}

}  // namespace

Arity admissible_length(Arity n, Arity ell) {
    require_arity(n, "arity");
    require_power(ell, "polyadic power");
    return checked_add(checked_mul(ell, n - 1), 1);
}

Arity power_for_length(Arity n, Arity length) {
    require_arity(n, "arity");
    if (length < n || (length - 1) % (n - 1) != 0) {
        throw InadmissibleLength("length " + std::to_string(length) + " is not admissible for " +
                                 std::to_string(n) + "-ary operations");
    }
    return (length - 1) / (n - 1);
}

ArityProfile validate_profile(Arity m_r, Arity n_r, Arity n_g, Arity ell_m, Arity ell_n, Arity ell_g) {
    require_arity(m_r, "m_r");
    require_arity(n_r, "n_r");
    require_arity(n_g, "n_g");
    require_power(ell_m, "ell_m");
    require_power(ell_n, "ell_n");
    require_power(ell_g, "ell_g");

    const Arity ring_side = admissible_length(n_r, ell_n);
    const Arity group_side = admissible_length(n_g, ell_g);
    if (ring_side != group_side) {
        throw QuantizationMismatch("ell_n*(n_r-1) = " + std::to_string(ring_side - 1) +
                                   " differs from ell_g*(n_g-1) = " + std::to_string(group_side - 1));
    }

    ArityProfile p;
    p.m_r = m_r;
    p.n_r = n_r;
    p.n_g = n_g;
    p.ell_m = ell_m;
    p.ell_n = ell_n;
    p.ell_g = ell_g;
    p.add_arity = admissible_length(m_r, ell_m);
    p.mul_arity = ring_side;
    return p;
}

std::string to_string(const ArityProfile& p) {
    std::ostringstream out;
    out << "m_r=" << p.m_r << " n_r=" << p.n_r << " n_g=" << p.n_g << " ell_m=" << p.ell_m
        << " ell_n=" << p.ell_n << " ell_g=" << p.ell_g << " M_r=" << p.add_arity
        << " N_r=" << p.mul_arity;
    return out.str();
}

}  // namespace pgr
