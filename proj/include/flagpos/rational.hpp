#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

#include "flagpos/errors.hpp"

namespace flagpos {

// Exact arithmetic throughout: arbitrary-precision integers and rationals
// backed by GMP. Rat values are always canonical (gcd(|num|, den) = 1,
// den > 0, zero is 0/1); GMP maintains this for every arithmetic result.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

inline int sign_of(const Rat& q) { return q.sign(); }
inline int sign_of(const Int& z) { return z.sign(); }

// Parses "p/q" or "p". GMP's string parser does not canonicalize, so we do.
inline Rat parse_rat(const std::string& text) {
    Rat q;
    try {
        q = Rat(text);
    } catch (const std::exception&) {
        throw ArgumentError("not a rational: '" + text + "'");
    }
    if (rat_den(q) == 0) throw ArgumentError("zero denominator: '" + text + "'");
    mpq_canonicalize(q.backend().data());
    return q;
}

inline std::string rat_str(const Rat& q) { return q.str(); }

// q^e for integer e >= 0 (0^0 = 1).
inline Rat rat_pow(const Rat& q, unsigned long e) {
    Rat r(1);
    Rat base = q;
    while (e > 0) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

// Largest integer <= q.
inline Int rat_floor(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int quo = n / d;
    if (n < 0 && quo * d != n) --quo;
    return quo;
}

}  // namespace flagpos
