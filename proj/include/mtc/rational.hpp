#pragma once

#include <gmpxx.h>
#include <string>

#include "mtc/error.hpp"

namespace mtc {

using Rational = mpq_class;

// num/den as a canonical rational; den must be nonzero.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0)
        throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "a/b" or "a" (arbitrary precision).
inline Rational parse_rational(const std::string& s) {
    try {
        Rational r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw DomainError("cannot parse rational: '" + s + "'");
    }
}

// Canonical "a/b" (or "a" when the denominator is 1).
inline std::string to_string(const Rational& r) {
    return r.get_str();
}

// Always prints an explicit denominator, e.g. "1/1", "-25/24".
inline std::string to_string_frac(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// r^e for integer e (e may be negative; r must be nonzero then).
inline Rational rational_pow(const Rational& r, long e) {
    if (e == 0)
        return Rational(1);
    Rational base = r;
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-(e + 1)) + 1ul
                             : static_cast<unsigned long>(e);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), k);
    out.canonicalize();
    if (invert) {
        if (out == 0)
            throw DomainError("zero base with negative exponent");
        out = Rational(1) / out;
    }
    return out;
}

} // namespace mtc
