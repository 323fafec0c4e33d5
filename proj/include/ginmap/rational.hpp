#ifndef GINMAP_RATIONAL_HPP
#define GINMAP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "ginmap/errors.hpp"

namespace ginmap {

// Arbitrary-precision rational, always in canonical form: gcd(|num|, den) = 1,
// den >= 1, zero is 0/1.  GMP's mpq_class maintains exactly this invariant as
// long as construction goes through rational() below (the raw two-argument
// mpq_class constructor does not canonicalize).
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw ZeroDivisionError("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ZeroDivisionError("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace ginmap

#endif
