#ifndef RIGIDKIT_RATIONAL_HPP
#define RIGIDKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "rigidkit/errors.hpp"

namespace rigidkit {

// Exact rational scalar. GMP keeps the denominator positive and the
// fraction reduced through arithmetic as long as operands are canonical,
// so every construction from raw numerator/denominator pairs must go
// through rat() below.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw ParseError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "3", "-3/4", "12/8" (reduced on input).
inline Rational ratFromString(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw ParseError("cannot parse rational: " + s);
    q.canonicalize();
    return q;
}

inline std::string toString(const Rational& q) { return q.get_str(); }

inline bool isCanonical(const Rational& q) {
    if (q.get_den() <= 0) return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return q == 0 ? q.get_den() == 1 : g == 1;
}

using QVector = std::vector<Rational>;

inline bool isZeroVector(const QVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

} // namespace rigidkit

#endif
