#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qring {

/// Exact rational scalar. GMP's mpq_class already keeps the canonical form
/// this library relies on (gcd(|num|, den) = 1, den >= 1), so it is used
/// directly rather than wrapped.
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonicalized rational from a numerator/denominator pair.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool fits_long(const Integer& z);

/// "3", "-1/2", "0". Same format parse_rational accepts.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

}  // namespace qring
