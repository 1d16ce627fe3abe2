#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace curvesos {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "n", "-n", "n/d"; result is canonicalized. Throws ParseError.
Rational parse_rational(std::string_view s);
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Exact square root when q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

Integer isqrt(const Integer& n);

// Best rational approximation of x with denominator <= max_den.
Rational rationalize(double x, const Integer& max_den);
// Exact binary value of a finite double.
Rational exact_from_double(double x);
double to_double(const Rational& q);

Rational rational_abs(const Rational& q);

}  // namespace curvesos
