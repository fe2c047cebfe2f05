#pragma once

#include <gmpxx.h>

#include <string>

namespace hhops {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" with q omitted when 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p" or "p/q" with an optional leading sign; throws ParseError.
Rational parse_rational(const std::string& text);

inline int sign_power(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace hhops
