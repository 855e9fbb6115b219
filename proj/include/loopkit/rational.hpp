#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace loopkit {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p", "-p" and "p/q"; the result is canonical (lowest terms,
// positive denominator). Throws ParseError on anything else, including q = 0.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational &x);

bool is_integer(const Rational &x);

// Fixed-point decimal rendering with `digits` digits after the point,
// truncated toward zero.
std::string to_decimal(const Rational &x, int digits);

} // namespace loopkit
