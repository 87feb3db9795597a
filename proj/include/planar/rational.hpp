#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace planar {

using Rational = mpq_class;

// p/q reduced to lowest terms; q != 0.
Rational make_rational(long p, long q);

// "p/q" in lowest terms with the sign on the numerator, "p" when q = 1.
std::string to_string(const Rational& q);

// Accepts "p" or "p/q" (optional leading sign); the result is canonicalized.
Rational parse_rational(std::string_view text);

// base^exponent for a signed integer exponent; base must be nonzero when exponent < 0.
Rational pow(const Rational& base, long exponent);

} // namespace planar
