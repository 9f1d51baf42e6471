#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace pascalrank {

// Exact arithmetic backbone. Integers are arbitrary precision, rationals
// are kept in canonical form (positive denominator, reduced).
using Integer = mpz_class;
using Rational = mpq_class;

/// n! as an exact integer.
Integer factorial(std::uint64_t n);

/// Falling factorial x(x-1)...(x-k+1); 1 for k = 0, 0 when k > x.
Integer falling_factorial(std::uint64_t x, std::uint64_t k);

/// Parse an exact rational from "42", "-3/7", "2.5" or ".125".
/// Decimal forms are converted exactly (never through binary floating
/// point). Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Render to a fixed number of decimal places, rounding half to even.
std::string format_decimal(const Rational& value, unsigned places);

/// Canonical "p/q" (or just "p" when q = 1).
std::string fraction_string(const Rational& value);

} // namespace pascalrank
