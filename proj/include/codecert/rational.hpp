#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace codecert {

/// Exact rational number. All LP and certificate arithmetic goes through this type.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q", or a decimal such as "-1.25e-3" into an exact rational.
/// A decimal with d fractional digits gets denominator 10^d before reduction.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Truncated decimal rendering with a fixed number of fractional digits.
std::string to_decimal(const Rational& value, int digits = 30);

/// Parses a non-negative integer or a factorial such as "23!".
Integer parse_group_order(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace codecert
