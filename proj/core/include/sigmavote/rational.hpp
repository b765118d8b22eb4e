#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace sigmavote {

// Exact arithmetic for weights, margins and metric values. Tie detection
// depends on exact comparison, so nothing upstream of reporting uses floats.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

/// Accepts integers ("3"), fractions ("3/2") and finite decimals ("1.25").
/// Throws ValueError on anything else.
Rational parse_rational(std::string_view text);

double to_double(const Rational& value);

/// Decimal rendering with `significant` significant digits (printf %g style).
std::string to_decimal(const Rational& value, int significant = 12);

/// Fixed-point rendering, e.g. 2 decimals for table display.
std::string to_fixed(const Rational& value, int decimals);

bool is_integer(const Rational& value);

}  // namespace sigmavote
