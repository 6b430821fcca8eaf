#pragma once

// Exact rational helpers used for expression constants and exact sums.

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>

namespace ouroboros::exact {

using Rational = mpq_class;

/// Parses a decimal literal ("12", "0.25", "1.5e-3") exactly. Returns false
/// when `text` is not a complete decimal literal.
bool parse_decimal(std::string_view text, Rational& out);

/// Parses a decimal literal or a fraction "p/q" (each side a decimal literal).
/// Throws InvalidArgument on malformed text or a zero denominator.
Rational parse_number(std::string_view text);

/// The rational whose decimal expansion is the shortest string that
/// round-trips `value`. 0.1 maps to 1/10, not to the binary expansion.
Rational from_double(double value);

/// Correctly rounded (to nearest) conversion.
double to_double(const Rational& value);

/// Exact decimal text when the denominator has only factors 2 and 5,
/// otherwise "p/q".
std::string to_string(const Rational& value);

bool has_terminating_decimal(const Rational& value);

/// Shortest round-trip decimal text of a double.
std::string shortest(double value);

Rational sum(std::span<const Rational> values);

}  // namespace ouroboros::exact
