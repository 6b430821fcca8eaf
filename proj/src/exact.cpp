#include "ouroboros/exact.hpp"

#include "ouroboros/errors.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace ouroboros::exact {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Literal exponents beyond this are rejected rather than materialized as
// huge integers; doubles overflow long before.
constexpr long kMaxDecimalExponent = 1000;

mpz_class pow10(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

}  // namespace

bool parse_decimal(std::string_view text, Rational& out) {
  std::size_t i = 0;
  std::string digits;
  long scale = 0;
  bool any_digit = false;
  while (i < text.size() && is_digit(text[i])) {
    digits.push_back(text[i++]);
    any_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && is_digit(text[i])) {
      digits.push_back(text[i++]);
      --scale;
      any_digit = true;
    }
  }
  if (!any_digit) return false;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
    if (i == text.size() || !is_digit(text[i])) return false;
    long exponent = 0;
    while (i < text.size() && is_digit(text[i])) {
      exponent = exponent * 10 + (text[i++] - '0');
      if (exponent > kMaxDecimalExponent) return false;
    }
    scale += negative ? -exponent : exponent;
  }
  if (i != text.size()) return false;

  mpz_class mantissa(digits, 10);
  if (scale >= 0) {
    out = Rational(mantissa * pow10(static_cast<unsigned long>(scale)));
  } else {
    out = Rational(mantissa, pow10(static_cast<unsigned long>(-scale)));
    out.canonicalize();
  }
  return true;
}

Rational parse_number(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto signed_decimal = [&](std::string_view s) {
    s = trim(s);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }
    Rational value;
    if (!parse_decimal(s, value)) {
      throw InvalidArgument("not a decimal number: '" + std::string(text) + "'");
    }
    return negative ? Rational(-value) : value;
  };

  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return signed_decimal(text);
  Rational numerator = signed_decimal(text.substr(0, slash));
  Rational denominator = signed_decimal(text.substr(slash + 1));
  if (denominator == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  Rational result = numerator / denominator;
  result.canonicalize();
  return result;
}

std::string shortest(double value) {
  std::array<char, 64> buffer{};
  auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), end);
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw InvalidArgument("non-finite value cannot enter an expression");
  return parse_number(shortest(value));
}

double to_double(const Rational& value) {
  const double truncated = value.get_d();
  if (!std::isfinite(truncated)) return truncated;
  double best = truncated;
  Rational best_error = abs(Rational(truncated) - value);
  for (double candidate : {std::nextafter(truncated, -std::numeric_limits<double>::infinity()),
                           std::nextafter(truncated, std::numeric_limits<double>::infinity())}) {
    if (!std::isfinite(candidate)) continue;
    Rational error = abs(Rational(candidate) - value);
    if (error < best_error) {
      best = candidate;
      best_error = error;
    }
  }
  return best;
}

bool has_terminating_decimal(const Rational& value) {
  mpz_class q = value.get_den();
  while (q % 2 == 0) q /= 2;
  while (q % 5 == 0) q /= 5;
  return q == 1;
}

std::string to_string(const Rational& value) {
  if (!has_terminating_decimal(value)) return value.get_str();

  mpz_class q = value.get_den();
  unsigned long twos = 0;
  unsigned long fives = 0;
  while (q % 2 == 0) { q /= 2; ++twos; }
  while (q % 5 == 0) { q /= 5; ++fives; }
  const unsigned long places = std::max(twos, fives);
  mpz_class scaled = value.get_num() * pow10(places) / value.get_den();

  const bool negative = scaled < 0;
  std::string digits = mpz_class(abs(scaled)).get_str();
  if (places > 0) {
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
    while (digits.back() == '0') digits.pop_back();
    if (digits.back() == '.') digits.pop_back();
  }
  return negative ? "-" + digits : digits;
}

Rational sum(std::span<const Rational> values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

}  // namespace ouroboros::exact
