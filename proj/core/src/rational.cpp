#include "sigmavote/rational.hpp"

#include <cctype>
#include <cstdio>

#include "sigmavote/errors.hpp"

namespace sigmavote {

namespace {

// mpz_int treats a leading 0 as an octal prefix, so strip zeros first.
boost::multiprecision::mpz_int decimal_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return boost::multiprecision::mpz_int(std::string(digits.empty() ? "0" : digits));
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::string to_string(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto fail = [&]() -> Rational {
    throw ValueError("not a number: '" + std::string(text) + "'");
  };

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    const boost::multiprecision::mpz_int d = decimal_integer(den);
    if (d == 0) throw ValueError("zero denominator: '" + std::string(text) + "'");
    result = Rational(decimal_integer(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      return fail();
    }
    std::string digits = std::string(whole) + std::string(frac);
    boost::multiprecision::mpz_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    result = Rational(decimal_integer(digits), scale);
  } else {
    if (!all_digits(s)) return fail();
    result = Rational(decimal_integer(s));
  }
  return negative ? Rational(-result) : result;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::string to_decimal(const Rational& value, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, to_double(value));
  return buf;
}

std::string to_fixed(const Rational& value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, to_double(value));
  return buf;
}

bool is_integer(const Rational& value) { return boost::multiprecision::denominator(value) == 1; }

}  // namespace sigmavote
