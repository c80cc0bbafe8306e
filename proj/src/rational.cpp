#include "plscape/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace plscape {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// gmp treats a leading 0 as an octal prefix.
Integer decimal_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return Integer(std::string(digits));
}

Integer pow10(long exponent) {
  Integer result = 1;
  for (long i = 0; i < exponent; ++i) result *= 10;
  return result;
}

Rational parse_decimal(std::string_view text, std::string_view original) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = text.substr(e + 1);
    text = text.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) {
      throw std::invalid_argument("bad exponent in number '" + std::string(original) + "'");
    }
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }

  std::string_view whole = text;
  std::string_view frac;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    whole = text.substr(0, dot);
    frac = text.substr(dot + 1);
  }
  if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
      (!frac.empty() && !all_digits(frac))) {
    throw std::invalid_argument("not a finite number: '" + std::string(original) + "'");
  }

  Integer digits = decimal_integer(std::string(whole) + std::string(frac));
  exponent -= static_cast<long>(frac.size());
  Rational value = exponent >= 0 ? Rational(digits * pow10(exponent))
                                 : Rational(digits) / Rational(pow10(-exponent));
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '+' || num_digits.front() == '-')) {
      num_digits.remove_prefix(1);
    }
    if (!all_digits(num_digits) || !all_digits(den)) {
      throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
    }
    Integer d = decimal_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Integer n = decimal_integer(num_digits);
    if (num.front() == '-') n = -n;
    return Rational(n) / Rational(d);
  }
  return parse_decimal(text, text);
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal(const Rational& value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, to_double(value));
  return buffer;
}

Integer floor(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace plscape
