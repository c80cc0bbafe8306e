#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace plscape {

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator; expression templates are off so it composes with Eigen.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "-3", "2.5", "-13/4", "1e-3" and "+.25" exactly.
/// Throws std::invalid_argument on anything else (including "inf", "nan").
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Decimal rendering with `digits` significant digits.
std::string to_decimal(const Rational& value, int digits = 15);

double to_double(const Rational& value);

/// Largest integer <= value.
Integer floor(const Rational& value);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

/// Exact (b - a) / 2 and (a + b) / 2, spelled out because they are everywhere.
inline Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / 2; }
inline Rational half_width(const Rational& a, const Rational& b) { return (b - a) / 2; }

}  // namespace plscape
