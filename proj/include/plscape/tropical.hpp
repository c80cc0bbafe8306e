#pragma once

#include "plscape/diagram.hpp"
#include "plscape/matrix.hpp"
#include "plscape/rational.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace plscape {

/// Element of the max-plus semiring: a rational or -∞.
/// a ⊕ b = max(a, b) with identity -∞; a ⊙ b = a + b with identity 0.
class TropicalValue {
 public:
  /// Tropical additive identity -∞.
  TropicalValue() = default;
  TropicalValue(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)

  static TropicalValue zero() { return {}; }
  static TropicalValue one() { return Rational(0); }

  bool is_neg_infinity() const { return !value_; }
  /// Throws PreconditionError on -∞.
  const Rational& value() const;

  friend TropicalValue operator+(const TropicalValue& a, const TropicalValue& b);  // ⊕
  friend TropicalValue operator*(const TropicalValue& a, const TropicalValue& b);  // ⊙
  friend bool operator==(const TropicalValue& a, const TropicalValue& b) { return a.value_ == b.value_; }

  /// Multiplicative inverse (negation). -∞ has none: PreconditionError.
  TropicalValue inverse() const;

 private:
  std::optional<Rational> value_;
};

std::ostream& operator<<(std::ostream& os, const TropicalValue& x);

/// 0 ⊕ t ⊙ b ⊙ (a ⊙ b ⊕ t ⊙ t)^{-1}, i.e. max(0, min(t - a, b - t)).
TropicalValue tropical_tent(const Rational& t, const Rational& a, const Rational& b);

/// Elementary symmetric max-plus polynomial: the sum of the k largest
/// values; 0 for k == 0 and -∞ for k > values.size().
TropicalValue sigma_k(std::span<const TropicalValue> values, std::size_t k);

/// σ_k ⊙ σ_{k-1}^{-1} of the tent values at t; -∞ when k > |d|.
TropicalValue lambda_kt(std::size_t k, const Rational& t, const PersistenceDiagram& d);

/// K x (2m + 1) matrix of lambda_kt on t = a, a + eps, ..., a + 2m eps, with
/// -∞ written as 0.
RationalMatrix feature_grid(const PersistenceDiagram& d, std::size_t K, const Rational& a,
                            const Rational& eps, std::size_t m);

}  // namespace plscape
