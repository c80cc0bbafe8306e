#include "plscape/tropical.hpp"

#include "plscape/errors.hpp"

#include <algorithm>
#include <ostream>

namespace plscape {

const Rational& TropicalValue::value() const {
  if (!value_) throw PreconditionError("tropical -inf has no rational value");
  return *value_;
}

TropicalValue operator+(const TropicalValue& a, const TropicalValue& b) {
  if (a.is_neg_infinity()) return b;
  if (b.is_neg_infinity()) return a;
  return std::max(*a.value_, *b.value_);
}

TropicalValue operator*(const TropicalValue& a, const TropicalValue& b) {
  if (a.is_neg_infinity() || b.is_neg_infinity()) return {};
  return Rational(*a.value_ + *b.value_);
}

TropicalValue TropicalValue::inverse() const {
  if (!value_) throw PreconditionError("tropical -inf is not invertible");
  return Rational(-*value_);
}

std::ostream& operator<<(std::ostream& os, const TropicalValue& x) {
  return x.is_neg_infinity() ? os << "-inf" : os << to_string(x.value());
}

TropicalValue tropical_tent(const Rational& t, const Rational& a, const Rational& b) {
  if (!(a < b)) throw InputError("tropical_tent requires a < b");
  const TropicalValue tt(t);
  const TropicalValue ta(a);
  const TropicalValue tb(b);
  return TropicalValue::one() + tt * tb * (ta * tb + tt * tt).inverse();
}

TropicalValue sigma_k(std::span<const TropicalValue> values, std::size_t k) {
  if (k == 0) return TropicalValue::one();
  if (k > values.size()) return TropicalValue::zero();
  std::vector<TropicalValue> sorted(values.begin(), values.end());
  // Descending, with -∞ last.
  std::partial_sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k), sorted.end(),
                    [](const TropicalValue& x, const TropicalValue& y) {
                      if (y.is_neg_infinity()) return !x.is_neg_infinity();
                      if (x.is_neg_infinity()) return false;
                      return x.value() > y.value();
                    });
  TropicalValue product = TropicalValue::one();
  for (std::size_t i = 0; i < k; ++i) product = product * sorted[i];
  return product;
}

TropicalValue lambda_kt(std::size_t k, const Rational& t, const PersistenceDiagram& d) {
  if (k == 0) throw InputError("lambda_kt: k must be positive");
  std::vector<TropicalValue> tents;
  tents.reserve(d.size());
  for (const auto& p : d) tents.push_back(tropical_tent(t, p.birth, p.death));
  const TropicalValue upper = sigma_k(tents, k);
  if (upper.is_neg_infinity()) return upper;
  return upper * sigma_k(tents, k - 1).inverse();
}

RationalMatrix feature_grid(const PersistenceDiagram& d, std::size_t K, const Rational& a,
                            const Rational& eps, std::size_t m) {
  if (K == 0 || m == 0) throw InputError("feature_grid: K and m must be positive");
  if (eps <= 0) throw InputError("feature_grid: eps must be positive");
  RationalMatrix grid(static_cast<Eigen::Index>(K), static_cast<Eigen::Index>(2 * m + 1));
  for (std::size_t i = 0; i <= 2 * m; ++i) {
    const Rational t = a + Rational(i) * eps;
    for (std::size_t k = 1; k <= K; ++k) {
      const TropicalValue v = lambda_kt(k, t, d);
      grid(static_cast<Eigen::Index>(k - 1), static_cast<Eigen::Index>(i)) =
          v.is_neg_infinity() ? Rational(0) : v.value();
    }
  }
  return grid;
}

}  // namespace plscape
