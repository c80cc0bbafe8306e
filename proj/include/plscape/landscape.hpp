#pragma once

#include "plscape/diagram.hpp"
#include "plscape/matrix.hpp"
#include "plscape/rational.hpp"

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace plscape {

struct Breakpoint {
  Rational t;
  Rational v;

  friend bool operator==(const Breakpoint& a, const Breakpoint& b) { return a.t == b.t && a.v == b.v; }
};

/// Continuous, nonnegative, compactly supported piecewise-linear function
/// with exact breakpoints. Zero outside [front().t, back().t].
///
/// Stored in canonical form: abscissae strictly increasing, end values 0,
/// and no breakpoint whose left and right slopes agree (slopes outside the
/// support count as 0). The zero function has no breakpoints. Canonical
/// form makes == mean equality of functions.
class PiecewiseLinearFunction {
 public:
  PiecewiseLinearFunction() = default;
  /// Validates and canonicalizes. Throws InputError on non-increasing
  /// abscissae, a nonzero end value or a negative value.
  explicit PiecewiseLinearFunction(std::vector<Breakpoint> points);

  /// Tent max(0, min(t - a, b - t)); throws InputError unless a < b.
  static PiecewiseLinearFunction tent(const Rational& a, const Rational& b);

  std::span<const Breakpoint> breakpoints() const { return points_; }
  bool is_zero() const { return points_.empty(); }

  Rational operator()(const Rational& t) const;

  friend bool operator==(const PiecewiseLinearFunction&, const PiecewiseLinearFunction&) = default;

 private:
  std::vector<Breakpoint> points_;
};

std::ostream& operator<<(std::ostream& os, const PiecewiseLinearFunction& f);

inline PiecewiseLinearFunction tent(const Rational& a, const Rational& b) {
  return PiecewiseLinearFunction::tent(a, b);
}

/// λ_1 >= λ_2 >= ... ; levels beyond levels().size() are identically zero.
class Landscape {
 public:
  Landscape() = default;
  /// Drops trailing zero levels; throws InputError if the levels are not
  /// pointwise nonincreasing.
  explicit Landscape(std::vector<PiecewiseLinearFunction> levels);

  std::span<const PiecewiseLinearFunction> levels() const { return levels_; }
  std::size_t depth() const { return levels_.size(); }
  bool empty() const { return levels_.empty(); }

  /// Level k (1-based); the zero function beyond the depth.
  const PiecewiseLinearFunction& level(std::size_t k) const;

  friend bool operator==(const Landscape&, const Landscape&) = default;

 private:
  std::vector<PiecewiseLinearFunction> levels_;
};

std::ostream& operator<<(std::ostream& os, const Landscape& l);

/// Level k is the pointwise kth largest tent of d.
Landscape landscape_of(const PersistenceDiagram& d);

/// λ_k(t); zero for k beyond the depth or t outside the support.
/// Throws InputError if k == 0.
Rational evaluate(const Landscape& l, std::size_t k, const Rational& t);

/// Sorted abscissae where some level changes slope.
std::vector<Rational> critical_points(const Landscape& l);

/// Sum of c_i * l_i with every c_i >= 0 (InputError otherwise).
Landscape linear_combination(std::span<const std::pair<Rational, Landscape>> terms);

/// Level-wise mean; the empty average is the empty landscape.
Landscape average_of(std::span<const Landscape> landscapes);

/// The unique diagram whose landscape is l. Throws PreconditionError when
/// l is not the landscape of any finite diagram.
PersistenceDiagram diagram_of(const Landscape& l);

/// k_max x (steps + 1) matrix of λ_k(t_min + i (t_max - t_min) / steps).
RationalMatrix sample_grid(const Landscape& l, std::size_t k_max, const Rational& t_min,
                           const Rational& t_max, std::size_t steps);

}  // namespace plscape
