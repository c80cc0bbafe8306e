#include "plscape/landscape.hpp"

#include "plscape/errors.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

namespace plscape {

namespace {

Rational slope(const Breakpoint& p, const Breakpoint& q) { return (q.v - p.v) / (q.t - p.t); }

// Drops breakpoints whose left and right slopes agree; outside the
// support the slope is 0.
std::vector<Breakpoint> canonical(const std::vector<Breakpoint>& points) {
  std::vector<Breakpoint> kept;
  kept.reserve(points.size());
  const std::size_t n = points.size();
  Rational left = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational right = i + 1 == n ? Rational(0) : slope(points[i], points[i + 1]);
    if (left != right) kept.push_back(points[i]);
    left = std::move(right);
  }
  return kept;
}

std::vector<Rational> merged_abscissae(std::span<const PiecewiseLinearFunction* const> fs) {
  std::vector<Rational> ts;
  for (const auto* f : fs) {
    for (const auto& p : f->breakpoints()) ts.push_back(p.t);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

const PiecewiseLinearFunction& zero_function() {
  static const PiecewiseLinearFunction zero;
  return zero;
}

}  // namespace

PiecewiseLinearFunction::PiecewiseLinearFunction(std::vector<Breakpoint> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].v < 0) throw InputError("negative value at t = " + to_string(points[i].t));
    if (i > 0 && !(points[i - 1].t < points[i].t)) {
      throw InputError("breakpoint abscissae not strictly increasing at t = " + to_string(points[i].t));
    }
  }
  if (!points.empty() && (points.front().v != 0 || points.back().v != 0)) {
    throw InputError("piecewise-linear function must vanish at both ends of its support");
  }
  points_ = canonical(points);
}

PiecewiseLinearFunction PiecewiseLinearFunction::tent(const Rational& a, const Rational& b) {
  if (!(a < b)) throw InputError("tent requires a < b, got (" + to_string(a) + "," + to_string(b) + ")");
  return PiecewiseLinearFunction({{a, 0}, {midpoint(a, b), half_width(a, b)}, {b, 0}});
}

Rational PiecewiseLinearFunction::operator()(const Rational& t) const {
  if (points_.empty() || t <= points_.front().t || t >= points_.back().t) return 0;
  auto hi = std::upper_bound(points_.begin(), points_.end(), t,
                             [](const Rational& x, const Breakpoint& p) { return x < p.t; });
  auto lo = std::prev(hi);
  if (lo->t == t) return lo->v;
  return lo->v + (hi->v - lo->v) * (t - lo->t) / (hi->t - lo->t);
}

std::ostream& operator<<(std::ostream& os, const PiecewiseLinearFunction& f) {
  os << "[";
  bool first = true;
  for (const auto& p : f.breakpoints()) {
    os << (first ? "" : " ") << "(" << to_string(p.t) << "," << to_string(p.v) << ")";
    first = false;
  }
  return os << "]";
}

Landscape::Landscape(std::vector<PiecewiseLinearFunction> levels) : levels_(std::move(levels)) {
  while (!levels_.empty() && levels_.back().is_zero()) levels_.pop_back();
  for (std::size_t k = 0; k + 1 < levels_.size(); ++k) {
    const PiecewiseLinearFunction* pair[] = {&levels_[k], &levels_[k + 1]};
    for (const auto& t : merged_abscissae(pair)) {
      if (levels_[k](t) < levels_[k + 1](t)) {
        throw InputError("landscape levels " + std::to_string(k + 1) + " and " + std::to_string(k + 2) +
                         " are not ordered at t = " + to_string(t));
      }
    }
  }
}

const PiecewiseLinearFunction& Landscape::level(std::size_t k) const {
  if (k == 0) throw InputError("landscape levels are 1-based");
  return k <= levels_.size() ? levels_[k - 1] : zero_function();
}

std::ostream& operator<<(std::ostream& os, const Landscape& l) {
  for (std::size_t k = 1; k <= l.depth(); ++k) os << "λ_" << k << " = " << l.level(k) << "\n";
  return os;
}

Landscape landscape_of(const PersistenceDiagram& d) {
  if (d.empty()) return {};

  // Between consecutive events no tent changes slope and no two tents
  // cross, so each order statistic is linear there.
  std::vector<Rational> events;
  for (const auto& p : d) {
    events.push_back(p.birth);
    events.push_back(p.death);
    events.push_back(p.midpoint());
  }
  for (const auto& up : d) {
    for (const auto& down : d) {
      // Rising edge of `up` meets falling edge of `down` at (a_up + b_down) / 2.
      if (down.birth <= up.birth && up.birth < down.death && down.death <= up.death) {
        events.push_back(midpoint(up.birth, down.death));
      }
    }
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());

  std::vector<std::vector<Rational>> values_at(events.size());
  std::size_t depth = 0;
  for (std::size_t e = 0; e < events.size(); ++e) {
    const Rational& t = events[e];
    auto& values = values_at[e];
    for (const auto& p : d) {
      if (p.birth < t && t < p.death) values.push_back(std::min(t - p.birth, p.death - t));
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    depth = std::max(depth, values.size());
  }

  std::vector<PiecewiseLinearFunction> levels;
  levels.reserve(depth);
  for (std::size_t k = 0; k < depth; ++k) {
    std::vector<Breakpoint> points;
    points.reserve(events.size());
    for (std::size_t e = 0; e < events.size(); ++e) {
      points.push_back({events[e], k < values_at[e].size() ? values_at[e][k] : Rational(0)});
    }
    levels.emplace_back(std::move(points));
  }
  return Landscape(std::move(levels));
}

Rational evaluate(const Landscape& l, std::size_t k, const Rational& t) { return l.level(k)(t); }

std::vector<Rational> critical_points(const Landscape& l) {
  std::vector<const PiecewiseLinearFunction*> fs;
  for (const auto& f : l.levels()) fs.push_back(&f);
  return merged_abscissae(fs);
}

Landscape linear_combination(std::span<const std::pair<Rational, Landscape>> terms) {
  std::size_t depth = 0;
  for (const auto& [c, l] : terms) {
    if (c < 0) throw InputError("linear_combination: negative coefficient " + to_string(c));
    depth = std::max(depth, l.depth());
  }

  std::vector<PiecewiseLinearFunction> levels;
  levels.reserve(depth);
  for (std::size_t k = 1; k <= depth; ++k) {
    std::vector<const PiecewiseLinearFunction*> fs;
    for (const auto& [c, l] : terms) fs.push_back(&l.level(k));
    std::vector<Breakpoint> points;
    for (auto& t : merged_abscissae(fs)) {
      Rational v = 0;
      for (const auto& [c, l] : terms) v += c * l.level(k)(t);
      points.push_back({std::move(t), std::move(v)});
    }
    levels.emplace_back(std::move(points));
  }
  return Landscape(std::move(levels));
}

Landscape average_of(std::span<const Landscape> landscapes) {
  if (landscapes.empty()) return {};
  const Rational weight = Rational(1) / Rational(landscapes.size());
  std::vector<std::pair<Rational, Landscape>> terms;
  terms.reserve(landscapes.size());
  for (const auto& l : landscapes) terms.emplace_back(weight, l);
  return linear_combination(terms);
}

namespace {

// #{k : λ_k((x+y)/2) >= (y-x)/2}, i.e. the number of bars [a,b] with
// a <= x and b >= y when l is a diagram landscape.
std::size_t rank(const Landscape& l, const Rational& x, const Rational& y) {
  const Rational m = midpoint(x, y);
  const Rational h = half_width(x, y);
  std::size_t lo = 0;
  std::size_t hi = l.depth();
  // Levels are nonincreasing in k, so the predicate is a prefix.
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (l.level(mid)(m) >= h) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace

PersistenceDiagram diagram_of(const Landscape& l) {
  std::vector<Rational> zeros;
  for (const auto& f : l.levels()) {
    const auto pts = f.breakpoints();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const Rational s = slope(pts[i], pts[i + 1]);
      if (s != 1 && s != 0 && s != -1) {
        throw PreconditionError("not a diagram landscape: slope " + to_string(s) + " on [" +
                                to_string(pts[i].t) + "," + to_string(pts[i + 1].t) + "]");
      }
    }
    for (const auto& p : pts) {
      if (p.v == 0) zeros.push_back(p.t);
    }
  }
  std::sort(zeros.begin(), zeros.end());
  zeros.erase(std::unique(zeros.begin(), zeros.end()), zeros.end());
  if (zeros.empty()) return {};

  Rational delta = 1;
  for (std::size_t i = 0; i + 1 < zeros.size(); ++i) {
    const Rational gap = (zeros[i + 1] - zeros[i]) / 2;
    if (i == 0 || gap < delta) delta = gap;
  }

  std::vector<Interval> points;
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    for (std::size_t j = i + 1; j < zeros.size(); ++j) {
      const Rational& a = zeros[i];
      const Rational& b = zeros[j];
      const auto inner = static_cast<long>(rank(l, a, b));
      if (inner == 0) continue;
      const long multiplicity = inner - static_cast<long>(rank(l, a - delta, b)) -
                                static_cast<long>(rank(l, a, b + delta)) +
                                static_cast<long>(rank(l, a - delta, b + delta));
      if (multiplicity < 0) {
        throw PreconditionError("not a diagram landscape: negative multiplicity at (" + to_string(a) + "," +
                                to_string(b) + ")");
      }
      for (long m = 0; m < multiplicity; ++m) points.push_back({a, b});
    }
  }

  PersistenceDiagram result(std::move(points));
  if (landscape_of(result) != l) {
    throw PreconditionError("not a diagram landscape: recovered diagram does not reproduce the input");
  }
  return result;
}

RationalMatrix sample_grid(const Landscape& l, std::size_t k_max, const Rational& t_min,
                           const Rational& t_max, std::size_t steps) {
  if (!(t_min < t_max)) throw InputError("sample_grid: need t_min < t_max");
  if (k_max == 0 || steps == 0) throw InputError("sample_grid: k_max and steps must be positive");
  RationalMatrix grid(static_cast<Eigen::Index>(k_max), static_cast<Eigen::Index>(steps + 1));
  const Rational step = (t_max - t_min) / Rational(steps);
  for (std::size_t i = 0; i <= steps; ++i) {
    const Rational t = t_min + Rational(i) * step;
    for (std::size_t k = 1; k <= k_max; ++k) {
      grid(static_cast<Eigen::Index>(k - 1), static_cast<Eigen::Index>(i)) = evaluate(l, k, t);
    }
  }
  return grid;
}

}  // namespace plscape
