#include "plscape/diagram.hpp"

#include "plscape/errors.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <set>

namespace plscape {

std::ostream& operator<<(std::ostream& os, const Interval& p) {
  return os << "(" << to_string(p.birth) << "," << to_string(p.death) << ")";
}

PersistenceDiagram::PersistenceDiagram(std::vector<Interval> points) : points_(std::move(points)) {
  for (const auto& p : points_) {
    if (!(p.birth < p.death)) {
      throw InputError("birth >= death in point (" + to_string(p.birth) + "," + to_string(p.death) + ")");
    }
  }
  std::sort(points_.begin(), points_.end());
}

PersistenceDiagram::PersistenceDiagram(std::initializer_list<std::pair<Rational, Rational>> points) {
  std::vector<Interval> v;
  v.reserve(points.size());
  for (const auto& [b, d] : points) v.push_back({b, d});
  *this = PersistenceDiagram(std::move(v));
}

Rational PersistenceDiagram::min_birth() const {
  if (points_.empty()) throw InputError("min_birth of empty diagram");
  return points_.front().birth;
}

Rational PersistenceDiagram::max_death() const {
  if (points_.empty()) throw InputError("max_death of empty diagram");
  Rational best = points_.front().death;
  for (const auto& p : points_) best = std::max(best, p.death);
  return best;
}

PersistenceDiagram PersistenceDiagram::disjoint_union(const PersistenceDiagram& other) const {
  std::vector<Interval> merged(points_);
  merged.insert(merged.end(), other.points_.begin(), other.points_.end());
  return PersistenceDiagram(std::move(merged));
}

std::ostream& operator<<(std::ostream& os, const PersistenceDiagram& d) {
  os << "{";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  return os << "}";
}

bool is_generic(const PersistenceDiagram& d) {
  // birth < death within a point, so genericity is "all 2n coordinates distinct".
  std::vector<Rational> coords;
  coords.reserve(2 * d.size());
  for (const auto& p : d) {
    coords.push_back(p.birth);
    coords.push_back(p.death);
  }
  std::sort(coords.begin(), coords.end());
  return std::adjacent_find(coords.begin(), coords.end()) == coords.end();
}

bool is_connected(const PersistenceDiagram& d) {
  // Points are sorted by birth; an interval graph is connected iff no sweep gap.
  if (d.size() <= 1) return true;
  Rational reach = d[0].death;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (d[i].birth > reach) return false;
    reach = std::max(reach, d[i].death);
  }
  return true;
}

Rational product_distance(const DiagramFamily& f1, const DiagramFamily& f2) {
  if (f1.size() != f2.size()) {
    throw InputError("product_distance: families have lengths " + std::to_string(f1.size()) +
                     " and " + std::to_string(f2.size()));
  }
  if (f1.empty()) throw InputError("product_distance: empty families");
  Rational best = 0;
  for (std::size_t i = 0; i < f1.size(); ++i) best = std::max(best, bottleneck_distance(f1[i], f2[i]));
  return best;
}

PersistenceDiagram connectify(const PersistenceDiagram& d, const Rational& eps) {
  if (eps <= 0) throw InputError("connectify: eps must be positive");
  if (d.empty()) throw InputError("connectify: empty diagram");

  const Rational a = d.min_birth();
  const Rational span = d.max_death() - a;
  // Smallest N with span / N < eps / 2, and at least 2.
  Integer n = floor(2 * span / eps) + 1;
  if (n < 2) n = 2;
  const Rational step = span / Rational(n);

  std::vector<Interval> ladder(d.begin(), d.end());
  for (Integer k = 0; k <= n; ++k) {
    ladder.push_back({a + Rational(k - 1) * step, a + Rational(k + 1) * step});
  }
  return PersistenceDiagram(std::move(ladder));
}

PersistenceDiagram make_generic(const PersistenceDiagram& d, const Rational& eps, std::uint64_t seed) {
  if (eps <= 0) throw InputError("make_generic: eps must be positive");
  if (is_generic(d)) return d;

  constexpr std::uint64_t kGrid = std::uint64_t{1} << 30;
  const Rational unit = eps / 2 / Rational(kGrid);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> draw(0, kGrid);

  std::set<Rational> used;
  std::vector<Interval> moved;
  moved.reserve(d.size());
  for (const auto& p : d) {
    Interval q;
    do {
      q.birth = p.birth - unit * Rational(draw(rng));
      q.death = p.death + unit * Rational(draw(rng));
    } while (used.count(q.birth) || used.count(q.death));
    used.insert(q.birth);
    used.insert(q.death);
    moved.push_back(std::move(q));
  }
  return PersistenceDiagram(std::move(moved));
}

}  // namespace plscape
