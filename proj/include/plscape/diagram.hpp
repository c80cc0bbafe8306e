#pragma once

#include "plscape/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace plscape {

/// A finite bar [birth, death] of a persistence diagram.
struct Interval {
  Rational birth;
  Rational death;

  Rational midpoint() const { return plscape::midpoint(birth, death); }
  Rational half_persistence() const { return half_width(birth, death); }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.birth == b.birth && a.death == b.death;
  }
  friend bool operator<(const Interval& a, const Interval& b) {
    return a.birth < b.birth || (a.birth == b.birth && a.death < b.death);
  }
};

std::ostream& operator<<(std::ostream& os, const Interval& p);

/// Finite multiset of intervals with birth < death. Points are kept sorted
/// so that equality is multiset equality.
class PersistenceDiagram {
 public:
  PersistenceDiagram() = default;
  /// Throws InputError if some point has birth >= death.
  explicit PersistenceDiagram(std::vector<Interval> points);
  PersistenceDiagram(std::initializer_list<std::pair<Rational, Rational>> points);

  std::span<const Interval> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  const Interval& operator[](std::size_t i) const { return points_[i]; }

  Rational min_birth() const;
  Rational max_death() const;

  /// Multiset union.
  PersistenceDiagram disjoint_union(const PersistenceDiagram& other) const;

  friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;
  friend bool operator<(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    return a.points_ < b.points_;
  }

 private:
  std::vector<Interval> points_;
};

std::ostream& operator<<(std::ostream& os, const PersistenceDiagram& d);

/// Ordered sequence of diagrams. Order matters for product_distance only.
using DiagramFamily = std::vector<PersistenceDiagram>;

/// Every pair of distinct points has four pairwise distinct coordinates.
bool is_generic(const PersistenceDiagram& d);

/// The overlap graph of the closed bars is connected. Empty and singleton
/// diagrams are connected.
bool is_connected(const PersistenceDiagram& d);

/// Bottleneck distance with the sup metric on points and half-persistence
/// as the cost of leaving a point unmatched. Exact.
Rational bottleneck_distance(const PersistenceDiagram& d1, const PersistenceDiagram& d2);

/// Exhaustive enumeration of partial matchings. Reference implementation
/// for tests; throws InputError when |d1| + |d2| > 12.
Rational bottleneck_bruteforce(const PersistenceDiagram& d1, const PersistenceDiagram& d2);

/// Max over slots of the bottleneck distance. Throws InputError on length
/// mismatch or empty families.
Rational product_distance(const DiagramFamily& f1, const DiagramFamily& f2);

/// d plus a ladder of short overlapping bars spanning [min birth, max death];
/// the result is connected and within bottleneck distance eps of d.
PersistenceDiagram connectify(const PersistenceDiagram& d, const Rational& eps);

/// Moves births down and deaths up by at most eps/2 until every coordinate
/// is distinct. Returns d unchanged if it is already generic. Deterministic
/// given the seed; preserves connectivity.
PersistenceDiagram make_generic(const PersistenceDiagram& d, const Rational& eps,
                                std::uint64_t seed);

}  // namespace plscape
