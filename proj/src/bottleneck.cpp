#include "plscape/diagram.hpp"
#include "plscape/errors.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace plscape {

namespace {

Rational sup_distance(const Interval& p, const Interval& q) {
  return std::max(abs(p.birth - q.birth), abs(p.death - q.death));
}

// Bipartite graph given as adjacency lists of left vertices.
class Matcher {
 public:
  explicit Matcher(std::vector<std::vector<int>> adjacency, int right_count)
      : adjacency_(std::move(adjacency)), match_right_(right_count, -1) {}

  int maximum_matching() {
    int size = 0;
    for (int u = 0; u < static_cast<int>(adjacency_.size()); ++u) {
      visited_.assign(match_right_.size(), false);
      if (augment(u)) ++size;
    }
    return size;
  }

 private:
  bool augment(int u) {
    for (int v : adjacency_[u]) {
      if (visited_[v]) continue;
      visited_[v] = true;
      if (match_right_[v] < 0 || augment(match_right_[v])) {
        match_right_[v] = u;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<int>> adjacency_;
  std::vector<int> match_right_;
  std::vector<bool> visited_;
};

// Left: points of d1, then diagonal slots for d2. Right: points of d2, then
// diagonal slots for d1. A perfect matching is a partial matching of cost <= r.
bool feasible(const PersistenceDiagram& d1, const PersistenceDiagram& d2, const Rational& r) {
  const int n1 = static_cast<int>(d1.size());
  const int n2 = static_cast<int>(d2.size());
  std::vector<std::vector<int>> adjacency(n1 + n2);
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      if (sup_distance(d1[i], d2[j]) <= r) adjacency[i].push_back(j);
    }
    if (d1[i].half_persistence() <= r) adjacency[i].push_back(n2 + i);
  }
  for (int j = 0; j < n2; ++j) {
    if (d2[j].half_persistence() <= r) adjacency[n1 + j].push_back(j);
    for (int i = 0; i < n1; ++i) adjacency[n1 + j].push_back(n2 + i);
  }
  Matcher matcher(std::move(adjacency), n1 + n2);
  return matcher.maximum_matching() == n1 + n2;
}

}  // namespace

Rational bottleneck_distance(const PersistenceDiagram& d1, const PersistenceDiagram& d2) {
  std::vector<Rational> candidates{Rational(0)};
  for (const auto& p : d1) candidates.push_back(p.half_persistence());
  for (const auto& q : d2) candidates.push_back(q.half_persistence());
  for (const auto& p : d1) {
    for (const auto& q : d2) candidates.push_back(sup_distance(p, q));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // The largest candidate always admits the all-unmatched matching.
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (feasible(d1, d2, candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return candidates[lo];
}

Rational bottleneck_bruteforce(const PersistenceDiagram& d1, const PersistenceDiagram& d2) {
  if (d1.size() + d2.size() > 12) {
    throw InputError("bottleneck_bruteforce: at most 12 points in total");
  }
  const std::size_t n2 = d2.size();
  std::vector<bool> used(n2, false);
  Rational best = -1;

  std::function<void(std::size_t, Rational)> visit = [&](std::size_t i, Rational cost) {
    if (best >= 0 && cost >= best) return;
    if (i == d1.size()) {
      for (std::size_t j = 0; j < n2; ++j) {
        if (!used[j]) cost = std::max(cost, d2[j].half_persistence());
      }
      if (best < 0 || cost < best) best = cost;
      return;
    }
    visit(i + 1, std::max(cost, d1[i].half_persistence()));
    for (std::size_t j = 0; j < n2; ++j) {
      if (used[j]) continue;
      used[j] = true;
      visit(i + 1, std::max(cost, sup_distance(d1[i], d2[j])));
      used[j] = false;
    }
  };
  visit(0, Rational(0));
  return best;
}

}  // namespace plscape
