#include "plscape/benchgen.hpp"

#include "plscape/errors.hpp"
#include "plscape/reconstruct.hpp"

#include <algorithm>
#include <random>

namespace plscape {

std::pair<PersistenceDiagram, PersistenceDiagram> counterexample_pair(int n) {
  if (n < 1) throw InputError("counterexample_pair: n must be at least 1");
  const Rational m(n);
  // ±(x, y) is the bar (x, y) together with its reflection (-y, -x).
  auto reflect = [](const Interval& p) { return Interval{-p.death, -p.birth}; };

  std::vector<Interval> first;
  std::vector<Interval> second;
  for (int i = 1; i <= n; ++i) {
    const Interval p{-3 * m - 1 + 2 * i, 3 * m - 1 + 2 * i};
    first.push_back(p);
    first.push_back(reflect(p));
  }
  for (int i = 1; i <= n - 1; ++i) {
    const Interval q{-3 * m + 2 * i, 3 * m + 2 * i};
    second.push_back(q);
    second.push_back(reflect(q));
  }
  second.push_back({-3 * m, 3 * m});
  second.push_back({-m, m});
  return {PersistenceDiagram(std::move(first)), PersistenceDiagram(std::move(second))};
}

PersistenceDiagram random_diagram(std::size_t count, const Rational& lo, const Rational& hi,
                                  std::uint64_t seed) {
  if (!(lo < hi)) throw InputError("random_diagram: need lo < hi");
  constexpr std::uint64_t kGrid = std::uint64_t{1} << 16;
  const Rational unit = (hi - lo) / Rational(kGrid);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> draw(0, kGrid);

  std::vector<Interval> points;
  points.reserve(count);
  while (points.size() < count) {
    auto x = draw(rng);
    auto y = draw(rng);
    if (x == y) continue;
    if (x > y) std::swap(x, y);
    points.push_back({lo + unit * Rational(x), lo + unit * Rational(y)});
  }
  return PersistenceDiagram(std::move(points));
}

namespace {

// Births move down and deaths move up by less than `scale`.
PersistenceDiagram widen(const PersistenceDiagram& d, const Rational& scale, std::mt19937_64& rng) {
  constexpr std::uint64_t kGrid = std::uint64_t{1} << 32;
  std::uniform_int_distribution<std::uint64_t> draw(0, kGrid - 1);
  const Rational unit = scale / Rational(kGrid);
  std::vector<Interval> points;
  points.reserve(d.size());
  for (const auto& p : d) {
    points.push_back({p.birth - unit * Rational(draw(rng)), p.death + unit * Rational(draw(rng))});
  }
  return PersistenceDiagram(std::move(points));
}

Rational min_coordinate_gap(const DiagramFamily& family) {
  std::vector<Rational> coords;
  for (const auto& d : family) {
    for (const auto& p : d) {
      coords.push_back(p.birth);
      coords.push_back(p.death);
    }
  }
  std::sort(coords.begin(), coords.end());
  Rational gap = 1;
  for (std::size_t i = 0; i + 1 < coords.size(); ++i) {
    if (coords[i] != coords[i + 1] && coords[i + 1] - coords[i] < gap) gap = coords[i + 1] - coords[i];
  }
  return gap;
}

PersistenceDiagram random_crossing_connected(std::size_t count, const Rational& lo, const Rational& hi,
                                             std::mt19937_64& rng) {
  constexpr int kMaxDraws = 10000;
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    PersistenceDiagram d = random_diagram(count, lo, hi, rng());
    if (!is_connected(d)) {
      // eps = 3/2 span gives the shortest ladder (three bars).
      d = connectify(d, Rational(3, 2) * (d.max_death() - d.min_birth()));
    }
    d = make_generic(d, Rational(1), rng());
    if (has_connected_bipartite_graph(d)) return d;
  }
  throw PreconditionError("random_independent_family: no diagram with a connected bipartite graph after " +
                          std::to_string(kMaxDraws) + " draws");
}

}  // namespace

DiagramFamily random_independent_family(std::size_t n, std::size_t count, std::uint64_t seed) {
  if (n == 0 || count == 0) throw InputError("random_independent_family: n and count must be positive");
  constexpr int kMaxRounds = 64;
  const Rational lo = 0;
  const Rational hi = 64;

  std::mt19937_64 rng(seed);
  DiagramFamily family;
  family.reserve(n);
  for (std::size_t i = 0; i < n; ++i) family.push_back(random_crossing_connected(count, lo, hi, rng));

  // Moves below a quarter of the smallest gap keep the order of all
  // coordinates, hence genericity and every crossing and nesting.
  Rational scale = min_coordinate_gap(family) / 4;
  for (int round = 0; round < kMaxRounds; ++round) {
    if (is_arithmetically_independent(family)) return family;
    for (auto& d : family) d = widen(d, scale, rng);
    scale /= 2;
  }
  throw PreconditionError("random_independent_family: no independent family after " +
                          std::to_string(kMaxRounds) + " perturbation rounds");
}

}  // namespace plscape
