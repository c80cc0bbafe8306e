#include "plscape/benchgen.hpp"
#include "plscape/errors.hpp"
#include "plscape/reconstruct.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace plscape;
using plscape::testing::random_grid_diagram;

namespace {

Landscape average_landscape(const DiagramFamily& family) {
  std::vector<Landscape> ls;
  for (const auto& d : family) ls.push_back(landscape_of(d));
  return average_of(ls);
}

// Adds 0, 1/10, 1/100 and 1/1000 to the four numbers, in order.
DiagramFamily perturbed(const Rational& a, const Rational& b, const Rational& c, const Rational& d, bool single) {
  const Interval first{a, b + Rational(1, 10)};
  const Interval second{c + Rational(1, 100), d + Rational(1, 1000)};
  if (single) return {PersistenceDiagram({first, second})};
  return {PersistenceDiagram({first}), PersistenceDiagram({second})};
}

// Brute-force progressions of a small sorted set: all x < y < z with y - x == z - y.
std::vector<Triple> progressions_oracle(const std::vector<Rational>& points) {
  std::vector<Triple> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      for (std::size_t k = j + 1; k < points.size(); ++k) {
        if (points[j] - points[i] == points[k] - points[j]) out.push_back({points[i], points[j], points[k]});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(CriticalSet, Examples) {
  const auto single = critical_set(PersistenceDiagram{{0, 2}});
  EXPECT_EQ(single.points, (std::vector<Rational>{0, 1, 2}));
  EXPECT_EQ(single.interval_triples, (std::vector<Triple>{{0, 1, 2}}));
  EXPECT_TRUE(single.intersection_triples.empty());

  const auto crossing = critical_set(PersistenceDiagram{{0, 2}, {1, 3}});
  EXPECT_EQ(crossing.points, (std::vector<Rational>{0, 1, Rational(3, 2), 2, 3}));
  EXPECT_EQ(crossing.interval_triples, (std::vector<Triple>{{0, 1, 2}, {1, 2, 3}}));
  EXPECT_EQ(crossing.intersection_triples, (std::vector<Triple>{{1, Rational(3, 2), 2}}));
  EXPECT_TRUE(crossing.contains({1, Rational(3, 2), 2}));
  EXPECT_FALSE(crossing.contains({0, Rational(3, 2), 3}));

  const auto nested = critical_set(PersistenceDiagram{{0, 10}, {4, 6}});
  EXPECT_EQ(nested.points, (std::vector<Rational>{0, 4, 5, 6, 10}));
  EXPECT_EQ(nested.interval_triples, (std::vector<Triple>{{0, 5, 10}, {4, 5, 6}}));
  EXPECT_TRUE(nested.intersection_triples.empty());
}

TEST(CriticalSet, TriplesAreProgressionsInThePointSet) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d = random_grid_diagram(rng, 1 + trial % 7, 0, 40, 3);
    const auto s = critical_set(d);
    EXPECT_EQ(s.interval_triples.size(), d.size());
    for (const auto* list : {&s.interval_triples, &s.intersection_triples}) {
      for (const auto& t : *list) {
        EXPECT_EQ(t.middle - t.first, t.last - t.middle);
        EXPECT_TRUE(std::binary_search(s.points.begin(), s.points.end(), t.first));
        EXPECT_TRUE(std::binary_search(s.points.begin(), s.points.end(), t.middle));
        EXPECT_TRUE(std::binary_search(s.points.begin(), s.points.end(), t.last));
      }
    }
  }
}

TEST(ArithmeticProgressions, MatchesBruteForce) {
  std::mt19937_64 rng(81);
  std::uniform_int_distribution<int> draw(0, 60);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> points;
    for (int i = 0; i < 3 + trial % 15; ++i) points.emplace_back(draw(rng), 1 + trial % 3);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    auto found = arithmetic_progressions(points);
    std::sort(found.begin(), found.end());
    EXPECT_EQ(found, progressions_oracle(points));
  }
}

TEST(BipartiteGraph, Examples) {
  const auto g = bipartite_graph(PersistenceDiagram{{0, 3}, {1, 5}});
  EXPECT_EQ(g.births, (std::vector<Rational>{0, 1}));
  EXPECT_EQ(g.deaths, (std::vector<Rational>{3, 5}));
  EXPECT_EQ(g.edges, (std::vector<std::pair<Rational, Rational>>{{0, 3}, {1, 3}, {1, 5}}));

  const auto single = bipartite_graph(PersistenceDiagram{{0, 2}});
  EXPECT_EQ(single.births, (std::vector<Rational>{0}));
  EXPECT_EQ(single.deaths, (std::vector<Rational>{2}));
  EXPECT_EQ(single.edges, (std::vector<std::pair<Rational, Rational>>{{0, 2}}));

  EXPECT_THROW(bipartite_graph(PersistenceDiagram{{0, 1}, {1, 2}}), PreconditionError);
}

TEST(BipartiteGraph, Connectivity) {
  EXPECT_TRUE(has_connected_bipartite_graph(PersistenceDiagram{{0, 2}}));
  EXPECT_TRUE(has_connected_bipartite_graph(PersistenceDiagram{}));
  EXPECT_TRUE(has_connected_bipartite_graph(PersistenceDiagram{{0, 3}, {1, 5}}));
  EXPECT_FALSE(has_connected_bipartite_graph(PersistenceDiagram{{0, 10}, {4, 6}}));
  EXPECT_FALSE(has_connected_bipartite_graph(PersistenceDiagram{{0, 2}, {4, 6}}));
  // (1,3) is nested in (0,6) but crosses (2,8).
  EXPECT_TRUE(has_connected_bipartite_graph(PersistenceDiagram{{0, 6}, {1, 3}, {2, 8}}));
  EXPECT_FALSE(has_connected_bipartite_graph(PersistenceDiagram{{0, 10}, {4, 8}, {5, 9}}));
  EXPECT_THROW(has_connected_bipartite_graph(PersistenceDiagram{{0, 1}, {1, 2}}), PreconditionError);
}

TEST(BipartiteGraph, ConnectivityMatchesGraphSearch) {
  std::mt19937_64 rng(71);
  int checked = 0;
  while (checked < 150) {
    const auto d = random_grid_diagram(rng, 1 + checked % 8, 0, 200, 5);
    if (!is_generic(d)) continue;
    // Breadth-first search over the edge list of B(D).
    const auto g = bipartite_graph(d);
    std::vector<Rational> reached{g.births.front()};
    for (std::size_t i = 0; i < reached.size(); ++i) {
      for (const auto& [u, v] : g.edges) {
        for (const auto& [from, to] : {std::pair{u, v}, std::pair{v, u}}) {
          if (from == reached[i] && std::find(reached.begin(), reached.end(), to) == reached.end()) {
            reached.push_back(to);
          }
        }
      }
    }
    EXPECT_EQ(has_connected_bipartite_graph(d), reached.size() == 2 * d.size()) << d;
    ++checked;
  }
}

TEST(RecoverFromBipartite, Examples) {
  EXPECT_EQ(recover_from_bipartite(bipartite_graph(PersistenceDiagram{{0, 3}, {1, 5}})),
            (PersistenceDiagram{{0, 3}, {1, 5}}));
  EXPECT_EQ(recover_from_bipartite(bipartite_graph(PersistenceDiagram{{0, 2}})), (PersistenceDiagram{{0, 2}}));
  EXPECT_THROW(recover_from_bipartite(BipartiteGraph{{0}, {2}, {}}), PreconditionError);
}

TEST(RecoverFromBipartite, InvertsBipartiteGraph) {
  std::mt19937_64 rng(13);
  int checked = 0;
  while (checked < 100) {
    const auto d = random_grid_diagram(rng, 1 + checked % 10, 0, 300, 7);
    if (!is_generic(d)) continue;
    EXPECT_EQ(recover_from_bipartite(bipartite_graph(d)), d);
    ++checked;
  }
}

TEST(Independence, PaperNegativeExamples) {
  const auto generic = check_arithmetic_independence({PersistenceDiagram{{0, 1}, {1, 2}}});
  EXPECT_FALSE(generic.independent);
  EXPECT_EQ(generic.condition, 1);
  EXPECT_EQ(generic.witness, (std::vector<Rational>{1}));
  EXPECT_NE(generic.message.find("1 appears twice"), std::string::npos) << generic.message;

  const auto shared = check_arithmetic_independence({PersistenceDiagram{{0, 2}}, PersistenceDiagram{{1, 5}}});
  EXPECT_FALSE(shared.independent);
  EXPECT_EQ(shared.condition, 2);
  EXPECT_EQ(shared.witness, (std::vector<Rational>{1}));

  const auto stray = check_arithmetic_independence({PersistenceDiagram{{0, 1}}, PersistenceDiagram{{2, 4}}});
  EXPECT_FALSE(stray.independent);
  EXPECT_EQ(stray.condition, 3);
  EXPECT_EQ(stray.witness, (std::vector<Rational>{0, 1, 2}));

  const auto far = check_arithmetic_independence({PersistenceDiagram{{0, 8}}, PersistenceDiagram{{11, 13}}});
  EXPECT_FALSE(far.independent);
  EXPECT_EQ(far.condition, 3);
  EXPECT_EQ(far.witness, (std::vector<Rational>{4, 8, 12}));
  EXPECT_NE(far.message.find("(4,8,12)"), std::string::npos) << far.message;
}

TEST(Independence, PaperPerturbedExamples) {
  const auto one = perturbed(0, 1, 1, 2, true);
  EXPECT_EQ(one[0], (PersistenceDiagram{{0, Rational(11, 10)}, {Rational(101, 100), Rational(2001, 1000)}}));
  const DiagramFamily families[] = {one, perturbed(0, 2, 1, 5, false), perturbed(0, 1, 2, 4, false),
                                    perturbed(0, 8, 11, 13, false)};
  for (const auto& family : families) {
    const auto report = check_arithmetic_independence(family);
    EXPECT_TRUE(report.independent) << report.message;
    EXPECT_EQ(report.condition, 0);
  }
  EXPECT_EQ(families[3][1], (PersistenceDiagram{{Rational(1101, 100), Rational(13001, 1000)}}));
}

TEST(Independence, EmptyAndSingleBar) {
  EXPECT_TRUE(is_arithmetically_independent({}));
  EXPECT_TRUE(is_arithmetically_independent({PersistenceDiagram{{0, 2}}}));
}

TEST(Independence, AverageCriticalPointsAreTheUnion) {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int seed = 0; checked < 20 && seed < 2000; ++seed) {
    DiagramFamily family;
    for (int i = 0; i < 2 + seed % 3; ++i) family.push_back(random_grid_diagram(rng, 1 + (seed + i) % 4, 0, 1000, 13));
    if (!is_arithmetically_independent(family)) continue;
    std::vector<Rational> all;
    for (const auto& d : family) {
      const auto s = critical_set(d);
      all.insert(all.end(), s.points.begin(), s.points.end());
    }
    std::sort(all.begin(), all.end());
    EXPECT_EQ(critical_points(average_landscape(family)), all);
    ++checked;
  }
  EXPECT_EQ(checked, 20);
}

TEST(Reconstruct, PaperExampleFamily) {
  const DiagramFamily family{PersistenceDiagram{{0, Rational(81, 10)}},
                             PersistenceDiagram{{Rational(1101, 100), Rational(13001, 1000)}}};
  EXPECT_EQ(reconstruct_from_average(average_landscape(family)), family);
}

TEST(Reconstruct, SingleDiagram) {
  // {(0,3),(1,5)} would not do: its critical set holds the stray progression (0,1,2).
  EXPECT_FALSE(is_arithmetically_independent({PersistenceDiagram{{0, 3}, {1, 5}}}));
  const PersistenceDiagram d{{0, 7}, {2, 13}};
  ASSERT_TRUE(is_arithmetically_independent({d}));
  ASSERT_TRUE(has_connected_bipartite_graph(d));
  const auto l = landscape_of(d);
  EXPECT_EQ(reconstruct_from_average(l), DiagramFamily{d});
  EXPECT_EQ(diagram_of(l), d);
}

TEST(Reconstruct, NestedBarsAreRejected) {
  // Connected and independent, but the inner bar crosses nothing, so B(D)
  // splits into two components and the recovered pair fails verification.
  const PersistenceDiagram nested{{0, 10}, {4, 6}};
  ASSERT_TRUE(is_connected(nested));
  ASSERT_TRUE(is_arithmetically_independent({nested}));
  EXPECT_FALSE(has_connected_bipartite_graph(nested));
  EXPECT_THROW(reconstruct_from_average(landscape_of(nested)), PreconditionError);
}

TEST(Reconstruct, AmbiguousAverageIsRejected) {
  const DiagramFamily family{PersistenceDiagram{{0, 2}}, PersistenceDiagram{{4, 6}}};
  try {
    reconstruct_from_average(average_landscape(family));
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("reconstruction"), std::string::npos);
  }
}

TEST(Reconstruct, ScaleInvariant) {
  const auto family = random_independent_family(3, 4, 5);
  const auto avg = average_landscape(family);
  for (const Rational c : {Rational(1, 7), Rational(3), Rational(22, 5)}) {
    const std::pair<Rational, Landscape> scaled[] = {{c, avg}};
    EXPECT_EQ(reconstruct_from_average(linear_combination(scaled)), reconstruct_from_average(avg));
  }
}

TEST(Reconstruct, RoundTripOnGeneratedFamilies) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto family = random_independent_family(1 + seed % 5, 2 + seed % 4, seed);
    auto expected = family;
    std::sort(expected.begin(), expected.end(),
              [](const PersistenceDiagram& a, const PersistenceDiagram& b) { return a.min_birth() < b.min_birth(); });
    EXPECT_EQ(reconstruct_from_average(average_landscape(family)), expected) << "seed " << seed;
  }
}
