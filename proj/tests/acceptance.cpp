#include "plscape/analysis.hpp"
#include "plscape/benchgen.hpp"
#include "plscape/cli.hpp"
#include "plscape/io.hpp"
#include "plscape/reconstruct.hpp"
#include "plscape/tropical.hpp"

#include "support/oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace plscape;
using plscape::testing::adaptive_simpson;
using plscape::testing::probe_points;
using plscape::testing::random_grid_diagram;
using plscape::testing::tent_knots;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

constexpr double kNoLimit = -1;

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> body;
};

template <typename T>
std::string str(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

Landscape average_landscape(const DiagramFamily& family) {
  std::vector<Landscape> ls;
  for (const auto& d : family) ls.push_back(landscape_of(d));
  return average_of(ls);
}

double kmax_double(const PersistenceDiagram& d, std::size_t k, double t) {
  std::vector<double> values;
  for (const auto& p : d) values.push_back(std::max(0.0, std::min(t - to_double(p.birth), to_double(p.death) - t)));
  std::sort(values.begin(), values.end(), std::greater<>());
  return k <= values.size() ? values[k - 1] : 0.0;
}

double quadrature_inner_product(const PersistenceDiagram& d1, const PersistenceDiagram& d2) {
  auto knots = tent_knots(d1);
  const auto more = tent_knots(d2);
  knots.insert(knots.end(), more.begin(), more.end());
  std::sort(knots.begin(), knots.end());
  double total = 0;
  for (std::size_t k = 1; k <= std::max(d1.size(), d2.size()); ++k) {
    const auto f = [&](double t) { return kmax_double(d1, k, t) * kmax_double(d2, k, t); };
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
      if (knots[i + 1] > knots[i]) total += adaptive_simpson(f, knots[i], knots[i + 1], 1e-15);
    }
  }
  return total;
}

Outcome figure_one() {
  Outcome o;
  const auto [d1, d2] = counterexample_pair(4);
  const Rational sup = sup_distance(landscape_of(d1), landscape_of(d2));
  const Rational bottleneck = bottleneck_distance(d1, d2);
  o.require(sup == 1, "sup_distance = " + to_string(sup));
  o.require(bottleneck == 9, "bottleneck_distance = " + to_string(bottleneck));
  return o;
}

Outcome scaling() {
  Outcome o;
  for (int n = 1; n <= 50; ++n) {
    const auto [d1, d2] = counterexample_pair(n);
    const Rational sup = sup_distance(landscape_of(d1), landscape_of(d2));
    const Rational bottleneck = bottleneck_distance(d1, d2);
    o.require(sup == 1, "n=" + std::to_string(n) + ": sup_distance = " + to_string(sup));
    o.require(bottleneck == 2 * n + 1, "n=" + std::to_string(n) + ": bottleneck = " + to_string(bottleneck));
  }
  return o;
}

Outcome inversion() {
  Outcome o;
  std::mt19937_64 rng(20240101);
  for (int trial = 0; trial < 200 && o.ok; ++trial) {
    const std::size_t size = trial < 20 ? 50 : 1 + rng() % 50;
    const int denominator = 1 + trial % 8;
    const int hi = trial % 3 == 0 ? 10 : 200;
    const auto d = random_grid_diagram(rng, size, -hi, hi, denominator);
    o.require(diagram_of(landscape_of(d)) == d, "round trip failed for " + str(d));
  }
  return o;
}

Outcome stability() {
  Outcome o;
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100 && o.ok; ++trial) {
    const auto d1 = random_grid_diagram(rng, 1 + rng() % 15, 0, 40, 4);
    const auto d2 = random_grid_diagram(rng, 1 + rng() % 15, 0, 40, 4);
    const auto l1 = landscape_of(d1);
    const auto l2 = landscape_of(d2);
    const Rational bound = bottleneck_distance(d1, d2);
    const std::size_t depth = std::max(l1.depth(), l2.depth());
    for (const auto& t : probe_points(l1, l2)) {
      for (std::size_t k = 1; k <= depth; ++k) {
        o.require(abs(evaluate(l1, k, t) - evaluate(l2, k, t)) <= bound,
                  "violated at k=" + std::to_string(k) + " t=" + to_string(t) + " for " + str(d1) + " vs " + str(d2));
      }
    }
  }
  return o;
}

Outcome bottleneck_oracle() {
  Outcome o;
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 200 && o.ok; ++trial) {
    const auto d1 = random_grid_diagram(rng, rng() % 7, -10, 10, 1 + trial % 4);
    const auto d2 = random_grid_diagram(rng, rng() % 7, -10, 10, 1 + trial % 4);
    const Rational fast = bottleneck_distance(d1, d2);
    const Rational slow = bottleneck_bruteforce(d1, d2);
    o.require(fast == slow, str(d1) + " vs " + str(d2) + ": " + to_string(fast) + " != " + to_string(slow));
  }
  return o;
}

Outcome tropical() {
  Outcome o;
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 100 && o.ok; ++trial) {
    const auto d = random_grid_diagram(rng, 1 + rng() % 30, 0, 100, 4);
    const auto l = landscape_of(d);
    std::uniform_int_distribution<int> t_draw(-40, 840);
    for (int i = 0; i < 100; ++i) {
      const Rational t(t_draw(rng), 8);
      for (std::size_t k = 1; k <= d.size() + 2; ++k) {
        const auto x = lambda_kt(k, t, d);
        const Rational value = x.is_neg_infinity() ? Rational(0) : x.value();
        o.require(value == evaluate(l, k, t), "k=" + std::to_string(k) + " t=" + to_string(t) + " for " + str(d));
      }
    }
  }
  return o;
}

Outcome reconstruction() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 50 && o.ok; ++seed) {
    const std::size_t n = 1 + seed % 5;
    const std::size_t count = 1 + seed % 9;
    const auto family = random_independent_family(n, count, 1000 + seed);
    for (const auto& d : family) o.require(d.size() <= 12, "family member with " + std::to_string(d.size()) + " points");
    auto expected = family;
    std::sort(expected.begin(), expected.end(),
              [](const PersistenceDiagram& a, const PersistenceDiagram& b) { return a.min_birth() < b.min_birth(); });
    try {
      o.require(reconstruct_from_average(average_landscape(family)) == expected,
                "seed " + std::to_string(seed) + ": wrong family recovered");
    } catch (const std::exception& e) {
      o.require(false, "seed " + std::to_string(seed) + ": " + e.what());
    }
  }

  const auto dir = std::filesystem::temp_directory_path() / ("plscape-acceptance-" + std::to_string(std::random_device{}()));
  std::filesystem::create_directories(dir);
  const DiagramFamily ambiguous{PersistenceDiagram{{0, 2}}, PersistenceDiagram{{4, 6}}};
  write_text_file(dir / "avg.lsc", serialize(average_landscape(ambiguous)));
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({"reconstruct", (dir / "avg.lsc").string(), "-o", (dir / "rec").string()}, out, err);
  std::filesystem::remove_all(dir);
  o.require(code == cli::kPreconditionViolated, "ambiguous average: exit code " + std::to_string(code));
  o.require(err.str().find("precondition violated") != std::string::npos, "ambiguous average: " + err.str());
  return o;
}

Outcome independence_examples() {
  Outcome o;
  struct Negative {
    DiagramFamily family;
    int condition;
    std::vector<Rational> witness;
  };
  const Negative negatives[] = {
      {{PersistenceDiagram{{0, 1}, {1, 2}}}, 1, {1}},
      {{PersistenceDiagram{{0, 2}}, PersistenceDiagram{{1, 5}}}, 2, {1}},
      {{PersistenceDiagram{{0, 1}}, PersistenceDiagram{{2, 4}}}, 3, {0, 1, 2}},
      {{PersistenceDiagram{{0, 8}}, PersistenceDiagram{{11, 13}}}, 3, {4, 8, 12}},
  };
  for (const auto& [family, condition, witness] : negatives) {
    const auto report = check_arithmetic_independence(family);
    o.require(!report.independent, "expected dependence: " + report.message);
    o.require(report.condition == condition && report.witness == witness, "unexpected report: " + report.message);
  }

  const Rational shifts[] = {0, Rational(1, 10), Rational(1, 100), Rational(1, 1000)};
  const Rational numbers[][4] = {{0, 1, 1, 2}, {0, 2, 1, 5}, {0, 1, 2, 4}, {0, 8, 11, 13}};
  for (std::size_t i = 0; i < 4; ++i) {
    const Interval first{numbers[i][0] + shifts[0], numbers[i][1] + shifts[1]};
    const Interval second{numbers[i][2] + shifts[2], numbers[i][3] + shifts[3]};
    const DiagramFamily family = i == 0 ? DiagramFamily{PersistenceDiagram({first, second})}
                                        : DiagramFamily{PersistenceDiagram({first}), PersistenceDiagram({second})};
    const auto report = check_arithmetic_independence(family);
    o.require(report.independent, "perturbed example " + std::to_string(i + 1) + ": " + report.message);
  }
  return o;
}

Outcome kernel_numerics() {
  Outcome o;
  const auto unit = landscape_of(PersistenceDiagram{{0, 2}});
  o.require(inner_product(unit, unit) == Rational(2, 3), "inner_product = " + to_string(inner_product(unit, unit)));

  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 30; ++trial) {
    const auto d1 = random_grid_diagram(rng, 1 + rng() % 8, 0, 30, 3);
    const auto d2 = random_grid_diagram(rng, 1 + rng() % 8, 0, 30, 3);
    const double exact = to_double(inner_product(landscape_of(d1), landscape_of(d2)));
    const double numeric = quadrature_inner_product(d1, d2);
    const double scale = std::max(std::abs(exact), 1e-12);
    o.require(std::abs(exact - numeric) / scale <= 1e-9,
              "quadrature mismatch " + str(exact) + " vs " + str(numeric) + " for " + str(d1) + " and " + str(d2));
  }

  DiagramFamily family;
  for (int i = 0; i < 5; ++i) family.push_back(random_grid_diagram(rng, 2 + rng() % 10, 0, 20, 4));
  const Kernel kernels[] = {PlainKernel{}, PoissonKernel{2.0},
                            WeightedKernel{WeightSpec{std::vector<Rational>{2, 1, Rational(1, 3)}, std::nullopt}}};
  std::uniform_int_distribution<int> numerator(-100, 100);
  for (const auto& kernel : kernels) {
    const auto g = gram_matrix(family, kernel);
    for (int probe = 0; probe < 100; ++probe) {
      Eigen::VectorXd a(5);
      for (int i = 0; i < 5; ++i) a(i) = numerator(rng) / 13.0;
      o.require(a.dot(g * a) >= -1e-9, "quadratic form " + str(a.dot(g * a)));
    }
  }
  return o;
}

Outcome poisson() {
  Outcome o;
  for (double nu : {0.5, 1.0, 1.5, 2.5, 3.7}) {
    unsigned best = 1;
    for (unsigned k = 1; k <= 40; ++k) {
      if (poisson_weight(nu, k - 1) > poisson_weight(nu, best - 1)) best = k;
    }
    o.require(best == static_cast<unsigned>(std::ceil(nu)) || best == static_cast<unsigned>(std::floor(nu)) + 1,
              "nu=" + str(nu) + ": argmax " + std::to_string(best));
  }
  const auto unit = landscape_of(PersistenceDiagram{{0, 2}});
  const double want = std::exp(-1.0) * 2.0 / 3.0;
  const double got = poisson_kernel(1, unit, unit);
  o.require(std::abs(got - want) / want <= 1e-12, "poisson_kernel = " + str(got));
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "counterexample_pair(4): sup distance 1, bottleneck 9", 1, figure_one},
      {2, "counterexample scaling n = 1..50: sup 1, bottleneck 2n+1", 30, scaling},
      {3, "inversion round trip on 200 random diagrams (up to 50 points)", 60, inversion},
      {4, "landscape stability against bottleneck distance, 100 pairs", 60, stability},
      {5, "bottleneck distance equals brute force on 200 pairs", 30, bottleneck_oracle},
      {6, "tropical lambda_kt equals landscape evaluation, 100 diagrams", 60, tropical},
      {7, "reconstruction of 50 independent families; ambiguous average rejected", 120, reconstruction},
      {8, "independence examples: four negatives with witnesses, perturbed positives", kNoLimit, independence_examples},
      {9, "kernel numerics: 2/3, quadrature agreement, Gram PSD probes", kNoLimit, kernel_numerics},
      {10, "Poisson weights: unimodality and kernel value", kNoLimit, poisson},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && c.limit_seconds != kNoLimit && seconds > c.limit_seconds) {
      outcome.ok = false;
      outcome.detail = "time limit exceeded";
    }
    if (!outcome.ok) ++failures;
    const std::string limit =
        c.limit_seconds == kNoLimit ? "no limit" : "limit " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
    std::printf("[%s] %2d %s (%.3f s, %s)%s%s\n", outcome.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                limit.c_str(), outcome.ok ? "" : ": ", outcome.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
