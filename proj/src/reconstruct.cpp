#include "plscape/reconstruct.hpp"

#include "plscape/analysis.hpp"
#include "plscape/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace plscape {

std::ostream& operator<<(std::ostream& os, const Triple& t) {
  return os << "(" << to_string(t.first) << "," << to_string(t.middle) << "," << to_string(t.last) << ")";
}

bool LabeledCriticalSet::contains(const Triple& t) const {
  return std::binary_search(interval_triples.begin(), interval_triples.end(), t) ||
         std::binary_search(intersection_triples.begin(), intersection_triples.end(), t);
}

LabeledCriticalSet critical_set(const PersistenceDiagram& d) {
  LabeledCriticalSet c;
  for (const auto& p : d) {
    c.interval_triples.push_back({p.birth, p.midpoint(), p.death});
    for (const auto& q : d) {
      // p = (a_j, b_j), q = (a_k, b_k) with a_j < a_k < b_j < b_k.
      if (p.birth < q.birth && q.birth < p.death && p.death < q.death) {
        c.intersection_triples.push_back({q.birth, midpoint(q.birth, p.death), p.death});
      }
    }
  }
  for (const auto* triples : {&c.interval_triples, &c.intersection_triples}) {
    for (const auto& t : *triples) {
      c.points.push_back(t.first);
      c.points.push_back(t.middle);
      c.points.push_back(t.last);
    }
  }
  std::sort(c.points.begin(), c.points.end());
  c.points.erase(std::unique(c.points.begin(), c.points.end()), c.points.end());
  std::sort(c.interval_triples.begin(), c.interval_triples.end());
  c.interval_triples.erase(std::unique(c.interval_triples.begin(), c.interval_triples.end()),
                           c.interval_triples.end());
  std::sort(c.intersection_triples.begin(), c.intersection_triples.end());
  c.intersection_triples.erase(std::unique(c.intersection_triples.begin(), c.intersection_triples.end()),
                               c.intersection_triples.end());
  return c;
}

BipartiteGraph bipartite_graph(const PersistenceDiagram& d) {
  if (!is_generic(d)) throw PreconditionError("bipartite_graph: diagram is not generic");
  BipartiteGraph g;
  for (const auto& p : d) {
    g.births.push_back(p.birth);
    g.deaths.push_back(p.death);
    g.edges.emplace_back(p.birth, p.death);
    for (const auto& q : d) {
      if (p.birth < q.birth && q.birth < p.death && p.death < q.death) g.edges.emplace_back(q.birth, p.death);
    }
  }
  std::sort(g.births.begin(), g.births.end());
  std::sort(g.deaths.begin(), g.deaths.end());
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

bool has_connected_bipartite_graph(const PersistenceDiagram& d) {
  if (!is_generic(d)) throw PreconditionError("bipartite graph: diagram is not generic");
  const std::size_t n = d.size();
  DisjointSets bars(n);
  std::size_t components = n;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const bool crossing = d[j].birth < d[k].birth && d[k].birth < d[j].death && d[j].death < d[k].death;
      if (crossing && bars.find(j) != bars.find(k)) {
        bars.unite(j, k);
        --components;
      }
    }
  }
  return components <= 1;
}

PersistenceDiagram recover_from_bipartite(const BipartiteGraph& g) {
  for (const auto& u : g.births) {
    if (std::binary_search(g.deaths.begin(), g.deaths.end(), u)) {
      throw PreconditionError("bipartite graph: " + to_string(u) + " is both a birth and a death");
    }
  }
  std::map<Rational, Rational> largest;
  for (const auto& [u, v] : g.edges) {
    auto [it, inserted] = largest.try_emplace(u, v);
    if (!inserted && it->second < v) it->second = v;
  }
  std::vector<Interval> points;
  for (const auto& u : g.births) {
    auto it = largest.find(u);
    if (it == largest.end()) throw PreconditionError("bipartite graph: birth " + to_string(u) + " is isolated");
    if (!(u < it->second)) {
      throw PreconditionError("bipartite graph: birth " + to_string(u) + " is not below its largest death");
    }
    points.push_back({u, it->second});
  }
  return PersistenceDiagram(std::move(points));
}

std::vector<Triple> arithmetic_progressions(const std::vector<Rational>& points) {
  std::vector<Triple> found;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 2; j < points.size(); ++j) {
      Rational m = midpoint(points[i], points[j]);
      if (std::binary_search(points.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                             points.begin() + static_cast<std::ptrdiff_t>(j), m)) {
        found.push_back({points[i], std::move(m), points[j]});
      }
    }
  }
  return found;
}

IndependenceReport check_arithmetic_independence(const DiagramFamily& family) {
  IndependenceReport report;
  auto fail = [&](int condition, std::string message, std::vector<Rational> witness) {
    report.independent = false;
    report.condition = condition;
    report.message = std::move(message);
    report.witness = std::move(witness);
    return report;
  };

  for (std::size_t i = 0; i < family.size(); ++i) {
    std::vector<Rational> coords;
    for (const auto& p : family[i]) {
      coords.push_back(p.birth);
      coords.push_back(p.death);
    }
    std::sort(coords.begin(), coords.end());
    if (auto dup = std::adjacent_find(coords.begin(), coords.end()); dup != coords.end()) {
      return fail(1,
                  "diagram " + std::to_string(i + 1) + " is not generic: " + to_string(*dup) +
                      " appears twice as an endpoint",
                  {*dup});
    }
  }

  std::vector<LabeledCriticalSet> sets;
  sets.reserve(family.size());
  for (const auto& d : family) sets.push_back(critical_set(d));

  std::map<Rational, std::size_t> owner;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (const auto& x : sets[i].points) {
      auto [it, inserted] = owner.try_emplace(x, i);
      if (!inserted) {
        return fail(2,
                    "critical sets of diagrams " + std::to_string(it->second + 1) + " and " +
                        std::to_string(i + 1) + " share " + to_string(x),
                    {x});
      }
    }
  }

  std::vector<Landscape> ls;
  ls.reserve(family.size());
  for (const auto& d : family) ls.push_back(landscape_of(d));
  const auto c = critical_points(average_of(ls));

  for (const auto& t : arithmetic_progressions(c)) {
    const auto labels =
        std::count_if(sets.begin(), sets.end(), [&](const LabeledCriticalSet& s) { return s.contains(t); });
    if (labels != 1) {
      std::ostringstream os;
      os << "three-term arithmetic progression " << t << " is not an interval or intersection triple";
      return fail(3, os.str(), {t.first, t.middle, t.last});
    }
  }
  return report;
}

std::vector<PersistenceDiagram> reconstruct_from_average(const Landscape& average) {
  const auto c = critical_points(average);
  const auto progressions = arithmetic_progressions(c);

  std::vector<Rational> firsts;
  std::vector<Rational> thirds;
  for (const auto& t : progressions) {
    firsts.push_back(t.first);
    thirds.push_back(t.last);
  }
  std::sort(firsts.begin(), firsts.end());
  firsts.erase(std::unique(firsts.begin(), firsts.end()), firsts.end());
  std::sort(thirds.begin(), thirds.end());
  thirds.erase(std::unique(thirds.begin(), thirds.end()), thirds.end());
  for (const auto& x : firsts) {
    if (std::binary_search(thirds.begin(), thirds.end(), x)) {
      throw PreconditionError("reconstruction: " + to_string(x) +
                              " starts one progression and ends another");
    }
  }

  // Vertices: firsts then thirds.
  auto index_of = [&](const std::vector<Rational>& v, const Rational& x) {
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
  };
  DisjointSets components(firsts.size() + thirds.size());
  for (const auto& t : progressions) {
    components.unite(index_of(firsts, t.first), firsts.size() + index_of(thirds, t.last));
  }

  std::map<std::size_t, BipartiteGraph> graphs;
  for (std::size_t i = 0; i < firsts.size(); ++i) graphs[components.find(i)].births.push_back(firsts[i]);
  for (std::size_t j = 0; j < thirds.size(); ++j) {
    graphs[components.find(firsts.size() + j)].deaths.push_back(thirds[j]);
  }
  for (const auto& t : progressions) {
    graphs[components.find(index_of(firsts, t.first))].edges.emplace_back(t.first, t.last);
  }

  std::vector<PersistenceDiagram> recovered;
  for (auto& [root, g] : graphs) {
    std::sort(g.edges.begin(), g.edges.end());
    recovered.push_back(recover_from_bipartite(g));
  }
  std::sort(recovered.begin(), recovered.end(), [](const PersistenceDiagram& a, const PersistenceDiagram& b) {
    return a.min_birth() < b.min_birth();
  });

  std::vector<Landscape> ls;
  ls.reserve(recovered.size());
  for (const auto& d : recovered) ls.push_back(landscape_of(d));
  const Landscape rebuilt = average_of(ls);
  bool matches = rebuilt.empty() && average.empty();
  if (!rebuilt.empty() && !average.empty()) {
    const std::pair<Rational, Landscape> scaled[] = {{sup_norm(average) / sup_norm(rebuilt), rebuilt}};
    matches = linear_combination(scaled) == average;
  }
  if (!matches) {
    throw PreconditionError("reconstruction: recovered diagrams do not reproduce the average landscape");
  }
  return recovered;
}

}  // namespace plscape
