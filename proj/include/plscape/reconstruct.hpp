#pragma once

#include "plscape/diagram.hpp"
#include "plscape/landscape.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace plscape {

/// Three-term arithmetic progression first < middle < last.
struct Triple {
  Rational first;
  Rational middle;
  Rational last;

  friend bool operator==(const Triple& a, const Triple& b) {
    return a.first == b.first && a.middle == b.middle && a.last == b.last;
  }
  friend bool operator<(const Triple& a, const Triple& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.last < b.last;
  }
};

std::ostream& operator<<(std::ostream& os, const Triple& t);

/// Critical points of a diagram's landscape read off the diagram, with the
/// progressions they form: (a, (a+b)/2, b) per bar and (a_k, (a_k+b_j)/2, b_j)
/// per pair a_j < a_k < b_j < b_k.
struct LabeledCriticalSet {
  std::vector<Rational> points;  // sorted, unique
  std::vector<Triple> interval_triples;
  std::vector<Triple> intersection_triples;

  bool contains(const Triple& t) const;
};

LabeledCriticalSet critical_set(const PersistenceDiagram& d);

/// Births U, deaths V, and the edges (a_j, b_j) and (a_k, b_j) for
/// a_j < a_k < b_j < b_k. All lists sorted.
struct BipartiteGraph {
  std::vector<Rational> births;
  std::vector<Rational> deaths;
  std::vector<std::pair<Rational, Rational>> edges;  // (birth, death)

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;
};

/// Throws PreconditionError when d is not generic.
BipartiteGraph bipartite_graph(const PersistenceDiagram& d);

/// True when B(d) is connected: every bar is linked to every other through
/// crossing pairs a_j < a_k < b_j < b_k. Nesting alone links nothing, so a
/// connected diagram can fail this. Throws PreconditionError when d is not
/// generic.
bool has_connected_bipartite_graph(const PersistenceDiagram& d);

/// Pairs each birth with its largest neighbouring death. Throws
/// PreconditionError for an isolated birth, overlapping vertex sets, or a
/// pairing that is not a valid bar.
PersistenceDiagram recover_from_bipartite(const BipartiteGraph& g);

/// Outcome of the arithmetic-independence check. `condition` is 0 when the
/// family is independent, otherwise the first violated condition (1:
/// genericity, 2: disjoint critical sets, 3: stray progression).
struct IndependenceReport {
  bool independent = true;
  int condition = 0;
  std::string message;
  std::vector<Rational> witness;

  explicit operator bool() const { return independent; }
};

IndependenceReport check_arithmetic_independence(const DiagramFamily& family);

inline bool is_arithmetically_independent(const DiagramFamily& family) {
  return check_arithmetic_independence(family).independent;
}

/// All (x, (x+y)/2, y) with x, (x+y)/2, y in the sorted set `points`.
std::vector<Triple> arithmetic_progressions(const std::vector<Rational>& points);

/// Recovers {D_1, ..., D_n} from (any positive multiple of) their average
/// landscape, for arithmetically independent families whose bipartite
/// graphs are connected. The
/// result is sorted by smallest birth and has been verified by recomputing
/// the average. Throws PreconditionError when the input does not come from
/// such a family.
std::vector<PersistenceDiagram> reconstruct_from_average(const Landscape& average);

}  // namespace plscape
