#pragma once

#include "plscape/diagram.hpp"

#include <cstdint>
#include <utility>

namespace plscape {

/// Pair of 2n-point diagrams whose landscapes are 1 apart in sup norm while
/// their bottleneck distance is 2n + 1. Throws InputError for n < 1.
std::pair<PersistenceDiagram, PersistenceDiagram> counterexample_pair(int n);

/// `count` bars with endpoints on the grid lo + (hi - lo) i / 2^16.
PersistenceDiagram random_diagram(std::size_t count, const Rational& lo, const Rational& hi,
                                  std::uint64_t seed);

/// n diagrams of `count` random bars each (plus at most three ladder bars
/// when a draw is disconnected), each with a connected bipartite graph, the
/// family certified arithmetically independent. Throws PreconditionError if
/// the draws or perturbation rounds run out.
DiagramFamily random_independent_family(std::size_t n, std::size_t count, std::uint64_t seed);

}  // namespace plscape
