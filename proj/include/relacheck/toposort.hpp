#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "relacheck/domain.hpp"

namespace relacheck {

inline constexpr std::size_t kToposortEnumerationBound = 7;
inline constexpr double kDefaultEdgeProbability = 0.3;

struct Dag {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;

  friend bool operator==(const Dag&, const Dag&) = default;
};

// True iff srt lists exactly the dag's vertex set, repeats nothing, and
// respects every edge. Total even on cyclic edge lists. Throws
// ValidationError when an edge endpoint is not a declared vertex.
bool toposort_is_valid(const ToposortInstance& instance);

// Exactly the linear extensions of the edge-induced partial order, found
// by backtracking over zero-in-degree frontiers. Throws CycleError (naming
// a cycle) on cyclic input and SizeLimitError above the bound.
std::set<std::vector<std::string>> enumerate_topological_orders(
    const std::vector<std::string>& vertices,
    const std::vector<std::pair<std::string, std::string>>& edges,
    std::size_t bound = kToposortEnumerationBound);

// Deterministic in (n, seed, edge_probability): draws a random permutation
// of n fresh identifiers and keeps each forward edge with the given
// probability, so the output is acyclic by construction.
Dag generate_dag(std::size_t n, std::uint64_t seed,
                 double edge_probability = kDefaultEdgeProbability);

// Kahn-style reference sorter (smallest ready vertex first); the demo
// subject for implementation checks. Throws CycleError on cyclic input.
std::vector<std::string> kahn_toposort(const Dag& dag);

std::vector<TestSuite> build_toposort_suites();

}  // namespace relacheck
