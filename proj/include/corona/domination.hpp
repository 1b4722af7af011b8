#pragma once

#include <optional>
#include <vector>

#include "corona/graph.hpp"

namespace corona {

// Literal check: every vertex outside s has a neighbor in s.
bool is_dominating(const Graph& g, const VertexSet& s);

// All pairwise distances at least 3.
bool is_2packing(const Graph& g, const VertexSet& s);

// Exact domination number. Trees use the three-state dynamic program rooted
// at vertex 0; other graphs fall back to branch and bound (guarded to n <= 32,
// intended for oracles and fixtures). Throws std::invalid_argument for an
// empty graph.
int domination_number(const Graph& g);

// Independent oracle: increasing-cardinality subset search, n <= 24.
int domination_number_bruteforce(const Graph& g);

// Every vertex set that contains all leaves of t, is a 2-packing, and is
// dominating. Depth-first extension over non-leaf vertices in id order with
// distance pruning; deterministic order. t must be a tree with n >= 2.
std::vector<VertexSet> dominating_2packings_with_leaves(const Graph& t);

struct UniquePackingResult {
  bool unique = false;
  std::optional<VertexSet> witness;
};

// Uniqueness is decided by searching for at most two witnesses.
// t must be a tree with n >= 3.
UniquePackingResult has_unique_dominating_2packing_with_leaves(const Graph& t);

}  // namespace corona
