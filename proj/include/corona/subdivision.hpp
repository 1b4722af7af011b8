#pragma once

#include <optional>
#include <vector>

#include "corona/graph.hpp"

namespace corona {

// Unordered edge set; ops reject pairs that are not edges and duplicates.
using EdgeSet = std::vector<Edge>;

// Replaces edge uv by u-x-v with x the new highest id.
Graph subdivide_edge(const Graph& g, Edge e);

// Subdivides each listed edge exactly once. New ids are assigned in sorted
// edge order, so the result is deterministic; it is independent of the input
// order up to isomorphism.
Graph subdivide_edge_set(const Graph& g, const EdgeSet& s);

// Least k <= max_k such that subdividing some k edges (each at most once)
// increases the domination number; nullopt when no such k exists. Searches
// k-subsets in colexicographic order. When max_k is omitted, g must be a
// tree and the bound defaults to 3. g must be connected with n >= 3.
std::optional<int> subdivision_number(const Graph& g,
                                      std::optional<int> max_k = std::nullopt);

enum class TreeClass { S1 = 1, S2 = 2, S3 = 3 };

// S_i where i = subdivision_number(t, 3). Throws std::logic_error if the
// search does not resolve within 3, which would contradict the tree bound.
TreeClass classify_tree(const Graph& t);

}  // namespace corona
