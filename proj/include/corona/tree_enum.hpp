#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "corona/graph.hpp"

namespace corona {

// Streams every isomorphism class of free trees on n vertices exactly once.
//
// The cursor is a canonical level sequence (preorder depths, root depth 1)
// advanced by the classical rooted-tree successor; a sequence is emitted iff
// it is the centroid-canonical representation of its free tree: the root is
// the unique centroid, or, for bicentroidal trees, the centroid half rooted
// here weakly dominates the other half lexicographically. Yielded graphs
// carry the vertex numbering induced by the level sequence (preorder).
class TreeStream {
 public:
  // 1 <= n <= 20; throws std::invalid_argument outside the guard.
  explicit TreeStream(int n);

  std::optional<Graph> next();

  int order() const { return n_; }

 private:
  bool advance_rooted();
  bool is_free_canonical() const;

  int n_ = 0;
  bool exhausted_ = false;
  std::vector<int> level_;  // level_[i] = depth of preorder vertex i, root 1
};

// Materialized stream; prefer TreeStream directly for n near the guard.
std::vector<Graph> free_trees(int n);

std::uint64_t count_free_trees(int n);

// Builds the tree a level sequence encodes: the parent of vertex i is the
// nearest j < i with level[j] = level[i] - 1.
Graph tree_from_level_sequence(const std::vector<int>& level);

}  // namespace corona
