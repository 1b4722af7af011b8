#include "corona/tree_enum.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace corona {

Graph tree_from_level_sequence(const std::vector<int>& level) {
  const int n = static_cast<int>(level.size());
  std::vector<Edge> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  for (int i = 1; i < n; ++i) {
    int j = i - 1;
    while (level[j] != level[i] - 1) --j;
    edges.emplace_back(j, i);
  }
  return from_edge_list(n, edges);
}

TreeStream::TreeStream(int n) : n_(n) {
  if (n < 1 || n > 20)
    throw std::invalid_argument("TreeStream: order must be in 1..20");
  level_.resize(n);
  std::iota(level_.begin(), level_.end(), 1);  // the path, lexicographic maximum
}

// Classical successor over canonical rooted level sequences in decreasing
// lexicographic order: find the last entry above 2 and refill the tail by
// cyclically repeating the segment that starts at its parent.
bool TreeStream::advance_rooted() {
  int p = -1;
  for (int i = n_ - 1; i >= 1; --i) {
    if (level_[i] > 2) {
      p = i;
      break;
    }
  }
  if (p < 0) return false;  // the star is the last sequence
  int q = p - 1;
  while (level_[q] != level_[p] - 1) --q;
  for (int i = p; i < n_; ++i) level_[i] = level_[i - (p - q)];
  return true;
}

// Root-subtree blocks are the maximal runs delimited by entries equal to 2.
// The root is the unique centroid iff every block is smaller than n/2; a
// block of exactly n/2 marks a bicentroid, accepted only when the root half
// is lexicographically >= the block rebased as its own rooted sequence.
bool TreeStream::is_free_canonical() const {
  if (n_ <= 2) return true;
  int max_size = 0, max_start = 0, max_end = 0;
  int start = 1;
  while (start < n_) {
    int end = start + 1;
    while (end < n_ && level_[end] != 2) ++end;
    if (end - start > max_size) {
      max_size = end - start;
      max_start = start;
      max_end = end;
    }
    start = end;
  }
  if (2 * max_size < n_) return true;
  if (2 * max_size > n_) return false;

  // Compare the root half (sequence with the block deleted) against the
  // block rebased one level up; both have n/2 entries.
  int i = 0, j = max_start;
  for (int step = 0; step < n_ / 2; ++step) {
    while (i >= max_start && i < max_end) ++i;
    int a = level_[i++];
    int b = level_[j++] - 1;
    if (a != b) return a > b;
  }
  return true;  // equal halves: symmetric bicentroidal tree
}

std::optional<Graph> TreeStream::next() {
  while (!exhausted_) {
    bool emit = is_free_canonical();
    Graph result;
    if (emit) result = tree_from_level_sequence(level_);
    if (!advance_rooted()) exhausted_ = true;
    if (emit) return result;
  }
  return std::nullopt;
}

std::vector<Graph> free_trees(int n) {
  TreeStream stream(n);
  std::vector<Graph> out;
  while (auto t = stream.next()) out.push_back(std::move(*t));
  return out;
}

std::uint64_t count_free_trees(int n) {
  TreeStream stream(n);
  std::uint64_t count = 0;
  while (stream.next()) ++count;
  return count;
}

}  // namespace corona
