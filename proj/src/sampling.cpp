#include "corona/sampling.hpp"

#include <stdexcept>

namespace corona {

Graph tree_from_pruefer(int n, const std::vector<int>& seq) {
  if (n < 2) throw std::invalid_argument("pruefer decode: n >= 2");
  if (static_cast<int>(seq.size()) != n - 2)
    throw std::invalid_argument("pruefer decode: sequence length must be n-2");
  std::vector<int> degree(n, 1);
  for (int v : seq) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("pruefer decode: entry out of range");
    ++degree[v];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int v : seq) {
    edges.emplace_back(leaf, v);
    --degree[leaf];
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;  // v is now the smallest available leaf
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  // Vertex n-1 is never consumed; it pairs with the last remaining leaf.
  edges.emplace_back(leaf, n - 1);
  return from_edge_list(n, edges);
}

Graph random_tree(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("random_tree: n >= 1");
  if (n == 1) return from_edge_list(1, {});
  if (n == 2) return from_edge_list(2, {{0, 1}});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (int& s : seq) s = pick(rng);
  return tree_from_pruefer(n, seq);
}

NeighborhoodPartition random_partition(const Graph& g, std::mt19937_64& rng) {
  NeighborhoodPartition p;
  p.blocks.resize(g.n);
  for (VertexId v = 0; v < g.n; ++v) {
    int deg = g.degree(v);
    if (deg == 0) continue;
    std::uniform_int_distribution<int> bucket_count(1, deg);
    int k = bucket_count(rng);
    std::uniform_int_distribution<int> bucket(0, k - 1);
    std::vector<std::vector<VertexId>> buckets(k);
    for (VertexId u : g.adj[v]) buckets[bucket(rng)].push_back(u);
    for (auto& b : buckets)
      if (!b.empty()) p.blocks[v].push_back(std::move(b));
  }
  return normalized(std::move(p));
}

}  // namespace corona
