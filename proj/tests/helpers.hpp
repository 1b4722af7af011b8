#pragma once

#include <vector>

#include "corona/graph.hpp"

namespace corona::testing {

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return from_edge_list(n, edges);
}

// Star with the center at id `center` (default 0) on k+1 vertices.
inline Graph star_graph(int k, int center = 0) {
  std::vector<Edge> edges;
  for (int v = 0; v <= k; ++v)
    if (v != center) edges.emplace_back(center, v);
  return from_edge_list(k + 1, edges);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return from_edge_list(n, edges);
}

// Spider: center 0 with one path per requested leg length.
inline Graph spider_graph(const std::vector<int>& legs) {
  std::vector<Edge> edges;
  int next = 1;
  for (int len : legs) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return from_edge_list(next, edges);
}

// The five-vertex fixture graph: triangle a,b,c plus leaves d,e at b,
// with a..e = 0..4.
inline Graph example_graph() {
  return from_edge_list(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}});
}

}  // namespace corona::testing
