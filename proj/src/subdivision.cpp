#include "corona/subdivision.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "corona/domination.hpp"

namespace corona {

namespace {

Edge normalize(Edge e) {
  if (e.first > e.second) std::swap(e.first, e.second);
  return e;
}

}  // namespace

Graph subdivide_edge(const Graph& g, Edge e) {
  return subdivide_edge_set(g, {e});
}

Graph subdivide_edge_set(const Graph& g, const EdgeSet& s) {
  std::set<Edge> chosen;
  for (Edge e : s) {
    e = normalize(e);
    if (!g.has_edge(e.first, e.second))
      throw std::invalid_argument("subdivide: pair is not an edge");
    if (!chosen.insert(e).second)
      throw std::invalid_argument("subdivide: duplicate edge");
  }
  std::vector<Edge> out_edges;
  int next = g.n;
  for (auto [u, v] : g.edges()) {
    if (chosen.count({u, v})) {
      int x = next++;
      out_edges.emplace_back(u, x);
      out_edges.emplace_back(x, v);
    } else {
      out_edges.emplace_back(u, v);
    }
  }
  return from_edge_list(g.n + static_cast<int>(chosen.size()), out_edges);
}

std::optional<int> subdivision_number(const Graph& g,
                                      std::optional<int> max_k) {
  if (g.n < 3 || !is_connected(g))
    throw std::invalid_argument(
        "subdivision_number requires a connected graph with n >= 3");
  if (!max_k) {
    if (!is_tree(g))
      throw std::invalid_argument(
          "subdivision_number: max_k must be given for non-trees");
    max_k = 3;
  }
  const std::vector<Edge> all_edges = g.edges();
  const int m = static_cast<int>(all_edges.size());
  const int gamma = domination_number(g);

  for (int k = 1; k <= *max_k && k <= m; ++k) {
    // k-subsets of edge indices in colexicographic order.
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      EdgeSet subset;
      subset.reserve(k);
      for (int i : pick) subset.push_back(all_edges[i]);
      int gamma_sub = domination_number(subdivide_edge_set(g, subset));
      if (k == 1 && gamma_sub < gamma)
        throw std::logic_error(
            "subdivision decreased the domination number; search is unsound");
      if (gamma_sub > gamma) return k;
      int i = 0;
      while (i < k && pick[i] + 1 == (i + 1 < k ? pick[i + 1] : m)) ++i;
      if (i == k) break;
      ++pick[i];
      for (int j = 0; j < i; ++j) pick[j] = j;
    }
  }
  return std::nullopt;
}

TreeClass classify_tree(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("classify_tree requires a tree");
  if (t.n < 3) throw std::invalid_argument("classify_tree requires n >= 3");
  std::optional<int> sd = subdivision_number(t, 3);
  if (!sd)
    throw std::logic_error(
        "tree with subdivision number above 3: contradicts the tree bound");
  return static_cast<TreeClass>(*sd);
}

}  // namespace corona
