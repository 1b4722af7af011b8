#include "corona/domination.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <stdexcept>

namespace corona {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

void require_valid_set(const Graph& g, const VertexSet& s) {
  for (VertexId v : s)
    if (!g.has_vertex(v)) throw std::out_of_range("vertex id out of range");
}

}  // namespace

bool is_dominating(const Graph& g, const VertexSet& s) {
  require_valid_set(g, s);
  std::vector<char> in(g.n, 0);
  for (VertexId v : s) in[v] = 1;
  for (VertexId v = 0; v < g.n; ++v) {
    if (in[v]) continue;
    bool covered = false;
    for (VertexId u : g.adj[v]) {
      if (in[u]) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool is_2packing(const Graph& g, const VertexSet& s) {
  require_valid_set(g, s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<int> dist = bfs_distances(g, s[i]);
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[j] == s[i]) continue;  // repeated entry, not a distinct pair
      if (dist[s[j]] >= 0 && dist[s[j]] <= 2) return false;
    }
  }
  return true;
}

namespace {

// States: 0 = v in D, 1 = v dominated by a child, 2 = v needs its parent.
int tree_domination_dp(const Graph& t) {
  std::vector<std::array<int, 3>> dp(t.n);
  std::vector<VertexId> order, parent(t.n, -1);
  order.reserve(t.n);
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    VertexId v = order[i];
    for (VertexId u : t.adj[v])
      if (u != parent[v]) {
        parent[u] = v;
        order.push_back(u);
      }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexId v = *it;
    int take = 1, uncovered = 0, covered_extra = kInf;
    bool some_child_in = false;
    for (VertexId u : t.adj[v]) {
      if (u == parent[v]) continue;
      take += std::min({dp[u][0], dp[u][1], dp[u][2]});
      int settled = std::min(dp[u][0], dp[u][1]);
      uncovered += settled;
      if (dp[u][0] <= settled) some_child_in = true;
      covered_extra = std::min(covered_extra, dp[u][0] - settled);
    }
    dp[v][0] = take;
    dp[v][2] = uncovered;
    dp[v][1] = some_child_in ? uncovered
               : covered_extra >= kInf ? kInf
                                       : uncovered + covered_extra;
  }
  return std::min(dp[0][0], dp[0][1]);
}

// Branch and bound: pick the first undominated vertex, branch on its closed
// neighborhood.
bool exists_dominating_of_size(const Graph& g, int budget,
                               std::vector<char>& in_set,
                               std::vector<int>& cover_count) {
  VertexId target = -1;
  for (VertexId v = 0; v < g.n; ++v) {
    if (!in_set[v] && cover_count[v] == 0) {
      target = v;
      break;
    }
  }
  if (target < 0) return true;
  if (budget == 0) return false;
  std::vector<VertexId> choices{target};
  choices.insert(choices.end(), g.adj[target].begin(), g.adj[target].end());
  for (VertexId w : choices) {
    if (in_set[w]) continue;
    in_set[w] = 1;
    ++cover_count[w];
    for (VertexId u : g.adj[w]) ++cover_count[u];
    bool found = exists_dominating_of_size(g, budget - 1, in_set, cover_count);
    in_set[w] = 0;
    --cover_count[w];
    for (VertexId u : g.adj[w]) --cover_count[u];
    if (found) return true;
  }
  return false;
}

int branch_and_bound_gamma(const Graph& g) {
  if (g.n > 32)
    throw std::invalid_argument(
        "domination_number: branch and bound guarded to n <= 32");
  std::vector<char> in_set(g.n, 0);
  std::vector<int> cover_count(g.n, 0);
  for (int k = 1; k <= g.n; ++k)
    if (exists_dominating_of_size(g, k, in_set, cover_count)) return k;
  return g.n;
}

}  // namespace

int domination_number(const Graph& g) {
  if (g.n == 0) throw std::invalid_argument("domination number of empty graph");
  if (is_tree(g)) return tree_domination_dp(g);
  return branch_and_bound_gamma(g);
}

int domination_number_bruteforce(const Graph& g) {
  if (g.n == 0) throw std::invalid_argument("domination number of empty graph");
  if (g.n > 24)
    throw std::invalid_argument("domination_number_bruteforce: n <= 24");
  std::vector<VertexId> subset;
  // Increasing-cardinality combination scan; first hit is the minimum.
  for (int k = 1; k <= g.n; ++k) {
    subset.resize(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    while (true) {
      if (is_dominating(g, subset)) return k;
      int i = k - 1;
      while (i >= 0 && subset[i] == g.n - k + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return g.n;
}

std::vector<VertexSet> dominating_2packings_with_leaves(const Graph& t) {
  if (!is_tree(t) || t.n < 2)
    throw std::invalid_argument(
        "dominating_2packings_with_leaves requires a tree with n >= 2");

  VertexSet base = leaves(t);
  std::vector<VertexId> candidates;
  {
    std::vector<char> is_leaf(t.n, 0);
    for (VertexId v : base) is_leaf[v] = 1;
    for (VertexId v = 0; v < t.n; ++v)
      if (!is_leaf[v]) candidates.push_back(v);
  }

  std::vector<std::vector<int>> dist(t.n);
  auto dist_row = [&](VertexId v) -> const std::vector<int>& {
    if (dist[v].empty()) dist[v] = bfs_distances(t, v);
    return dist[v];
  };
  auto compatible = [&](const VertexSet& chosen, VertexId v) {
    for (VertexId u : chosen)
      if (dist_row(u)[v] <= 2) return false;
    return true;
  };

  std::vector<VertexSet> out;
  if (!is_2packing(t, base)) return out;

  VertexSet chosen = base;
  std::function<void(std::size_t)> extend = [&](std::size_t idx) {
    if (idx == candidates.size()) {
      if (is_dominating(t, chosen)) {
        VertexSet s = chosen;
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
      }
      return;
    }
    VertexId v = candidates[idx];
    if (compatible(chosen, v)) {
      chosen.push_back(v);
      extend(idx + 1);
      chosen.pop_back();
    }
    extend(idx + 1);
  };
  extend(0);
  return out;
}

UniquePackingResult has_unique_dominating_2packing_with_leaves(const Graph& t) {
  if (!is_tree(t) || t.n < 3)
    throw std::invalid_argument(
        "has_unique_dominating_2packing_with_leaves requires a tree, n >= 3");

  // Same search as the enumeration, stopping as soon as two sets are found.
  VertexSet base = leaves(t);
  std::vector<VertexId> candidates;
  {
    std::vector<char> is_leaf(t.n, 0);
    for (VertexId v : base) is_leaf[v] = 1;
    for (VertexId v = 0; v < t.n; ++v)
      if (!is_leaf[v]) candidates.push_back(v);
  }
  UniquePackingResult result;
  if (!is_2packing(t, base)) return result;

  std::vector<std::vector<int>> dist(t.n);
  auto dist_row = [&](VertexId v) -> const std::vector<int>& {
    if (dist[v].empty()) dist[v] = bfs_distances(t, v);
    return dist[v];
  };

  int found = 0;
  VertexSet first;
  VertexSet chosen = base;
  std::function<void(std::size_t)> extend = [&](std::size_t idx) {
    if (found >= 2) return;
    if (idx == candidates.size()) {
      if (is_dominating(t, chosen)) {
        if (found == 0) {
          first = chosen;
          std::sort(first.begin(), first.end());
        }
        ++found;
      }
      return;
    }
    VertexId v = candidates[idx];
    bool ok = true;
    for (VertexId u : chosen)
      if (dist_row(u)[v] <= 2) {
        ok = false;
        break;
      }
    if (ok) {
      chosen.push_back(v);
      extend(idx + 1);
      chosen.pop_back();
    }
    extend(idx + 1);
  };
  extend(0);

  if (found == 1) {
    result.unique = true;
    result.witness = std::move(first);
  }
  return result;
}

}  // namespace corona
