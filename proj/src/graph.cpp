#include "corona/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace corona {

std::string to_string(const CoronaVertexTag& tag) {
  std::ostringstream out;
  out << '(' << tag.origin << ',';
  if (tag.is_external()) {
    out << '1';
  } else {
    out << '{';
    for (std::size_t i = 0; i < tag.block.size(); ++i) {
      if (i > 0) out << ',';
      out << tag.block[i];
    }
    out << '}';
  }
  out << ')';
  return out.str();
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : adj[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph from_edge_list(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) continue;
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
  g.m = static_cast<int>(seen.size());
  return g;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return false;
  std::vector<char> visited(g.n, 0);
  std::deque<VertexId> queue{0};
  visited[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId v : g.adj[u]) {
      if (!visited[v]) {
        visited[v] = 1;
        ++reached;
        queue.push_back(v);
      }
    }
  }
  return reached == g.n;
}

bool is_tree(const Graph& g) {
  return g.n >= 1 && g.m == g.n - 1 && is_connected(g);
}

std::vector<int> bfs_distances(const Graph& g, VertexId src) {
  if (!g.has_vertex(src)) throw std::out_of_range("vertex id out of range");
  std::vector<int> dist(g.n, -1);
  std::deque<VertexId> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId v : g.adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::optional<int> distance(const Graph& g, VertexId u, VertexId v) {
  if (!g.has_vertex(u) || !g.has_vertex(v))
    throw std::out_of_range("vertex id out of range");
  int d = bfs_distances(g, u)[v];
  if (d < 0) return std::nullopt;
  return d;
}

VertexSet leaves(const Graph& g) {
  VertexSet out;
  for (VertexId v = 0; v < g.n; ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

Supports support_vertices(const Graph& g) {
  std::vector<int> leaf_neighbors(g.n, 0);
  for (VertexId v = 0; v < g.n; ++v)
    if (g.degree(v) == 1) ++leaf_neighbors[g.adj[v][0]];
  Supports out;
  for (VertexId v = 0; v < g.n; ++v) {
    if (leaf_neighbors[v] >= 1) out.supports.push_back(v);
    if (leaf_neighbors[v] >= 2) out.strong_supports.push_back(v);
  }
  return out;
}

bool has_strong_support_vertex(const Graph& g) {
  return !support_vertices(g).strong_supports.empty();
}

namespace {

// Smallest id among the vertices farthest from src.
VertexId farthest_min_id(const std::vector<int>& dist) {
  int best = 0;
  VertexId where = 0;
  for (VertexId v = 0; v < static_cast<int>(dist.size()); ++v) {
    if (dist[v] > best) {
      best = dist[v];
      where = v;
    }
  }
  return where;
}

}  // namespace

Path longest_path(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("longest_path requires a tree");
  if (t.n < 2) throw std::invalid_argument("longest_path requires n >= 2");
  VertexId a = farthest_min_id(bfs_distances(t, 0));
  std::vector<int> dist = bfs_distances(t, a);
  VertexId b = farthest_min_id(dist);
  // Walk from b toward a, stepping to the smallest-id neighbor one level
  // closer at every choice point.
  std::vector<VertexId> rev{b};
  VertexId cur = b;
  while (cur != a) {
    for (VertexId u : t.adj[cur]) {
      if (dist[u] == dist[cur] - 1) {
        cur = u;
        break;  // adjacency is sorted, first hit is the smallest id
      }
    }
    rev.push_back(cur);
  }
  std::reverse(rev.begin(), rev.end());
  if (rev.back() < rev.front()) std::reverse(rev.begin(), rev.end());
  return Path{std::move(rev)};
}

namespace {

std::vector<VertexId> tree_centers(const Graph& t) {
  if (t.n == 1) return {0};
  std::vector<int> deg(t.n);
  for (VertexId v = 0; v < t.n; ++v) deg[v] = t.degree(v);
  std::vector<VertexId> layer;
  for (VertexId v = 0; v < t.n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  int remaining = t.n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<VertexId> next;
    for (VertexId v : layer) {
      deg[v] = 0;
      for (VertexId u : t.adj[v])
        if (--deg[u] == 1) next.push_back(u);
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string rooted_code(const Graph& t, VertexId root,
                        const std::vector<char>& labels) {
  std::function<std::string(VertexId, VertexId)> encode =
      [&](VertexId v, VertexId parent) -> std::string {
    std::vector<std::string> child_codes;
    for (VertexId u : t.adj[v])
      if (u != parent) child_codes.push_back(encode(u, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string out = "(";
    if (!labels.empty()) out += labels[v];
    for (const auto& c : child_codes) out += c;
    out += ')';
    return out;
  };
  return encode(root, -1);
}

}  // namespace

std::string tree_canonical_code(const Graph& t,
                                const std::vector<char>& labels) {
  if (!is_tree(t)) throw std::invalid_argument("canonical code requires a tree");
  if (!labels.empty() && static_cast<int>(labels.size()) != t.n)
    throw std::invalid_argument("label vector size must match vertex count");
  std::vector<VertexId> centers = tree_centers(t);
  std::string code = rooted_code(t, centers[0], labels);
  if (centers.size() == 2)
    code = std::min(code, rooted_code(t, centers[1], labels));
  return code;
}

bool are_isomorphic_trees(const Graph& t1, const Graph& t2) {
  if (!is_tree(t1) || !is_tree(t2))
    throw std::invalid_argument("isomorphism check requires trees");
  if (t1.n != t2.n) return false;
  return tree_canonical_code(t1) == tree_canonical_code(t2);
}

}  // namespace corona
