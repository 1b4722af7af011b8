#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace corona {

using VertexId = int;

// Sorted vertex-id set, kept ascending and duplicate-free.
using VertexSet = std::vector<VertexId>;

using Edge = std::pair<VertexId, VertexId>;

// Provenance label of a corona-product vertex: the external vertex (v,1) of
// a base vertex v, or the internal vertex (v,A) of a block A of the
// neighborhood partition at v.
struct CoronaVertexTag {
  enum class Kind { External, Internal };

  Kind kind = Kind::External;
  VertexId origin = 0;
  std::vector<VertexId> block;  // sorted; nonempty exactly when internal

  bool is_external() const { return kind == Kind::External; }
  bool is_internal() const { return kind == Kind::Internal; }

  static CoronaVertexTag external(VertexId origin) {
    return {Kind::External, origin, {}};
  }
  static CoronaVertexTag internal(VertexId origin, std::vector<VertexId> block) {
    return {Kind::Internal, origin, std::move(block)};
  }

  auto operator<=>(const CoronaVertexTag&) const = default;
};

// Renders "(v,1)" for externals and "(v,{a,b})" for internals.
std::string to_string(const CoronaVertexTag& tag);

// Simple undirected graph with dense vertex ids 0..n-1 and sorted adjacency
// lists. tags is empty for plain graphs or has one entry per vertex for
// corona products. Treated as an immutable value after construction.
struct Graph {
  int n = 0;
  int m = 0;
  std::vector<std::vector<VertexId>> adj;
  std::vector<CoronaVertexTag> tags;

  int vertex_count() const { return n; }
  int edge_count() const { return m; }
  int degree(VertexId v) const { return static_cast<int>(adj[v].size()); }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj[v]; }
  bool has_vertex(VertexId v) const { return v >= 0 && v < n; }
  bool has_edge(VertexId u, VertexId v) const;
  bool has_tags() const { return !tags.empty(); }
  std::vector<Edge> edges() const;  // u < v, sorted

  bool operator==(const Graph&) const = default;
};

// Builds a graph from an edge list, deduplicating repeated edges.
// Throws std::out_of_range for endpoints outside 0..n-1 and
// std::invalid_argument for self-loops.
Graph from_edge_list(int n, const std::vector<Edge>& edges);

bool is_connected(const Graph& g);

// True iff g is connected with exactly n-1 edges (false for n = 0).
bool is_tree(const Graph& g);

// BFS distances from src; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, VertexId src);

// Shortest-path edge count, or nullopt when u and v are disconnected.
std::optional<int> distance(const Graph& g, VertexId u, VertexId v);

// All vertices of degree 1.
VertexSet leaves(const Graph& g);

struct Supports {
  VertexSet supports;         // neighbors of leaves
  VertexSet strong_supports;  // vertices with at least two leaf neighbors
};
Supports support_vertices(const Graph& g);

bool has_strong_support_vertex(const Graph& g);

// Path in a graph: distinct vertices along consecutive edges.
struct Path {
  std::vector<VertexId> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// Diametral path of a tree by double BFS. Deterministic: ties are broken by
// the smallest vertex id at every choice point, and the returned path starts
// at its smaller endpoint id. Throws std::invalid_argument unless t is a
// tree with n >= 2.
Path longest_path(const Graph& t);

// Center-rooted AHU canonical code of a tree; equal codes characterize
// isomorphic trees. When labels are given (one small-alphabet symbol per
// vertex) they are folded into the per-vertex symbols, so equality means
// label-preserving isomorphism. Throws std::invalid_argument for non-trees.
std::string tree_canonical_code(const Graph& t,
                                const std::vector<char>& labels = {});

bool are_isomorphic_trees(const Graph& t1, const Graph& t2);

}  // namespace corona
