#include "corona/corona_ops.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace corona {

NeighborhoodPartition normalized(NeighborhoodPartition p) {
  for (auto& family : p.blocks) {
    for (auto& block : family) std::sort(block.begin(), block.end());
    std::sort(family.begin(), family.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
  }
  return p;
}

std::optional<std::string> validate_partition(const Graph& g,
                                              const NeighborhoodPartition& p) {
  if (static_cast<int>(p.blocks.size()) != g.n)
    return "partition has " + std::to_string(p.blocks.size()) +
           " families, graph has " + std::to_string(g.n) + " vertices";
  for (VertexId v = 0; v < g.n; ++v) {
    std::set<VertexId> covered;
    for (const auto& block : p.blocks[v]) {
      if (block.empty())
        return "empty block at vertex " + std::to_string(v);
      for (VertexId u : block) {
        if (!g.has_edge(v, u))
          return "block member " + std::to_string(u) + " at vertex " +
                 std::to_string(v) + " is not a neighbor";
        if (!covered.insert(u).second)
          return "blocks at vertex " + std::to_string(v) +
                 " overlap on " + std::to_string(u);
      }
    }
    if (static_cast<int>(covered.size()) != g.degree(v)) {
      for (VertexId u : g.adj[v])
        if (!covered.count(u))
          return "neighbor " + std::to_string(u) + " of vertex " +
                 std::to_string(v) + " is uncovered";
    }
  }
  return std::nullopt;
}

NeighborhoodPartition trivial_partition(const Graph& g) {
  NeighborhoodPartition p;
  p.blocks.resize(g.n);
  for (VertexId v = 0; v < g.n; ++v)
    if (g.degree(v) > 0) p.blocks[v].push_back(g.adj[v]);
  return p;
}

NeighborhoodPartition singleton_partition(const Graph& g) {
  NeighborhoodPartition p;
  p.blocks.resize(g.n);
  for (VertexId v = 0; v < g.n; ++v)
    for (VertexId u : g.adj[v]) p.blocks[v].push_back({u});
  return p;
}

CoronaGraph general_corona(const Graph& g, const NeighborhoodPartition& raw) {
  NeighborhoodPartition p = normalized(raw);
  if (auto violation = validate_partition(g, p))
    throw std::invalid_argument("invalid partition: " + *violation);

  // Externals first (External(v) has id v), then internals by
  // (origin, block minimum); blocks[v] is already in block-minimum order.
  std::vector<CoronaVertexTag> tags;
  for (VertexId v = 0; v < g.n; ++v)
    tags.push_back(CoronaVertexTag::external(v));
  // block_vertex[v][u] = product id of the internal (v,A) with u in A
  std::vector<std::map<VertexId, VertexId>> block_vertex(g.n);
  std::vector<Edge> edges;
  for (VertexId v = 0; v < g.n; ++v) {
    for (const auto& block : p.blocks[v]) {
      VertexId id = static_cast<VertexId>(tags.size());
      tags.push_back(CoronaVertexTag::internal(v, block));
      for (VertexId u : block) block_vertex[v][u] = id;
      edges.emplace_back(v, id);  // pendant edge External(v)-Internal(v,A)
    }
  }
  for (VertexId v = 0; v < g.n; ++v) {
    for (VertexId u : g.adj[v]) {
      if (v < u)
        edges.emplace_back(block_vertex[v].at(u), block_vertex[u].at(v));
    }
  }

  CoronaGraph out;
  out.graph = from_edge_list(static_cast<int>(tags.size()), edges);
  out.graph.tags = std::move(tags);
  out.base_order = g.n;
  return out;
}

Graph two_subdivision(const Graph& g) {
  std::vector<Edge> base_edges = g.edges();
  std::vector<Edge> out_edges;
  int next = g.n;
  for (auto [u, v] : base_edges) {
    int x1 = next++, x2 = next++;
    out_edges.emplace_back(u, x1);
    out_edges.emplace_back(x1, x2);
    out_edges.emplace_back(x2, v);
  }
  return from_edge_list(g.n + 2 * g.m, out_edges);
}

bool is_refinement(const NeighborhoodPartition& finer,
                   const NeighborhoodPartition& coarser, const Graph& g) {
  if (auto violation = validate_partition(g, finer))
    throw std::invalid_argument("invalid finer partition: " + *violation);
  if (auto violation = validate_partition(g, coarser))
    throw std::invalid_argument("invalid coarser partition: " + *violation);
  for (VertexId v = 0; v < g.n; ++v) {
    for (const auto& block : finer.blocks[v]) {
      bool inside_some = false;
      for (const auto& big : coarser.blocks[v]) {
        if (std::includes(big.begin(), big.end(), block.begin(), block.end())) {
          inside_some = true;
          break;
        }
      }
      if (!inside_some) return false;
    }
  }
  return true;
}

Graph corona_base(const CoronaGraph& c) {
  std::vector<Edge> edges;
  for (const auto& tag : c.graph.tags) {
    if (tag.is_internal())
      for (VertexId u : tag.block)
        if (tag.origin < u) edges.emplace_back(tag.origin, u);
  }
  return from_edge_list(c.base_order, edges);
}

NeighborhoodPartition corona_partition(const CoronaGraph& c) {
  NeighborhoodPartition p;
  p.blocks.resize(c.base_order);
  for (const auto& tag : c.graph.tags)
    if (tag.is_internal()) p.blocks[tag.origin].push_back(tag.block);
  return normalized(p);
}

VertexSet external_vertices(const CoronaGraph& c) {
  VertexSet out;
  for (VertexId v = 0; v < c.graph.n; ++v)
    if (c.graph.tags[v].is_external()) out.push_back(v);
  return out;
}

std::optional<VertexId> find_internal_vertex(const CoronaGraph& c,
                                             VertexId origin,
                                             const std::vector<VertexId>& block) {
  std::vector<VertexId> sorted = block;
  std::sort(sorted.begin(), sorted.end());
  CoronaVertexTag wanted = CoronaVertexTag::internal(origin, sorted);
  for (VertexId v = 0; v < c.graph.n; ++v)
    if (c.graph.tags[v] == wanted) return v;
  return std::nullopt;
}

namespace {

const CoronaVertexTag& internal_tag_at(const CoronaGraph& c, VertexId v,
                                       const char* who) {
  if (!c.graph.has_vertex(v))
    throw std::out_of_range(std::string(who) + ": vertex id out of range");
  const CoronaVertexTag& tag = c.graph.tags[v];
  if (!tag.is_internal())
    throw std::invalid_argument(std::string(who) + ": vertex is not internal");
  return tag;
}

}  // namespace

CoronaGraph contract_internal_pair(const CoronaGraph& c, VertexId a, VertexId b) {
  const CoronaVertexTag& ta = internal_tag_at(c, a, "contract_internal_pair");
  const CoronaVertexTag& tb = internal_tag_at(c, b, "contract_internal_pair");
  if (a == b)
    throw std::invalid_argument("contract_internal_pair: vertices must differ");
  if (ta.origin != tb.origin)
    throw std::invalid_argument(
        "contract_internal_pair: internals have different origins");

  NeighborhoodPartition p = corona_partition(c);
  auto& family = p.blocks[ta.origin];
  std::erase(family, ta.block);
  std::erase(family, tb.block);
  std::vector<VertexId> merged = ta.block;
  merged.insert(merged.end(), tb.block.begin(), tb.block.end());
  std::sort(merged.begin(), merged.end());
  family.push_back(std::move(merged));
  return general_corona(corona_base(c), p);
}

CoronaGraph split_internal(const CoronaGraph& c, VertexId x,
                           const std::vector<VertexId>& part_a,
                           const std::vector<VertexId>& part_b) {
  const CoronaVertexTag& tag = internal_tag_at(c, x, "split_internal");
  std::vector<VertexId> a = part_a, b = part_b;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a.empty() || b.empty())
    throw std::invalid_argument("split_internal: parts must be nonempty");
  std::vector<VertexId> merged = a;
  merged.insert(merged.end(), b.begin(), b.end());
  std::sort(merged.begin(), merged.end());
  if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
    throw std::invalid_argument("split_internal: parts overlap");
  if (merged != tag.block)
    throw std::invalid_argument("split_internal: parts do not cover the block");

  NeighborhoodPartition p = corona_partition(c);
  auto& family = p.blocks[tag.origin];
  std::erase(family, tag.block);
  family.push_back(std::move(a));
  family.push_back(std::move(b));
  return general_corona(corona_base(c), p);
}

namespace {

void require_tree_corona(const CoronaGraph& c, const char* who) {
  if (!is_tree(corona_base(c)))
    throw std::invalid_argument(std::string(who) + ": base is not a tree");
}

}  // namespace

CoronaGraph glue_at_external_vertex(const CoronaGraph& c1,
                                    const CoronaGraph& c2, VertexId v1,
                                    VertexId v2) {
  if (&c1 == &c2)
    throw std::invalid_argument(
        "glue_at_external_vertex: inputs must be distinct coronas");
  if (!c1.graph.has_vertex(v1) || !c2.graph.has_vertex(v2))
    throw std::out_of_range("glue_at_external_vertex: vertex id out of range");
  if (!c1.graph.tags[v1].is_external() || !c2.graph.tags[v2].is_external())
    throw std::invalid_argument(
        "glue_at_external_vertex: both glue points must be external");
  require_tree_corona(c1, "glue_at_external_vertex");
  require_tree_corona(c2, "glue_at_external_vertex");

  Graph base1 = corona_base(c1);
  Graph base2 = corona_base(c2);
  VertexId shared1 = c1.graph.tags[v1].origin;
  VertexId shared2 = c2.graph.tags[v2].origin;

  // Merged base: base1 vertices keep their ids; base2 vertices are appended
  // except shared2, which maps onto shared1.
  std::vector<VertexId> map2(base2.n);
  VertexId next = base1.n;
  for (VertexId v = 0; v < base2.n; ++v)
    map2[v] = (v == shared2) ? shared1 : next++;

  std::vector<Edge> edges = base1.edges();
  for (auto [u, v] : base2.edges()) edges.emplace_back(map2[u], map2[v]);
  Graph base = from_edge_list(base1.n + base2.n - 1, edges);

  NeighborhoodPartition p1 = corona_partition(c1);
  NeighborhoodPartition p2 = corona_partition(c2);
  NeighborhoodPartition p;
  p.blocks.resize(base.n);
  for (VertexId v = 0; v < base1.n; ++v) p.blocks[v] = p1.blocks[v];
  for (VertexId v = 0; v < base2.n; ++v) {
    for (auto block : p2.blocks[v]) {
      for (VertexId& u : block) u = map2[u];
      p.blocks[map2[v]].push_back(std::move(block));
    }
  }
  return general_corona(base, p);
}

CoronaGraph glue_at_edge(const CoronaGraph& c1, const CoronaGraph& c2,
                         PendantEdge e1, PendantEdge e2) {
  if (&c1 == &c2)
    throw std::invalid_argument("glue_at_edge: inputs must be distinct coronas");
  auto check_edge = [](const CoronaGraph& c, PendantEdge e, const char* side) {
    auto [ext, internal] = e;
    if (!c.graph.has_vertex(ext) || !c.graph.has_vertex(internal))
      throw std::out_of_range("glue_at_edge: vertex id out of range");
    if (!c.graph.tags[ext].is_external() || !c.graph.tags[internal].is_internal())
      throw std::invalid_argument(std::string("glue_at_edge: ") + side +
                                  " edge is not external-internal aligned");
    if (c.graph.tags[ext].origin != c.graph.tags[internal].origin ||
        !c.graph.has_edge(ext, internal))
      throw std::invalid_argument(std::string("glue_at_edge: ") + side +
                                  " edge is not a pendant corona edge");
  };
  check_edge(c1, e1, "first");
  check_edge(c2, e2, "second");

  const CoronaVertexTag tag1 = c1.graph.tags[e1.second];
  const CoronaVertexTag tag2 = c2.graph.tags[e2.second];
  CoronaGraph merged = glue_at_external_vertex(c1, c2, e1.first, e2.first);

  // Locate the two internal endpoints inside the merged corona. The c2-side
  // block was re-indexed by the glue: c2 base vertices keep their relative
  // order after c1's, with the shared origin folded onto c1's.
  VertexId shared_origin = tag1.origin;
  std::vector<VertexId> block2;
  {
    VertexId base1_order = c1.base_order;
    VertexId shared2 = tag2.origin;
    for (VertexId u : tag2.block)
      block2.push_back(u < shared2 ? base1_order + u : base1_order + u - 1);
    std::sort(block2.begin(), block2.end());
  }
  auto a = find_internal_vertex(merged, shared_origin, tag1.block);
  auto b = find_internal_vertex(merged, shared_origin, block2);
  if (!a || !b)
    throw std::logic_error("glue_at_edge: merged internals not found");
  return contract_internal_pair(merged, *a, *b);
}

}  // namespace corona
