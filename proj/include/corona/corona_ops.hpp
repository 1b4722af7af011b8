#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corona/graph.hpp"

namespace corona {

// Family of per-vertex partitions of open neighborhoods: blocks[v] is a list
// of disjoint nonempty sorted blocks covering N(v) exactly. Isolated vertices
// carry the empty family. Blocks are kept ordered by their minimum element.
struct NeighborhoodPartition {
  std::vector<std::vector<std::vector<VertexId>>> blocks;

  bool operator==(const NeighborhoodPartition&) const = default;
};

// Sorts every block and orders each family by block minimum.
NeighborhoodPartition normalized(NeighborhoodPartition p);

// nullopt when p satisfies the partition invariants against g, otherwise a
// description of the first violation found (empty block, stray vertex,
// overlap, uncovered neighbor).
std::optional<std::string> validate_partition(const Graph& g,
                                              const NeighborhoodPartition& p);

// P(v) = {N(v)} for every non-isolated vertex.
NeighborhoodPartition trivial_partition(const Graph& g);

// P(v) = all singletons of N(v).
NeighborhoodPartition singleton_partition(const Graph& g);

// General corona product. The product graph carries one External(v) vertex
// per base vertex and one Internal(v,A) vertex per block A of P(v), with
// pendant edges External(v)-Internal(v,A) and one edge
// Internal(v,A)-Internal(u,B) per base edge uv where u in A and v in B.
//
// Canonical numbering: externals take ids 0..n-1 (External(v) has id v) and
// internals follow, ordered by (origin id, block minimum element).
struct CoronaGraph {
  Graph graph;  // tagged product graph
  int base_order = 0;

  bool operator==(const CoronaGraph&) const = default;
};

// Throws std::invalid_argument when the partition is invalid for g.
CoronaGraph general_corona(const Graph& g, const NeighborhoodPartition& p);

// Every edge uv replaced by a path (u,x1,x2,v); result is untagged.
// New vertex pairs are appended in sorted edge order.
Graph two_subdivision(const Graph& g);

// True iff every block of finer(v) is contained in some block of coarser(v).
// Both partitions must be valid for g.
bool is_refinement(const NeighborhoodPartition& finer,
                   const NeighborhoodPartition& coarser, const Graph& g);

// Base graph and partition recovered from the product tags.
Graph corona_base(const CoronaGraph& c);
NeighborhoodPartition corona_partition(const CoronaGraph& c);

// Product ids of the external vertices (= 0..base_order-1 by construction).
VertexSet external_vertices(const CoronaGraph& c);

// Product id of Internal(origin, block), if present.
std::optional<VertexId> find_internal_vertex(const CoronaGraph& c,
                                             VertexId origin,
                                             const std::vector<VertexId>& block);

// Replaces two internal vertices Internal(v,A), Internal(v,B) by
// Internal(v, A union B); the result is rebuilt with canonical numbering.
// Throws std::invalid_argument unless a and b are distinct internals with the
// same origin.
CoronaGraph contract_internal_pair(const CoronaGraph& c, VertexId a, VertexId b);

// Inverse of contract_internal_pair: splits Internal(v,A) into
// Internal(v,part_a) and Internal(v,part_b). The parts must be nonempty,
// disjoint, and cover A.
CoronaGraph split_internal(const CoronaGraph& c, VertexId x,
                           const std::vector<VertexId>& part_a,
                           const std::vector<VertexId>& part_b);

// Disjoint union of two coronas of trees with External v1 identified with
// External v2. The merged base identifies the two origins and takes the
// union of their block families at the shared vertex. c1 and c2 must be
// distinct objects; pass a copy to glue a corona with itself.
CoronaGraph glue_at_external_vertex(const CoronaGraph& c1,
                                    const CoronaGraph& c2, VertexId v1,
                                    VertexId v2);

// Pendant product edge given as (external id, internal id), in that order.
using PendantEdge = std::pair<VertexId, VertexId>;

// Identifies pendant edge e1 of c1 with pendant edge e2 of c2, external
// endpoint with external endpoint: glue at the externals, then contract the
// two internal endpoints. Each edge must join an External to one of its own
// Internals and be passed external-first.
CoronaGraph glue_at_edge(const CoronaGraph& c1, const CoronaGraph& c2,
                         PendantEdge e1, PendantEdge e2);

}  // namespace corona
