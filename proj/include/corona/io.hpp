#pragma once

#include <iosfwd>
#include <string>

#include "corona/characterize.hpp"
#include "corona/corona_ops.hpp"
#include "corona/graph.hpp"

namespace corona {

// Edge-list text format: first non-comment line "n m", then m lines "u v"
// with 0-based ids; lines whose first non-blank character is '#' are
// comments. Throws std::runtime_error on malformed input.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_text(const std::string& text);
Graph parse_edge_list_file(const std::string& path);

// Canonical edge-list text: "n m" then edges sorted ascending, u < v. When
// the graph is tagged, tag comment lines precede the header:
//   # tag <id> ext <origin>
//   # tag <id> int <origin> <b1,b2,...>
std::string to_edge_list_text(const Graph& g);

// DOT export; external vertices take shape=square and tagged vertices are
// labeled with their tag.
std::string to_dot(const Graph& g, const std::string& name = "g");

// Partition JSON: object mapping base vertex id (as string) to an array of
// arrays of ids. Vertices omitted from the object default to their trivial
// partition. Throws std::runtime_error on malformed JSON or non-id keys;
// semantic violations are left to validate_partition.
NeighborhoodPartition parse_partition_json(const std::string& text,
                                           const Graph& base);

// Emits only vertices whose family differs from the trivial partition.
std::string partition_to_json(const NeighborhoodPartition& p,
                              const Graph& base);

// {"base": {"n": ..., "edges": [[u,v],...]}, "partition": {...}}
std::string witness_to_json(const CoronaWitness& w);
CoronaWitness witness_from_json(const std::string& text);

// Product graph with tags: n, base_order, edges, and one tag record per
// vertex.
std::string corona_to_json(const CoronaGraph& c);

// One JSON object per report: code, n, sd, c1..c6, optional witness and
// packing.
std::string report_to_json_line(const ClassReport& r);

}  // namespace corona
