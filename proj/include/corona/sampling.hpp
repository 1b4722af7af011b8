#pragma once

#include <random>

#include "corona/corona_ops.hpp"
#include "corona/graph.hpp"

namespace corona {

// Uniform random labeled tree on n vertices via a random Pruefer sequence.
Graph random_tree(int n, std::mt19937_64& rng);

// Random valid neighborhood partition: each neighbor of v is thrown into one
// of a randomly chosen number of buckets, empty buckets dropped.
NeighborhoodPartition random_partition(const Graph& g, std::mt19937_64& rng);

// Decodes a Pruefer sequence (length n-2, entries in 0..n-1) into its tree.
Graph tree_from_pruefer(int n, const std::vector<int>& seq);

}  // namespace corona
