#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "anum/graph.hpp"

namespace anum {

/// Number of unordered pairs on n vertices.
inline constexpr int pair_count(int n) noexcept { return n * (n - 1) / 2; }

/// Labeled graph whose edge set is encoded by `edge_bits` over the pairs in
/// column order (0,1), (0,2), (1,2), (0,3), ... Requires n <= 11.
Graph labeled_graph_from_bits(int n, std::uint64_t edge_bits);

/// Inverse of labeled_graph_from_bits.
std::uint64_t labeled_graph_bits(const Graph& g);

/// One canonical representative per isomorphism class on n vertices, sorted
/// by the graph6 string of the representative. Built by adding a vertex with
/// every neighborhood to each class on n-1 vertices. Requires n <= 8.
std::vector<Graph> isomorphism_classes(int n);

/// graph6 string of the canonical representative.
std::string canonical_key(const Graph& g);

/// Each pair is an edge independently with probability 1/2, decided by one
/// bit of the generator output, so the result depends only on the seed.
Graph random_graph(int n, std::mt19937_64& rng);

/// Uniform integer in [lo, hi] drawn from raw generator output.
int random_int(std::mt19937_64& rng, int lo, int hi);

}  // namespace anum
