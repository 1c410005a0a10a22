#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symqaoa/graph.hpp"

namespace symqaoa::testing {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

/// Wrapped grid over mixed-radix coordinates; the two wrap neighbors along a
/// length-2 dimension coincide and are stored once.
Graph torus_grid(const std::vector<int>& dims);

/// m distinct edges drawn uniformly from all pairs.
Graph random_gnm(int n, int m, std::uint64_t seed);

/// Random connected graph (resampled until connected).
Graph random_connected(int n, int m, std::uint64_t seed);

/// Random simple connected d-regular graph via the pairing model.
Graph random_regular(int n, int d, std::uint64_t seed);

bool is_connected(const Graph& g);

/// Every connected graph on 1..max_n vertices up to isomorphism
/// (exhaustive enumeration with brute-force canonical forms; max_n <= 6).
std::vector<Graph> all_connected_graphs_upto(int max_n);

/// Seeded sample of pairwise non-isomorphic connected 7-vertex graphs.
std::vector<Graph> connected_seven_vertex_sample(int count,
                                                 std::uint64_t seed);

/// Copy of g with edge weights drawn from the given palette.
Graph with_random_weights(const Graph& g, const std::vector<double>& palette,
                          std::uint64_t seed);

struct NamedGraph {
  std::string name;
  Graph g;
};

}  // namespace symqaoa::testing
