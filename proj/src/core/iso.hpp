#pragma once

#include <vector>

#include "core/graph.hpp"

namespace thuelab {

// Exact isomorphism by permutation backtracking with degree pruning. n <= 10.
bool is_isomorphic(const Graph& a, const Graph& b);

// Structural recognizers, any order; used where permutation search would be
// too slow.
bool is_path_graph(const Graph& g);
bool is_cycle_graph(const Graph& g);

// Every graph on n vertices up to isomorphism, n <= 7. Built by attaching a
// new vertex to each subset of every (n-1)-atlas entry and deduplicating by
// canonical form (minimum edge bitmask over all vertex permutations).
// Cached per order; the returned reference stays valid for the process.
const std::vector<Graph>& graph_atlas(int n);
std::vector<Graph> connected_graph_atlas(int n);

}  // namespace thuelab
