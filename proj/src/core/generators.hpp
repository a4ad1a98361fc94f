#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "core/graph.hpp"

namespace thuelab {

Graph path_graph(int n);            // n >= 1
Graph cycle_graph(int n);           // n >= 3
Graph complete_graph(int n);        // n >= 1
Graph star_graph(int leaves);       // centre is vertex 1, leaves >= 1
Graph edgeless_graph(int n);        // n >= 1

// Spine path of legs.size() vertices; legs[i] pendant vertices hang off
// spine vertex i+1. Pendants are numbered after the spine, spine order.
Graph caterpillar_graph(const std::vector<int>& legs);

// Connected graph on n labelled vertices with exactly m edges: a random
// attachment tree plus uniformly sampled extra edges. Deterministic in seed.
Graph random_connected_graph(int n, int m, std::uint64_t seed);

// Mini-language used by the command line and tests:
//   path:7  cycle:9  complete:4  star:5  edgeless:6  jaco:1,0,8
//   caterpillar:2,0,3  random:8,10
Graph generate_from_spec(std::string_view spec, std::uint64_t seed);

}  // namespace thuelab
