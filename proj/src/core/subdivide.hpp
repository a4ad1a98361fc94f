#pragma once

#include <optional>
#include <utility>

#include "core/graph.hpp"

namespace thuelab {

// All three constructions replace every edge of g by a fresh gadget, walking
// edges in canonical sorted order; inserted vertices take ids n+1, n+2, ...
// so the result is reproducible byte for byte.

// Edge u-v becomes the path u, x1, ..., xk, v with k fresh vertices.
Graph subdivide_k(const Graph& g, int k);  // k >= 1

// Edge u-v is removed; a fresh m-cycle is added together with edges from u
// and v to two cycle vertices at distance >= 2 (default: antipodal, cycle
// vertices 1 and 1 + m/2).
Graph subdivide_cycle(const Graph& g, int m,
                      std::optional<std::pair<int, int>> attach = std::nullopt);

// Edge u-v is removed; a fresh copy of h is added with edges u-(copy of hu)
// and v-(copy of hw); hu, hw must be at distance >= 2 in h. The smaller
// endpoint of each edge attaches to hu.
Graph subdivide_h(const Graph& g, const Graph& h, int hu, int hw);

}  // namespace thuelab
