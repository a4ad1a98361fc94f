#include "core/subdivide.hpp"

#include "core/generators.hpp"

namespace thuelab {

Graph subdivide_h(const Graph& g, const Graph& h, int hu, int hw) {
  if (hu < 1 || hu > h.n || hw < 1 || hw > h.n)
    fail(errc::vertex_out_of_range, "attach vertex outside the inserted graph");
  int d = distance(h, hu, hw);
  if (d == kInfiniteDistance || d < 2)
    fail(errc::attach_too_close, "attach vertices must be at distance at least 2");

  std::vector<std::pair<int, int>> pairs;
  int next = g.n;
  for (const Edge& e : g.edges) {
    int base = next;  // copy vertex t becomes base + t
    for (const Edge& he : h.edges) pairs.emplace_back(base + he.u, base + he.v);
    pairs.emplace_back(e.u, base + hu);
    pairs.emplace_back(e.v, base + hw);
    next += h.n;
  }
  return make_graph(next, pairs);
}

Graph subdivide_k(const Graph& g, int k) {
  if (k < 1) fail(errc::out_of_range, "need at least one inserted vertex per edge");
  std::vector<std::pair<int, int>> pairs;
  int next = g.n;
  for (const Edge& e : g.edges) {
    int prev = e.u;
    for (int t = 1; t <= k; ++t) {
      pairs.emplace_back(prev, next + t);
      prev = next + t;
    }
    pairs.emplace_back(prev, e.v);
    next += k;
  }
  return make_graph(next, pairs);
}

Graph subdivide_cycle(const Graph& g, int m, std::optional<std::pair<int, int>> attach) {
  if (m < 3) fail(errc::size_too_small, "inserted cycle needs at least three vertices");
  int hu = 1, hw = 1 + m / 2;
  if (attach) {
    hu = attach->first;
    hw = attach->second;
  }
  return subdivide_h(g, cycle_graph(m), hu, hw);
}

}  // namespace thuelab
