#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/errors.hpp"

namespace thuelab {

// Undirected edge, stored normalized with u < v. Vertices are 1-based.
struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(int u, int v) {
  if (u == v) fail(errc::loop_edge, "loop edge at vertex " + std::to_string(u));
  return u < v ? Edge{u, v} : Edge{v, u};
}

// Finite simple undirected graph on vertices 1..n. Edges are kept sorted and
// unique; everything downstream relies on that canonical order (edge indices
// in deletion orders, line-graph vertex numbering, witness tie-breaking).
struct Graph {
  int n = 0;
  std::vector<Edge> edges;

  int order() const { return n; }
  int size() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const;
  bool operator==(const Graph&) const = default;
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& pairs);
Graph add_edge(const Graph& g, int u, int v);
Graph delete_edge(const Graph& g, int u, int v);
Graph induced_subgraph_edges(const Graph& g, const std::vector<Edge>& keep);

// Disjoint union; the second operand's vertices are shifted by g.n.
Graph disjoint_union(const Graph& g, const Graph& h);

// Subgraph induced on the given vertices, relabelled so ids[i-1] becomes i.
Graph induced_on(const Graph& g, const std::vector<int>& ids);

// A connected component relabelled to 1..k, plus the original vertex ids:
// original_ids[i-1] is the parent-graph id of the component's vertex i.
struct Component {
  Graph graph;
  std::vector<int> original_ids;
};

std::vector<Component> components(const Graph& g);
bool is_connected(const Graph& g);

inline constexpr int kInfiniteDistance = -1;

// Shortest path distances; kInfiniteDistance marks unreachable pairs.
std::vector<int> bfs_distances(const Graph& g, int src);
int distance(const Graph& g, int u, int v);
int diameter(const Graph& g);  // kInfiniteDistance when disconnected, 0 for a single vertex

std::vector<std::vector<int>> adjacency(const Graph& g);
std::vector<int> degrees(const Graph& g);
int max_degree(const Graph& g);
int min_degree(const Graph& g);

bool is_complete(const Graph& g);
bool is_edgeless(const Graph& g);
bool has_cycle(const Graph& g);

// First vertex triple (lexicographic) that induces at most one edge, i.e.
// does not form a triangle. Exists iff the graph is not complete.
std::optional<std::array<int, 3>> find_non_triangle_triple(const Graph& g);

// Vertex i of the line graph is edge i (1-based) of g's sorted edge list.
Graph line_graph(const Graph& g);

// Text format: optional '#' comment lines, then "n <count>", then one
// "u v" line per edge (1-based). Writers emit edges in sorted order.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

}  // namespace thuelab
