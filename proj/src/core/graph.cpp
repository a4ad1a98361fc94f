#include "core/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>

namespace thuelab {

namespace {

void check_vertex(const Graph& g, int v) {
  if (v < 1 || v > g.n)
    fail(errc::vertex_out_of_range,
         "vertex " + std::to_string(v) + " outside 1.." + std::to_string(g.n));
}

}  // namespace

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  Edge e = u < v ? Edge{u, v} : Edge{v, u};
  return std::binary_search(edges.begin(), edges.end(), e);
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 1) fail(errc::empty_graph, "graph must have at least one vertex");
  Graph g;
  g.n = n;
  g.edges.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    check_vertex(g, u);
    check_vertex(g, v);
    g.edges.push_back(make_edge(u, v));
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

Graph add_edge(const Graph& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  Edge e = make_edge(u, v);
  if (g.has_edge(u, v))
    fail(errc::edge_present,
         "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " already present");
  Graph out = g;
  out.edges.insert(std::upper_bound(out.edges.begin(), out.edges.end(), e), e);
  return out;
}

Graph delete_edge(const Graph& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  Edge e = make_edge(u, v);
  auto it = std::lower_bound(g.edges.begin(), g.edges.end(), e);
  if (it == g.edges.end() || *it != e)
    fail(errc::edge_absent,
         "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not present");
  Graph out = g;
  out.edges.erase(out.edges.begin() + (it - g.edges.begin()));
  return out;
}

Graph induced_subgraph_edges(const Graph& g, const std::vector<Edge>& keep) {
  Graph out;
  out.n = g.n;
  out.edges = keep;
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
  for (const Edge& e : out.edges)
    if (!g.has_edge(e.u, e.v))
      fail(errc::edge_absent, "edge not in parent graph");
  return out;
}

Graph induced_on(const Graph& g, const std::vector<int>& ids) {
  if (ids.empty()) fail(errc::empty_graph, "induced subgraph needs at least one vertex");
  std::vector<int> local(g.n + 1, 0);
  for (size_t i = 0; i < ids.size(); ++i) {
    check_vertex(g, ids[i]);
    if (local[ids[i]]) fail(errc::out_of_range, "duplicate vertex in induced set");
    local[ids[i]] = static_cast<int>(i) + 1;
  }
  Graph out;
  out.n = static_cast<int>(ids.size());
  for (const Edge& e : g.edges)
    if (local[e.u] && local[e.v]) out.edges.push_back(make_edge(local[e.u], local[e.v]));
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out;
  out.n = g.n + h.n;
  out.edges = g.edges;
  for (const Edge& e : h.edges) out.edges.push_back(Edge{e.u + g.n, e.v + g.n});
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

std::vector<std::vector<int>> adjacency(const Graph& g) {
  std::vector<std::vector<int>> adj(g.n + 1);
  for (const Edge& e : g.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<int> degrees(const Graph& g) {
  std::vector<int> deg(g.n + 1, 0);
  for (const Edge& e : g.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

int max_degree(const Graph& g) {
  auto deg = degrees(g);
  return *std::max_element(deg.begin() + 1, deg.end());
}

int min_degree(const Graph& g) {
  auto deg = degrees(g);
  return *std::min_element(deg.begin() + 1, deg.end());
}

std::vector<Component> components(const Graph& g) {
  auto adj = adjacency(g);
  std::vector<int> comp(g.n + 1, 0);
  int count = 0;
  for (int s = 1; s <= g.n; ++s) {
    if (comp[s]) continue;
    ++count;
    std::queue<int> q;
    q.push(s);
    comp[s] = count;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : adj[x])
        if (!comp[y]) {
          comp[y] = count;
          q.push(y);
        }
    }
  }
  std::vector<Component> out(count);
  std::vector<int> local(g.n + 1, 0);
  for (int v = 1; v <= g.n; ++v) {
    Component& c = out[comp[v] - 1];
    c.original_ids.push_back(v);
    local[v] = static_cast<int>(c.original_ids.size());
    c.graph.n = local[v];
  }
  for (const Edge& e : g.edges)
    out[comp[e.u] - 1].graph.edges.push_back(make_edge(local[e.u], local[e.v]));
  for (Component& c : out) std::sort(c.graph.edges.begin(), c.graph.edges.end());
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

std::vector<int> bfs_distances(const Graph& g, int src) {
  check_vertex(g, src);
  auto adj = adjacency(g);
  std::vector<int> dist(g.n + 1, kInfiniteDistance);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : adj[x])
      if (dist[y] == kInfiniteDistance) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
  }
  return dist;
}

int distance(const Graph& g, int u, int v) {
  check_vertex(g, v);
  return bfs_distances(g, u)[v];
}

int diameter(const Graph& g) {
  int best = 0;
  for (int v = 1; v <= g.n; ++v) {
    auto dist = bfs_distances(g, v);
    for (int w = 1; w <= g.n; ++w) {
      if (dist[w] == kInfiniteDistance) return kInfiniteDistance;
      best = std::max(best, dist[w]);
    }
  }
  return best;
}

bool is_complete(const Graph& g) {
  return g.size() == g.n * (g.n - 1) / 2;
}

bool is_edgeless(const Graph& g) { return g.edges.empty(); }

bool has_cycle(const Graph& g) {
  // a component is a tree iff it has one more vertex than edges
  for (const Component& c : components(g))
    if (c.graph.size() >= c.graph.order()) return true;
  return false;
}

std::optional<std::array<int, 3>> find_non_triangle_triple(const Graph& g) {
  if (g.n < 3) fail(errc::too_few_vertices, "triple scan needs at least three vertices");
  for (int a = 1; a <= g.n; ++a)
    for (int b = a + 1; b <= g.n; ++b)
      for (int c = b + 1; c <= g.n; ++c) {
        int present = (g.has_edge(a, b) ? 1 : 0) + (g.has_edge(a, c) ? 1 : 0) +
                      (g.has_edge(b, c) ? 1 : 0);
        if (present < 3) return std::array<int, 3>{a, b, c};
      }
  return std::nullopt;
}

Graph line_graph(const Graph& g) {
  if (g.edges.empty()) fail(errc::no_edges, "line graph needs at least one edge");
  Graph out;
  out.n = g.size();
  for (int i = 0; i < out.n; ++i)
    for (int j = i + 1; j < out.n; ++j) {
      const Edge& a = g.edges[i];
      const Edge& b = g.edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
        out.edges.push_back(Edge{i + 1, j + 1});
    }
  return out;
}

namespace {

bool parse_int(std::string_view tok, int& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> toks;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    if (!tokens_of(line).empty()) lines.push_back(line);
    if (nl == text.size()) break;
    pos = nl + 1;
  }
  if (lines.empty()) fail(errc::parse_error, "empty edge list input");

  auto head = tokens_of(lines[0]);
  int n = 0, m = 0;
  if (head.size() != 2 || !parse_int(head[0], n) || !parse_int(head[1], m))
    fail(errc::parse_error, "header must be: n edge-count");
  if (n < 1) fail(errc::parse_error, "vertex count must be positive");
  if (m < 0 || static_cast<size_t>(m) != lines.size() - 1)
    fail(errc::parse_error, "edge count does not match number of edge lines");

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(m);
  for (size_t i = 1; i < lines.size(); ++i) {
    auto toks = tokens_of(lines[i]);
    int u = 0, v = 0;
    if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
      fail(errc::parse_error, "bad edge line: expected two integers");
    if (u < 1 || u > n || v < 1 || v > n)
      fail(errc::parse_error, "edge endpoint outside 1.." + std::to_string(n));
    if (u == v) fail(errc::parse_error, "loop edge at vertex " + std::to_string(u));
    pairs.emplace_back(u, v);
  }
  Graph g = make_graph(n, pairs);
  if (g.size() != m) fail(errc::parse_error, "duplicate edge in input");
  return g;
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.n << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

}  // namespace thuelab
