#include "core/thue.hpp"

#include <algorithm>
#include <bit>

namespace thuelab {

namespace {

constexpr int kHardVertexCap = 62;  // bitmask representation

struct Budget {
  std::uint64_t used = 0;
  std::uint64_t cap = 0;
  void tick() {
    if (++used > cap) fail(errc::budget_exceeded, "search budget exhausted");
  }
};

std::uint64_t bit_of(int v) { return std::uint64_t{1} << v; }

}  // namespace

int Colouring::colours_used() const {
  std::vector<char> seen;
  int used = 0;
  for (size_t v = 1; v < colour.size(); ++v) {
    int c = colour[v];
    if (c <= 0) continue;
    if (static_cast<size_t>(c) >= seen.size()) seen.resize(c + 1, 0);
    if (!seen[c]) {
      seen[c] = 1;
      ++used;
    }
  }
  return used;
}

bool is_square_free(std::span<const int> word) {
  int L = static_cast<int>(word.size());
  for (int s = 0; s < L; ++s)
    for (int m = 1; s + 2 * m <= L; ++m) {
      bool square = true;
      for (int i = 0; i < m && square; ++i)
        if (word[s + i] != word[s + m + i]) square = false;
      if (square) return false;
    }
  return true;
}

namespace {

void check_complete_colouring(const Graph& g, const Colouring& c) {
  if (c.colour.size() != static_cast<size_t>(g.n) + 1)
    fail(errc::colouring_incomplete, "colour vector must have one entry per vertex");
  for (int v = 1; v <= g.n; ++v) {
    if (c.colour[v] == 0)
      fail(errc::colouring_incomplete, "vertex " + std::to_string(v) + " has no colour");
    if (c.colour[v] < 0 || c.colour[v] > c.k)
      fail(errc::out_of_range,
           "colour of vertex " + std::to_string(v) + " outside 1.." + std::to_string(c.k));
  }
}

// Depth-first scan over simple paths, checking each new suffix window for a
// repeated block. `allowed` restricts the scan to an induced subgraph.
struct PathScan {
  const std::vector<std::vector<int>>& adj;
  const std::vector<int>& colour;
  const std::vector<char>& allowed;
  std::vector<char> on_path;
  std::vector<int> path;   // vertices
  std::vector<int> word;   // their colours
  std::vector<int> hit;    // witness path once found

  PathScan(const std::vector<std::vector<int>>& a, const std::vector<int>& c,
           const std::vector<char>& al)
      : adj(a), colour(c), allowed(al), on_path(adj.size(), 0) {}

  bool suffix_square() {
    int L = static_cast<int>(word.size());
    for (int m = 1; 2 * m <= L; ++m) {
      int s = L - 2 * m;
      bool square = true;
      for (int i = 0; i < m && square; ++i)
        if (word[s + i] != word[s + m + i]) square = false;
      if (square) {
        hit.assign(path.begin() + s, path.end());
        return true;
      }
    }
    return false;
  }

  bool dfs(int v) {
    path.push_back(v);
    word.push_back(colour[v]);
    on_path[v] = 1;
    bool found = suffix_square();
    if (!found)
      for (int u : adj[v]) {
        if (!allowed[u] || on_path[u]) continue;
        if (dfs(u)) {
          found = true;
          break;
        }
      }
    on_path[v] = 0;
    path.pop_back();
    word.pop_back();
    return found;
  }
};

std::optional<RepetitionWitness> scan_for_square(const Graph& g, const std::vector<int>& colour,
                                                 const std::vector<char>& allowed) {
  auto adj = adjacency(g);
  PathScan scan(adj, colour, allowed);
  for (int s = 1; s <= g.n; ++s) {
    if (!allowed[s]) continue;
    if (scan.dfs(s)) return RepetitionWitness{scan.hit};
  }
  return std::nullopt;
}

}  // namespace

std::optional<RepetitionWitness> find_repetition(const Graph& g, const Colouring& c) {
  check_complete_colouring(g, c);
  std::vector<char> allowed(g.n + 1, 1);
  allowed[0] = 0;
  return scan_for_square(g, c.colour, allowed);
}

bool is_thue_colouring(const Graph& g, const Colouring& c) {
  return !find_repetition(g, c).has_value();
}

namespace {

// Test whether colouring vertex v completed a path whose colour word holds a
// square. Only paths through v matter: the invariant is that the previously
// coloured subgraph was already square-free. Rays are grown from v to both
// sides over coloured vertices; the two sides stay vertex-disjoint. Squares
// ending at v are caught while the left ray grows, squares extending past v
// while the right ray grows, so each candidate window is examined once per
// ray pair.
struct SquareProbe {
  const std::vector<std::uint64_t>& adj;  // 0-based bit adjacency
  const std::vector<int>& colour;         // 0-based, 0 = uncoloured
  Budget& budget;
  std::uint64_t coloured = 0;
  std::uint64_t used = 0;
  std::vector<int> left;   // left[0] = v, then outward
  std::vector<int> right;  // right[0] = v, then outward

  SquareProbe(const std::vector<std::uint64_t>& a, const std::vector<int>& c, Budget& b)
      : adj(a), colour(c), budget(b) {}

  int colour_at(int i) const {
    int a = static_cast<int>(left.size()) - 1;
    if (i < a) return colour[left[a - i]];
    if (i == a) return colour[left[0]];
    return colour[right[i - a]];
  }

  // combined word is left reversed, then v, then right; v sits at index a
  bool window_is_square(int s, int m) const {
    for (int i = 0; i < m; ++i)
      if (colour_at(s + i) != colour_at(s + m + i)) return false;
    return true;
  }

  bool right_tip_square() const {
    int a = static_cast<int>(left.size()) - 1;
    int last = a + static_cast<int>(right.size()) - 1;
    for (int m = 1; 2 * m <= last + 1; ++m) {
      int s = last - 2 * m + 1;
      if (s > a) continue;  // window must cover v
      if (window_is_square(s, m)) return true;
    }
    return false;
  }

  bool dfs_right() {
    int tip = right.back();
    for (std::uint64_t cand = adj[tip] & coloured & ~used; cand; cand &= cand - 1) {
      int u = std::countr_zero(cand);
      budget.tick();
      right.push_back(u);
      used |= bit_of(u);
      bool found = right_tip_square() || dfs_right();
      used &= ~bit_of(u);
      right.pop_back();
      if (found) return true;
    }
    return false;
  }

  bool dfs_left() {
    int a = static_cast<int>(left.size()) - 1;
    if ((a + 1) % 2 == 0 && window_is_square(0, (a + 1) / 2)) return true;
    right.assign(1, left[0]);
    if (dfs_right()) return true;
    int tip = left.back();
    for (std::uint64_t cand = adj[tip] & coloured & ~used; cand; cand &= cand - 1) {
      int u = std::countr_zero(cand);
      budget.tick();
      left.push_back(u);
      used |= bit_of(u);
      bool found = dfs_left();
      used &= ~bit_of(u);
      left.pop_back();
      if (found) return true;
    }
    return false;
  }

  bool creates_square(int v, std::uint64_t coloured_mask) {
    coloured = coloured_mask;
    used = bit_of(v);
    left.assign(1, v);
    return dfs_left();
  }
};

std::vector<std::uint64_t> bit_adjacency(const Graph& g) {
  if (g.n > kHardVertexCap) fail(errc::graph_too_large, "graph exceeds solver vertex cap");
  std::vector<std::uint64_t> adj(g.n, 0);
  for (const Edge& e : g.edges) {
    adj[e.u - 1] |= bit_of(e.v - 1);
    adj[e.v - 1] |= bit_of(e.u - 1);
  }
  return adj;
}

// Backtracking decision search for one connected component. Vertices are
// assigned in order of decreasing degree (ties by id); a fresh colour may be
// used only as the next unused one, which fixes one representative per
// renaming class and makes the witness deterministic.
struct ComponentSearch {
  int n;
  std::vector<std::uint64_t> adj;
  std::vector<int> order;
  std::vector<int> colour;  // 0-based
  SquareProbe probe;
  std::uint64_t coloured = 0;
  int k = 0;

  ComponentSearch(const Graph& comp, Budget& budget)
      : n(comp.n), adj(bit_adjacency(comp)), colour(comp.n, 0), probe(adj, colour, budget) {
    auto deg = degrees(comp);
    order.resize(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg[a + 1] > deg[b + 1]; });
  }

  bool assign(int t, int max_used) {
    if (t == n) return true;
    int v = order[t];
    int cmax = std::min(k, max_used + 1);
    for (int c = 1; c <= cmax; ++c) {
      probe.budget.tick();
      bool clash = false;
      for (std::uint64_t w = adj[v] & coloured; w; w &= w - 1)
        if (colour[std::countr_zero(w)] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      colour[v] = c;
      coloured |= bit_of(v);
      bool ok = !probe.creates_square(v, coloured) && assign(t + 1, std::max(max_used, c));
      if (ok) return true;
      coloured &= ~bit_of(v);
      colour[v] = 0;
    }
    return false;
  }

  std::optional<std::vector<int>> try_k(int colours) {
    k = colours;
    std::fill(colour.begin(), colour.end(), 0);
    coloured = 0;
    if (!assign(0, 0)) return std::nullopt;
    return colour;
  }
};

int component_lower_bound(const Graph& comp) {
  if (comp.edges.empty()) return 1;
  int lb = 2;
  bool star = comp.size() == comp.n - 1 && max_degree(comp) == comp.n - 1;
  if (has_cycle(comp) || !star) lb = 3;
  return std::max(lb, clique_number(comp));
}

struct ComponentAnswer {
  int pi;
  std::vector<int> colour;  // 0-based
};

ComponentAnswer solve_component(const Graph& comp, Budget& budget) {
  ComponentSearch search(comp, budget);
  for (int k = component_lower_bound(comp); k <= comp.n; ++k)
    if (auto got = search.try_k(k)) return {k, *got};
  fail(errc::internal, "no colouring found although a rainbow always works");
}

}  // namespace

PiResult thue_number(const Graph& g, const SolveLimits& limits) {
  if (g.n > limits.max_n)
    fail(errc::graph_too_large, "order " + std::to_string(g.n) + " exceeds limit " +
                                    std::to_string(limits.max_n));
  Budget budget{0, limits.node_budget};
  PiResult out;
  out.witness.colour.assign(g.n + 1, 0);
  for (const Component& c : components(g)) {
    ComponentAnswer ans = solve_component(c.graph, budget);
    out.pi = std::max(out.pi, ans.pi);
    for (int i = 0; i < c.graph.n; ++i) out.witness.colour[c.original_ids[i]] = ans.colour[i];
  }
  out.witness.k = out.pi;
  out.steps = budget.used;
  return out;
}

PiResult verified_thue_number(const Graph& g, const SolveLimits& limits) {
  PiResult r = thue_number(g, limits);
  if (find_repetition(g, r.witness))
    fail(errc::internal, "solver witness fails the independent square check");
  if (r.witness.colours_used() != r.pi)
    fail(errc::internal, "solver witness does not use exactly pi colours");
  return r;
}

std::optional<Colouring> thue_decision(const Graph& g, int k, const SolveLimits& limits) {
  if (k < 1) fail(errc::out_of_range, "colour count must be positive");
  if (g.n > limits.max_n)
    fail(errc::graph_too_large, "order " + std::to_string(g.n) + " exceeds limit " +
                                    std::to_string(limits.max_n));
  Budget budget{0, limits.node_budget};
  Colouring out;
  out.k = k;
  out.colour.assign(g.n + 1, 0);
  for (const Component& c : components(g)) {
    ComponentSearch search(c.graph, budget);
    if (component_lower_bound(c.graph) > k) return std::nullopt;
    auto got = search.try_k(std::min(k, c.graph.n));
    if (!got) return std::nullopt;
    for (int i = 0; i < c.graph.n; ++i) out.colour[c.original_ids[i]] = (*got)[i];
  }
  return out;
}

namespace {

// Reference search, deliberately plain: vertices in id order, all k colours
// at every vertex, partial assignments validated by the path-scanning
// checker on the induced prefix. Shares nothing with the tuned solver.
struct OracleSearch {
  const Graph& g;
  int k;
  std::vector<int> colour;
  std::vector<char> allowed;

  OracleSearch(const Graph& graph, int colours)
      : g(graph), k(colours), colour(graph.n + 1, 0), allowed(graph.n + 1, 0) {}

  bool attempt(int t) {
    if (t > g.n) return true;
    allowed[t] = 1;
    for (int c = 1; c <= k; ++c) {
      colour[t] = c;
      if (!scan_for_square(g, colour, allowed) && attempt(t + 1)) return true;
    }
    colour[t] = 0;
    allowed[t] = 0;
    return false;
  }
};

}  // namespace

int thue_number_oracle(const Graph& g, int max_n) {
  if (g.n > max_n)
    fail(errc::graph_too_large, "reference search limited to order " + std::to_string(max_n));
  for (int k = 1; k <= g.n; ++k) {
    OracleSearch search(g, k);
    if (search.attempt(1)) return k;
  }
  fail(errc::internal, "reference search failed to find a rainbow colouring");
}

void enumerate_thue_colourings(const Graph& g, int k, bool canonical,
                               const std::function<bool(const Colouring&)>& visit,
                               const SolveLimits& limits) {
  if (g.n > limits.enum_max_n)
    fail(errc::graph_too_large, "enumeration limited to order " + std::to_string(limits.enum_max_n));
  if (k < 1 || k > g.n) fail(errc::out_of_range, "colour count outside 1..n");
  Budget budget{0, limits.node_budget};
  auto adj = bit_adjacency(g);
  std::vector<int> colour(g.n, 0);
  SquareProbe probe(adj, colour, budget);
  std::uint64_t coloured = 0;
  bool stop = false;

  // id-order assignment; with `canonical` a new colour may only be the next
  // unused one, giving exactly one representative per colour renaming class
  auto rec = [&](auto&& self, int v, int max_used) -> void {
    if (stop) return;
    if (v == g.n) {
      Colouring c;
      c.k = k;
      c.colour.assign(g.n + 1, 0);
      for (int i = 0; i < g.n; ++i) c.colour[i + 1] = colour[i];
      if (!visit(c)) stop = true;
      return;
    }
    int cmax = canonical ? std::min(k, max_used + 1) : k;
    for (int c = 1; c <= cmax && !stop; ++c) {
      budget.tick();
      bool clash = false;
      for (std::uint64_t w = adj[v] & coloured; w; w &= w - 1)
        if (colour[std::countr_zero(w)] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      colour[v] = c;
      coloured |= bit_of(v);
      if (!probe.creates_square(v, coloured)) self(self, v + 1, std::max(max_used, c));
      coloured &= ~bit_of(v);
      colour[v] = 0;
    }
  };
  rec(rec, 0, 0);
}

namespace {

struct CliqueSearch {
  const std::vector<std::uint64_t>& adj;
  int best = 0;

  void grow(int size, std::uint64_t cand, std::uint64_t done) {
    if (size + std::popcount(cand) <= best) return;
    if (!cand && !done) {
      best = std::max(best, size);
      return;
    }
    // pivot on the candidate covering most of cand
    std::uint64_t both = cand | done;
    int pivot = -1, cover = -1;
    for (std::uint64_t w = both; w; w &= w - 1) {
      int u = std::countr_zero(w);
      int c = std::popcount(cand & adj[u]);
      if (c > cover) {
        cover = c;
        pivot = u;
      }
    }
    std::uint64_t ext = pivot < 0 ? cand : cand & ~adj[pivot];
    for (std::uint64_t w = ext; w; w &= w - 1) {
      int u = std::countr_zero(w);
      std::uint64_t ub = bit_of(u);
      grow(size + 1, cand & adj[u], done & adj[u]);
      cand &= ~ub;
      done |= ub;
    }
  }
};

}  // namespace

int clique_number(const Graph& g) {
  auto adj = bit_adjacency(g);
  CliqueSearch search{adj};
  std::uint64_t all = g.n == 64 ? ~std::uint64_t{0} : (bit_of(g.n) - 1);
  search.grow(0, all, 0);
  return search.best;
}

bool is_hamiltonian(const Graph& g) {
  if (g.n < 3) return false;
  if (g.n > 20) fail(errc::graph_too_large, "cycle search limited to small graphs");
  if (min_degree(g) < 2 || !is_connected(g)) return false;
  auto adj = bit_adjacency(g);
  std::uint64_t all = bit_of(g.n) - 1;
  // fix vertex 0 as the cycle start
  auto rec = [&](auto&& self, int v, std::uint64_t visited) -> bool {
    if (visited == all) return (adj[v] & bit_of(0)) != 0;
    for (std::uint64_t w = adj[v] & ~visited; w; w &= w - 1) {
      int u = std::countr_zero(w);
      if (self(self, u, visited | bit_of(u))) return true;
    }
    return false;
  };
  return rec(rec, 0, bit_of(0));
}

}  // namespace thuelab
