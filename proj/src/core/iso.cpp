#include "core/iso.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <unordered_set>

namespace thuelab {

namespace {

constexpr int kAtlasMax = 7;

// pair index tables for masks over unordered vertex pairs, 0-based vertices
struct PairIndex {
  int n;
  int idx[kAtlasMax][kAtlasMax] = {};

  explicit PairIndex(int order) : n(order) {
    int next = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        idx[i][j] = next;
        idx[j][i] = next;
        ++next;
      }
  }
};

Graph graph_of(std::uint32_t mask, int n, const PairIndex& pi) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (mask & (std::uint32_t{1} << pi.idx[i][j])) pairs.emplace_back(i + 1, j + 1);
  return make_graph(n, pairs);
}

const std::vector<std::vector<int>>& permutations_of(int n) {
  static std::vector<std::vector<std::vector<int>>> cache(kAtlasMax + 1);
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (slot.empty()) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do slot.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  return slot;
}

// minimum relabelled edge mask over every vertex permutation; the or-chain
// only grows, so a partial image already above the best can be abandoned
std::uint32_t canonical_mask(std::uint32_t mask, int n, const PairIndex& pi) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (mask & (std::uint32_t{1} << pi.idx[i][j])) edges.emplace_back(i, j);
  std::uint32_t best = ~std::uint32_t{0};
  for (const auto& p : permutations_of(n)) {
    std::uint32_t img = 0;
    bool give_up = false;
    for (const auto& [i, j] : edges) {
      img |= std::uint32_t{1} << pi.idx[p[i]][p[j]];
      if (img > best) {
        give_up = true;
        break;
      }
    }
    if (!give_up && img < best) best = img;
  }
  return best;
}

}  // namespace

const std::vector<Graph>& graph_atlas(int n) {
  if (n < 1 || n > kAtlasMax)
    fail(errc::out_of_range, "atlas covers orders 1.." + std::to_string(kAtlasMax));
  static std::vector<std::vector<Graph>> cache(kAtlasMax + 1);
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (cache[1].empty()) cache[1] = {make_graph(1, {})};
  for (int order = 2; order <= n; ++order) {
    if (!cache[order].empty()) continue;
    PairIndex pi(order);
    std::unordered_set<std::uint32_t> seen;
    int newv = order - 1;  // 0-based id of the vertex being attached
    for (const Graph& g : cache[order - 1]) {
      std::uint32_t base = 0;
      for (const Edge& e : g.edges) base |= std::uint32_t{1} << pi.idx[e.u - 1][e.v - 1];
      for (std::uint32_t nb = 0; nb < (std::uint32_t{1} << (order - 1)); ++nb) {
        std::uint32_t mask = base;
        for (int i = 0; i < order - 1; ++i)
          if (nb & (std::uint32_t{1} << i)) mask |= std::uint32_t{1} << pi.idx[i][newv];
        seen.insert(canonical_mask(mask, order, pi));
      }
    }
    std::vector<std::uint32_t> masks(seen.begin(), seen.end());
    std::sort(masks.begin(), masks.end());
    for (std::uint32_t m : masks) cache[order].push_back(graph_of(m, order, pi));
  }
  return cache[n];
}

std::vector<Graph> connected_graph_atlas(int n) {
  std::vector<Graph> out;
  for (const Graph& g : graph_atlas(n))
    if (is_connected(g)) out.push_back(g);
  return out;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.n > 10 || b.n > 10)
    fail(errc::graph_too_large, "permutation search limited to order 10");
  if (a.n != b.n || a.size() != b.size()) return false;
  auto da = degrees(a), db = degrees(b);
  {
    std::vector<int> sa(da.begin() + 1, da.end()), sb(db.begin() + 1, db.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  int n = a.n;
  std::vector<int> map(n + 1, 0);
  std::vector<char> used(n + 1, 0);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v > n) return true;
    for (int w = 1; w <= n; ++w) {
      if (used[w] || da[v] != db[w]) continue;
      bool ok = true;
      for (int u = 1; u < v && ok; ++u)
        if (a.has_edge(u, v) != b.has_edge(map[u], w)) ok = false;
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (self(self, v + 1)) return true;
      used[w] = 0;
      map[v] = 0;
    }
    return false;
  };
  return rec(rec, 1);
}

bool is_path_graph(const Graph& g) {
  if (!is_connected(g)) return false;
  if (g.n == 1) return g.edges.empty();
  if (g.size() != g.n - 1) return false;
  auto deg = degrees(g);
  int ones = 0;
  for (int v = 1; v <= g.n; ++v) {
    if (deg[v] > 2) return false;
    if (deg[v] == 1) ++ones;
  }
  return ones == 2;
}

bool is_cycle_graph(const Graph& g) {
  if (g.n < 3 || !is_connected(g)) return false;
  auto deg = degrees(g);
  for (int v = 1; v <= g.n; ++v)
    if (deg[v] != 2) return false;
  return true;
}

}  // namespace thuelab
