#include "core/generators.hpp"

#include <charconv>
#include <random>
#include <string>

#include "core/jaco.hpp"

namespace thuelab {

Graph path_graph(int n) {
  if (n < 1) fail(errc::size_too_small, "path needs at least one vertex");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) pairs.emplace_back(i, i + 1);
  return make_graph(n, pairs);
}

Graph cycle_graph(int n) {
  if (n < 3) fail(errc::size_too_small, "cycle needs at least three vertices");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) pairs.emplace_back(i, i + 1);
  pairs.emplace_back(n, 1);
  return make_graph(n, pairs);
}

Graph complete_graph(int n) {
  if (n < 1) fail(errc::size_too_small, "complete graph needs at least one vertex");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  return make_graph(n, pairs);
}

Graph star_graph(int leaves) {
  if (leaves < 1) fail(errc::size_too_small, "star needs at least one leaf");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 2; i <= leaves + 1; ++i) pairs.emplace_back(1, i);
  return make_graph(leaves + 1, pairs);
}

Graph edgeless_graph(int n) {
  if (n < 1) fail(errc::size_too_small, "graph needs at least one vertex");
  return make_graph(n, {});
}

Graph caterpillar_graph(const std::vector<int>& legs) {
  if (legs.empty()) fail(errc::size_too_small, "caterpillar needs a spine vertex");
  int spine = static_cast<int>(legs.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < spine; ++i) pairs.emplace_back(i, i + 1);
  int next = spine + 1;
  for (int i = 0; i < spine; ++i) {
    if (legs[i] < 0) fail(errc::out_of_range, "negative leg count");
    for (int l = 0; l < legs[i]; ++l) pairs.emplace_back(i + 1, next++);
  }
  return make_graph(next - 1, pairs);
}

namespace {

// mt19937_64 output is specified by the standard; reducing with % keeps the
// generated graphs identical across platforms (bias is irrelevant here).
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

Graph random_connected_graph(int n, int m, std::uint64_t seed) {
  if (n < 1) fail(errc::size_too_small, "graph needs at least one vertex");
  int max_m = n * (n - 1) / 2;
  if (m < n - 1 || m > max_m)
    fail(errc::out_of_range, "edge count must lie in " + std::to_string(n - 1) + ".." +
                                 std::to_string(max_m) + " for a connected graph");
  std::mt19937_64 rng(seed);
  Graph g = edgeless_graph(n);
  for (int v = 2; v <= n; ++v)
    g = add_edge(g, v, static_cast<int>(draw(rng, v - 1)) + 1);
  while (g.size() < m) {
    int u = static_cast<int>(draw(rng, n)) + 1;
    int v = static_cast<int>(draw(rng, n)) + 1;
    if (u == v || g.has_edge(u, v)) continue;
    g = add_edge(g, u, v);
  }
  return g;
}

namespace {

std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    std::string_view tok = s.substr(pos, comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      fail(errc::parse_error, "bad integer '" + std::string(tok) + "' in generator spec");
    out.push_back(v);
    if (comma == s.size()) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Graph generate_from_spec(std::string_view spec, std::uint64_t seed) {
  size_t colon = spec.find(':');
  if (colon == std::string_view::npos || colon + 1 >= spec.size())
    fail(errc::parse_error, "generator spec must look like kind:args");
  std::string kind(spec.substr(0, colon));
  std::vector<int> args = parse_int_list(spec.substr(colon + 1));

  auto want = [&](size_t k) {
    if (args.size() != k)
      fail(errc::parse_error, kind + " takes " + std::to_string(k) + " argument(s)");
  };
  if (kind == "path") { want(1); return path_graph(args[0]); }
  if (kind == "cycle") { want(1); return cycle_graph(args[0]); }
  if (kind == "complete") { want(1); return complete_graph(args[0]); }
  if (kind == "star") { want(1); return star_graph(args[0]); }
  if (kind == "edgeless") { want(1); return edgeless_graph(args[0]); }
  if (kind == "caterpillar") return caterpillar_graph(args);
  if (kind == "random") { want(2); return random_connected_graph(args[0], args[1], seed); }
  if (kind == "jaco") {
    want(3);
    return build_jaco({args[0], args[1], args[2]}).underlying;
  }
  fail(errc::parse_error, "unknown generator kind '" + kind + "'");
}

}  // namespace thuelab
