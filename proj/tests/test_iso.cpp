#include <vector>

#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/iso.hpp"
#include "helpers.hpp"

using namespace thuelab;
using test_util::graph_of;

TEST_SUITE("iso") {

TEST_CASE("isomorphism basics") {
  Graph p4 = path_graph(4);
  Graph relabelled = graph_of(4, {{2, 4}, {4, 1}, {1, 3}});  // 2-4-1-3 path
  CHECK(is_isomorphic(p4, relabelled));
  CHECK_FALSE(is_isomorphic(p4, star_graph(3)));        // same n, eps; degree split differs
  CHECK_FALSE(is_isomorphic(p4, cycle_graph(4)));       // eps differs
  CHECK_FALSE(is_isomorphic(p4, path_graph(5)));        // n differs
  CHECK(is_isomorphic(cycle_graph(6), line_graph(cycle_graph(6))));
  // Same degree multiset, not isomorphic: C_6 vs two triangles.
  Graph two_triangles = disjoint_union(cycle_graph(3), cycle_graph(3));
  CHECK_FALSE(is_isomorphic(cycle_graph(6), two_triangles));
  CHECK_FAILS_WITH(is_isomorphic(path_graph(11), path_graph(11)), errc::graph_too_large);
}

TEST_CASE("path and cycle recognizers") {
  for (int n = 1; n <= 30; ++n) CHECK(is_path_graph(path_graph(n)));
  for (int n = 3; n <= 30; ++n) CHECK(is_cycle_graph(cycle_graph(n)));
  CHECK_FALSE(is_path_graph(cycle_graph(5)));
  CHECK_FALSE(is_cycle_graph(path_graph(5)));
  CHECK_FALSE(is_path_graph(star_graph(3)));
  CHECK_FALSE(is_path_graph(disjoint_union(path_graph(2), path_graph(2))));
  CHECK_FALSE(is_cycle_graph(disjoint_union(cycle_graph(3), cycle_graph(3))));
  CHECK_FALSE(is_cycle_graph(graph_of(3, {})));
  // Paths found under relabelling too.
  CHECK(is_path_graph(graph_of(4, {{2, 4}, {4, 1}, {1, 3}})));
}

TEST_CASE("atlas counts match the published census") {
  const std::vector<int> all = {1, 1, 2, 4, 11, 34, 156, 1044};       // index = order
  const std::vector<int> connected = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(static_cast<int>(graph_atlas(n).size()) == all[static_cast<std::size_t>(n)]);
    CHECK(static_cast<int>(connected_graph_atlas(n).size()) ==
          connected[static_cast<std::size_t>(n)]);
  }
  CHECK_FAILS_WITH(graph_atlas(8), errc::out_of_range);
}

TEST_CASE("atlas entries are pairwise non-isomorphic at small orders") {
  for (int n = 1; n <= 5; ++n) {
    const auto& atlas = graph_atlas(n);
    for (std::size_t i = 0; i < atlas.size(); ++i)
      for (std::size_t j = i + 1; j < atlas.size(); ++j)
        CHECK_FALSE(is_isomorphic(atlas[i], atlas[j]));
  }
}

TEST_CASE("every 5-vertex graph appears in the atlas") {
  Graph full = complete_graph(5);
  int eps = full.size();
  const auto& atlas = graph_atlas(5);
  for (int mask = 0; mask < (1 << eps); ++mask) {
    std::vector<Edge> keep;
    for (int i = 0; i < eps; ++i)
      if (mask & (1 << i)) keep.push_back(full.edges[static_cast<std::size_t>(i)]);
    Graph g = induced_subgraph_edges(full, keep);
    int hits = 0;
    for (const Graph& a : atlas)
      if (is_isomorphic(g, a)) ++hits;
    CHECK(hits == 1);
  }
}

TEST_CASE("line graphs of paths and cycles") {
  for (int n = 3; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(is_isomorphic(line_graph(path_graph(n)), path_graph(n - 1)));
    CHECK(is_isomorphic(line_graph(cycle_graph(n)), cycle_graph(n)));
  }
  for (int n = 11; n <= 12; ++n) {  // too large for permutation search
    CAPTURE(n);
    CHECK(is_path_graph(line_graph(path_graph(n))));
    CHECK(line_graph(path_graph(n)).order() == n - 1);
    CHECK(is_cycle_graph(line_graph(cycle_graph(n))));
    CHECK(line_graph(cycle_graph(n)).order() == n);
  }
}

}  // TEST_SUITE
