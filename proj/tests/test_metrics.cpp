#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/iso.hpp"
#include "core/metrics.hpp"
#include "core/thue.hpp"
#include "helpers.hpp"

using namespace thuelab;
using test_util::graph_of;

namespace {

Colouring colouring_of(int k, std::vector<int> values) {
  Colouring c;
  c.k = k;
  c.colour.assign(1, 0);
  c.colour.insert(c.colour.end(), values.begin(), values.end());
  return c;
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("per-colour distance statistics of one colouring") {
  Graph p4 = path_graph(4);
  ColourMetrics m = colour_metrics(p4, colouring_of(3, {1, 2, 1, 3}));
  REQUIRE(m.pi_d.size() == 4);  // entry 0 unused
  CHECK(m.pi_d[1] == 2);        // the two vertices coloured 1 sit at distance 2
  CHECK(m.pi_D[1] == 2);
  CHECK(m.pi_d[2] == 0);  // singleton classes default to 0
  CHECK(m.pi_D[2] == 0);
  CHECK(m.pi_d[3] == 0);
  CHECK(m.pi_D[3] == 0);

  ColourMetrics stretched = colour_metrics(p4, colouring_of(3, {1, 2, 3, 1}));
  CHECK(stretched.pi_d[1] == 3);
  CHECK(stretched.pi_D[1] == 3);
}

TEST_CASE("colouring statistics validate their input") {
  Graph p4 = path_graph(4);
  CHECK_FAILS_WITH(colour_metrics(p4, colouring_of(2, {1, 2, 1, 2})),
                   errc::not_a_thue_colouring);
  CHECK_FAILS_WITH(colour_metrics(p4, colouring_of(4, {1, 2, 3, 4})), errc::not_minimum);
  CHECK_FAILS_WITH(colour_metrics(p4, colouring_of(3, {1, 2, 0, 3})),
                   errc::colouring_incomplete);
}

TEST_CASE("radius and reach of the four-path") {
  RadiusReach r = radius_and_reach(path_graph(4));
  CHECK(r.pi == 3);
  CHECK(r.diam == 3);
  CHECK(r.pi_r == 2);
  CHECK(r.pi_R == 3);
  // Witnesses achieve the reported statistics.
  ColourMetrics rad = colour_metrics(path_graph(4), r.radius_witness);
  int best = 0;
  for (std::size_t c = 1; c < rad.pi_d.size(); ++c)
    if (rad.pi_d[c] > 0 && (best == 0 || rad.pi_d[c] < best)) best = rad.pi_d[c];
  CHECK(best == 2);
  ColourMetrics reach = colour_metrics(path_graph(4), r.reach_witness);
  int widest = 0;
  for (std::size_t c = 1; c < reach.pi_D.size(); ++c)
    if (reach.pi_D[c] > widest) widest = reach.pi_D[c];
  CHECK(widest == 3);
}

TEST_CASE("complete graphs have no same-colour pairs at all") {
  for (int n = 2; n <= 5; ++n) {
    RadiusReach r = radius_and_reach(complete_graph(n));
    CHECK(r.pi == n);
    CHECK(r.pi_r == 0);
    CHECK(r.pi_R == 0);
  }
}

TEST_CASE("paths, cycles, and stars reach the known values") {
  for (int n = 3; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(radius_and_reach(path_graph(n)).pi_R == n - 1);
  }
  for (int n = 4; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(radius_and_reach(cycle_graph(n)).pi_R == n / 2);
  }
  for (int leaves = 2; leaves <= 5; ++leaves) {
    CAPTURE(leaves);
    RadiusReach r = radius_and_reach(star_graph(leaves));
    CHECK(r.pi_r == 2);
    CHECK(r.pi_R == 2);
  }
}

TEST_CASE("disconnected graphs exclude unreachable pairs") {
  Graph two = disjoint_union(path_graph(2), path_graph(2));
  RadiusReach r = radius_and_reach(two);
  CHECK(r.pi == 2);
  CHECK(r.diam == kInfiniteDistance);
  CHECK(r.pi_r == 0);  // every same-colour pair straddles components
  CHECK(r.pi_R == 0);

  Graph mixed = disjoint_union(path_graph(4), path_graph(2));
  RadiusReach rm = radius_and_reach(mixed);
  CHECK(rm.pi == 3);
  CHECK(rm.pi_r == 2);  // realized inside the path component
}

TEST_CASE("statistics are invariant under vertex relabelling") {
  Graph g = graph_of(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});  // C_5 relabelled below
  RadiusReach base = radius_and_reach(g);
  Graph shuffled = graph_of(5, {{3, 5}, {5, 1}, {1, 4}, {4, 2}, {3, 2}});
  REQUIRE(is_isomorphic(g, shuffled));
  RadiusReach moved = radius_and_reach(shuffled);
  CHECK(base.pi_r == moved.pi_r);
  CHECK(base.pi_R == moved.pi_R);
}

TEST_CASE("adding an edge never increases the reach on small graphs") {
  for (int n = 3; n <= 4; ++n)
    for (const Graph& g : connected_graph_atlas(n)) {
      int before = radius_and_reach(g).pi_R;
      for (int u = 1; u <= g.n; ++u)
        for (int v = u + 1; v <= g.n; ++v) {
          if (g.has_edge(u, v)) continue;
          CAPTURE(format_edge_list(g));
          CHECK(radius_and_reach(add_edge(g, u, v)).pi_R <= before);
        }
    }
}

TEST_CASE("enumeration guard rejects oversized graphs") {
  SolveLimits limits;
  limits.enum_max_n = 6;
  CHECK_FAILS_WITH(radius_and_reach(path_graph(7), limits), errc::graph_too_large);
}

TEST_CASE("radius table over the connected atlas") {
  LabelledGraphs items;
  int idx = 0;
  for (const Graph& g : connected_graph_atlas(4)) items.emplace_back("g" + std::to_string(++idx), g);
  Report r = check_radius_theorem(items);
  int ok_col = r.column_index("ok");
  int expected_col = r.column_index("expected");
  REQUIRE(ok_col >= 0);
  REQUIRE(expected_col >= 0);
  for (const auto& row : r.rows) {
    CHECK(row[static_cast<std::size_t>(ok_col)] == "yes");
    bool complete_row = row[static_cast<std::size_t>(expected_col)] == "0";
    CHECK(complete_row == (row[static_cast<std::size_t>(expected_col)] != "2"));
  }
}

TEST_CASE("reach table writes certificates for unequal rows") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "thuelab_reach_test";
  fs::remove_all(dir);
  fs::create_directories(dir);

  LabelledGraphs items = {{"complete4", complete_graph(4)}, {"path4", path_graph(4)}};
  Report r = check_reach_conjecture(items, SolveLimits{}, dir.string());
  int equal_col = r.column_index("equal");
  REQUIRE(equal_col >= 0);
  // rainbow colouring: reach 0, diam 1, so the row differs and names its file
  CHECK(r.rows[0][static_cast<std::size_t>(equal_col)].rfind("no;certificate=", 0) == 0);
  CHECK(r.rows[1][static_cast<std::size_t>(equal_col)] == "yes");

  fs::path cert = dir / "reach_complete4.txt";
  REQUIRE(fs::exists(cert));
  std::ifstream in(cert);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("4 6") != std::string::npos);  // the edge list header
  CHECK_FALSE(fs::exists(dir / "reach_path4.txt"));
  fs::remove_all(dir);
}

}  // TEST_SUITE
