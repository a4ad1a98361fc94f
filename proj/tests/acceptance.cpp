// Acceptance gate: eleven end-to-end checks with frozen expected values.
// Each criterion prints one PASS/FAIL line; a FAIL prints the evidence. The
// checks state what must hold; nothing here adapts expectations to output.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/iso.hpp"
#include "core/jaco.hpp"
#include "core/metrics.hpp"
#include "core/rational.hpp"
#include "core/subdivide.hpp"
#include "core/tau.hpp"
#include "core/thue.hpp"

using namespace thuelab;

namespace {

int g_checks = 0;
int g_failures = 0;

void expect(bool ok, const std::string& what) {
  ++g_checks;
  if (!ok) {
    ++g_failures;
    std::printf("    FAILED: %s\n", what.c_str());
  }
}

template <typename T>
void expect_eq(const T& got, const T& want, const std::string& what) {
  ++g_checks;
  if (!(got == want)) {
    ++g_failures;
    std::printf("    FAILED: %s\n", what.c_str());
  }
}

std::string rat(const Rational& r) { return r.str(); }

// All connected graphs with at most `max_eps` edges, one per isomorphism
// class. Connectivity caps the order at eps+1, so the order-7 atlas is
// exhaustive for eps <= 6.
std::vector<Graph> connected_upto_eps(int max_eps) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_eps + 1; ++n)
    for (const Graph& g : connected_graph_atlas(n))
      if (g.size() >= 1 && g.size() <= max_eps) out.push_back(g);
  return out;
}

bool criterion_1() {
  std::printf("  known values of the minimum square-free colouring count\n");
  expect_eq(thue_number(path_graph(1)).pi, 1, "path 1");
  expect_eq(thue_number(path_graph(2)).pi, 2, "path 2");
  expect_eq(thue_number(path_graph(3)).pi, 2, "path 3");
  for (int n = 4; n <= 12; ++n)
    expect_eq(thue_number(path_graph(n)).pi, 3, "path " + std::to_string(n));
  for (int n : {5, 7, 9, 10})
    expect_eq(thue_number(cycle_graph(n)).pi, 4, "cycle " + std::to_string(n));
  for (int n : {3, 4, 6, 8, 11, 12, 13, 15, 16, 18})
    expect_eq(thue_number(cycle_graph(n)).pi, 3, "cycle " + std::to_string(n));
  expect_eq(thue_number(cycle_graph(14)).pi, 4, "cycle 14 (long tier)");
  expect_eq(thue_number(cycle_graph(17)).pi, 4, "cycle 17 (long tier)");
  for (int n = 1; n <= 7; ++n)
    expect_eq(thue_number(complete_graph(n)).pi, n, "complete " + std::to_string(n));
  return g_failures == 0;
}

bool criterion_2() {
  std::printf("  solver versus independent oracle, exhaustively and randomized\n");
  int graphs = 0;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_graph_atlas(n)) {
      ++graphs;
      int solver = thue_number(g).pi;
      int oracle = thue_number_oracle(g);
      expect(solver == oracle, "atlas mismatch on\n" + format_edge_list(g) + "solver " +
                                   std::to_string(solver) + " oracle " + std::to_string(oracle));
    }
  expect_eq(graphs, 143, "connected atlas size through order 6");
  for (int i = 0; i < 200; ++i) {
    int n = 7 + (i % 2);
    int m = (n - 1) + (i % 4);
    Graph g = random_connected_graph(n, m, 9000 + static_cast<std::uint64_t>(i));
    int solver = thue_number(g).pi;
    int oracle = thue_number_oracle(g);
    expect(solver == oracle, "random mismatch at seed " + std::to_string(9000 + i) + " on\n" +
                                 format_edge_list(g));
  }
  std::printf("    %d atlas graphs and 200 random graphs, zero mismatches required\n", graphs);
  return g_failures == 0;
}

bool criterion_3() {
  std::printf("  nine-cycle deletion average ground truth\n");
  auto res = tau_index(cycle_graph(9));
  expect_eq(rat(res.tau), std::string("23/10"), "minimum value");
  expect_eq(res.sum, 23LL, "witness sum");
  expect_eq(rat(tau_of_order(cycle_graph(9), res.order)), std::string("23/10"),
            "witness order replays to the same value");
  DeletionOrder cyclic;
  for (int i = 1; i < 9; ++i) cyclic.push_back(Edge{i, i + 1});
  cyclic.push_back(Edge{1, 9});
  expect_eq(rat(tau_of_order(cycle_graph(9), cyclic)), std::string("27/10"), "cyclic order");
  return g_failures == 0;
}

bool criterion_4() {
  std::printf("  recurrence versus all-orders reference on every small test graph\n");
  std::vector<Graph> set;
  for (int n = 2; n <= 7; ++n) set.push_back(path_graph(n));
  for (int n = 3; n <= 6; ++n) set.push_back(cycle_graph(n));
  for (int leaves = 1; leaves <= 6; ++leaves) set.push_back(star_graph(leaves));
  set.push_back(complete_graph(3));
  set.push_back(complete_graph(4));
  set.push_back(disjoint_union(path_graph(2), path_graph(3)));
  for (const Graph& g : set) {
    Rational dp = tau_index(g).tau;
    Rational reference = tau_index_oracle(g);
    expect(dp == reference, "mismatch (" + rat(dp) + " vs " + rat(reference) + ") on\n" +
                                format_edge_list(g));
  }
  std::printf("    %zu graphs compared\n", set.size());
  return g_failures == 0;
}

bool criterion_5() {
  std::printf("  closed-form audit tables\n");
  for (int n = 4; n <= 9; ++n)
    expect(tau_index(path_graph(n)).tau == tau_path_closed(n),
           "path closed form at n=" + std::to_string(n));

  for (int n = 3; n <= 5; ++n) {
    Rational dp = tau_index(complete_graph(n)).tau;
    Rational corrected = tau_complete_closed(n, true);
    std::printf("    complete %d: recurrence %s, corrected form %s (%s)\n", n, rat(dp).c_str(),
                rat(corrected).c_str(), dp == corrected ? "equal" : "differ");
  }
  expect(!(tau_index(complete_graph(3)).tau == tau_complete_closed(3, false)),
         "as-printed triangle value must not match (8/3 against a sequence-forced 2)");
  expect_eq(rat(tau_complete_closed(3, false)), std::string("8/3"), "as-printed value");
  expect_eq(rat(tau_index(complete_graph(3)).tau), std::string("2"), "forced value");

  TauLimits limits;
  Report audit = tau_formula_audit(TauFamily::cycle, 4, 9, limits);
  int match_col = audit.column_index("closed_match");
  int perm_col = audit.column_index("perm_match");
  expect(match_col >= 0 && perm_col >= 0, "audit table columns");
  std::map<int, std::string> agreement;
  for (const auto& row : audit.rows) {
    int n = std::stoi(row[1]);
    agreement[n] = row[static_cast<std::size_t>(match_col)];
    const std::string& perm = row[static_cast<std::size_t>(perm_col)];
    expect(perm == "yes" || perm == "skipped",
           "recurrence agrees with the all-orders reference at cycle n=" + std::to_string(n));
    std::printf("    cycle %d: closed_match=%s perm_match=%s\n", n,
                agreement[n].c_str(), perm.c_str());
  }
  expect_eq(agreement[4], std::string("no"), "expected disagreement at n=4");
  expect_eq(agreement[5], std::string("no"), "expected disagreement at n=5");
  expect_eq(rat(tau_index(cycle_graph(4)).tau), std::string("11/5"), "hand value at n=4");
  expect_eq(rat(tau_index(cycle_graph(5)).tau), std::string("7/3"), "hand value at n=5");
  expect_eq(rat(tau_index_oracle(cycle_graph(4))), std::string("11/5"), "reference at n=4");
  expect_eq(rat(tau_index_oracle(cycle_graph(5))), std::string("7/3"), "reference at n=5");
  return g_failures == 0;
}

bool criterion_6() {
  std::printf("  deletion-average bounds over all connected graphs with up to six edges\n");
  std::vector<Graph> all = connected_upto_eps(6);
  Rational three_halves{3, 2};
  Rational best{100, 1};
  int minimizers = 0;
  std::vector<Rational> star_values;
  for (int leaves = 2; leaves <= 6; ++leaves)
    star_values.push_back(tau_index(star_graph(leaves)).tau);

  for (const Graph& g : all) {
    Rational t = tau_index(g).tau;
    if (t < three_halves)
      expect(false, "value below 3/2 on\n" + format_edge_list(g));
    if (t == three_halves) {
      ++minimizers;
      expect(g == path_graph(2), "3/2 attained by a graph other than the single edge");
    }
    if (t < best) best = t;
    bool is_star = g.size() >= 2 && max_degree(g) == g.size() && g.order() == g.size() + 1;
    if (g.size() >= 2 && !is_star)
      for (const Rational& sv : star_values)
        if (!(sv < t))
          expect(false, "star value " + rat(sv) + " not below " + rat(t) + " of\n" +
                            format_edge_list(g));
  }
  expect_eq(minimizers, 1, "exactly one minimizer");
  expect_eq(rat(best), std::string("3/2"), "minimum value");
  std::printf("    %zu graphs checked\n", all.size());
  return g_failures == 0;
}

bool criterion_7() {
  std::printf("  linear construction structure for the m=1 and m=0 families\n");
  expect(build_jaco({1, 0, 5}).underlying ==
             make_graph(5, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}),
         "n=5 member is the five-path plus the chord 3-5, labels included");
  for (int c = 0; c <= 4; ++c)
    for (int n = 1; n <= 16; ++n)
      expect(build_jaco({0, c, n}).underlying == clique_union_shape(c, n),
             "clique union at c=" + std::to_string(c) + " n=" + std::to_string(n));
  Report steps = delta_step_table(1, 20);
  int step_col = steps.column_index("step_in_0_1");
  for (const auto& row : steps.rows)
    expect(row[static_cast<std::size_t>(step_col)] == "yes",
           "max-degree step outside {0,1} at n=" + row[0]);

  SolveLimits limits;
  Report table = degree_bound_table(1, 10, limits);
  int pi_col = table.column_index("pi");
  int delta_col = table.column_index("delta_max");
  for (const auto& row : table.rows) {
    int delta = std::stoi(row[static_cast<std::size_t>(delta_col)]);
    int pi = std::stoi(row[static_cast<std::size_t>(pi_col)]);
    expect(pi >= delta && pi <= delta + 1,
           "degree bound broken at n=" + row[2] + " (delta " + std::to_string(delta) +
               ", pi " + std::to_string(pi) + ")");
  }

  // The table is required to show (delta=3, pi=4) at n=5. Exhaustive search
  // proves pi=3 there: the colouring below is proper and square-free on all
  // simple paths (re-checked by the independent path scanner), and the
  // lexicographic reference search agrees. The required row is therefore
  // impossible to produce without faking output, and this check stays red.
  const auto& n5 = table.rows[4];
  int n5_delta = std::stoi(n5[static_cast<std::size_t>(delta_col)]);
  int n5_pi = std::stoi(n5[static_cast<std::size_t>(pi_col)]);
  Graph j5 = build_jaco({1, 0, 5}).underlying;
  Colouring witness;
  witness.k = 3;
  witness.colour = {0, 3, 2, 1, 2, 3};
  std::printf("    n=5 row: delta=%d pi=%d; required reading: delta=3 pi=4\n", n5_delta, n5_pi);
  std::printf("    three-colour witness (3,2,1,2,3): %s; reference search gives %d\n",
              find_repetition(j5, witness) ? "REJECTED" : "verified square-free",
              thue_number_oracle(j5));
  expect(n5_delta == 3, "n=5 max degree");
  expect(n5_pi == 4,
         "n=5 row must read pi=4, but exhaustive search proves pi=3 (witness above)");
  return g_failures == 0;
}

bool criterion_8() {
  std::printf("  conjecture sweeps complete cleanly and certify violations\n");
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "thuelab_acceptance_certs";
  fs::remove_all(dir);
  fs::create_directories(dir);

  SolveLimits limits;
  Report sweep = conjecture_table(2, 3, 1, 2, 1, 8, limits, dir.string());
  expect_eq(static_cast<int>(sweep.rows.size()), 2 * 2 * 8, "sweep row count");
  int flag_col = sweep.column_index("bound_flags");
  int n_col = sweep.column_index("n");
  for (const auto& row : sweep.rows) {
    const std::string& flags = row[static_cast<std::size_t>(flag_col)];
    expect(flags.find("timeout") == std::string::npos, "no timeouts in the sweep");
    if (row[static_cast<std::size_t>(n_col)] == "1")
      expect(flags.find("vacuous/violation") != std::string::npos, "order-1 row is flagged");
    else if (flags.find("holds=no") != std::string::npos)
      expect(flags.find("certificate=") != std::string::npos,
             "violating row carries a certificate file");
  }

  LabelledGraphs items;
  int idx = 0;
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : connected_graph_atlas(n))
      if (!is_complete(g)) items.emplace_back("n" + std::to_string(n) + "_g" +
                                                  std::to_string(++idx),
                                              g);
  Report reach = check_reach_conjecture(items, limits, dir.string());
  expect_eq(reach.rows.size(), items.size(), "one row per non-complete connected graph");
  int equal_col = reach.column_index("equal");
  int unequal = 0;
  for (const auto& row : reach.rows) {
    const std::string& value = row[static_cast<std::size_t>(equal_col)];
    bool differs = value.rfind("no;certificate=", 0) == 0;
    expect(value == "yes" || differs, "reach sweep rows never time out");
    if (differs) ++unequal;
  }
  std::printf("    %zu reach rows, %d differing (each certified)\n", items.size(), unequal);
  fs::remove_all(dir);
  return g_failures == 0;
}

bool criterion_9() {
  std::printf("  distance metrics over minimum colourings\n");
  RadiusReach p4 = radius_and_reach(path_graph(4));
  expect_eq(p4.pi_r, 2, "four-path radius");
  expect_eq(p4.pi_R, 3, "four-path reach");
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : connected_graph_atlas(n)) {
      RadiusReach r = radius_and_reach(g);
      if (is_complete(g)) {
        expect(r.pi_r == 0 && r.pi_R == 0,
               "complete graph has no same-colour pair:\n" + format_edge_list(g));
      } else {
        expect(r.pi_r == 2, "radius 2 on connected non-complete\n" + format_edge_list(g));
      }
    }
  for (int n = 3; n <= 8; ++n)
    expect_eq(radius_and_reach(path_graph(n)).pi_R, n - 1, "path reach at n=" + std::to_string(n));
  for (int n = 4; n <= 8; ++n)
    expect_eq(radius_and_reach(cycle_graph(n)).pi_R, n / 2, "cycle reach at n=" + std::to_string(n));
  for (int leaves = 2; leaves <= 5; ++leaves)
    expect_eq(radius_and_reach(star_graph(leaves)).pi_R, 2,
              "star reach with " + std::to_string(leaves) + " leaves");
  return g_failures == 0;
}

bool criterion_10() {
  std::printf("  insertion constructions stay within their colour bounds\n");
  SolveLimits wide;
  wide.max_n = 40;
  auto holds_within = [&](const Graph& result, int bound, const std::string& what) {
    auto witness = thue_decision(result, bound, wide);
    if (!witness) {
      expect(false, what + ": no colouring with " + std::to_string(bound) + " colours");
      return;
    }
    expect(!find_repetition(result, *witness).has_value(), what + ": witness re-check");
  };

  for (const Graph& g : {complete_graph(3), complete_graph(4), cycle_graph(5)}) {
    int pi = thue_number(g).pi;
    for (int k = 3; k <= 4; ++k)
      holds_within(subdivide_k(g, k), pi + 1,
                   "path insertion k=" + std::to_string(k) + " into " + format_edge_list(g));
  }
  for (const Graph& g : {path_graph(2), complete_graph(3)}) {
    int pi = thue_number(g).pi;
    for (int m : {5, 7})
      holds_within(subdivide_cycle(g, m), pi + 2, "cycle insertion m=" + std::to_string(m));
    for (int m : {4, 6, 8})
      holds_within(subdivide_cycle(g, m), pi + 1, "cycle insertion m=" + std::to_string(m));
  }
  holds_within(subdivide_h(complete_graph(3), path_graph(3), 1, 3), 3 + 2 - 1,
               "three-path gadget into the triangle");
  holds_within(subdivide_h(path_graph(3), cycle_graph(4), 1, 3), 2 + 3 - 1,
               "four-cycle gadget into the three-path");
  return g_failures == 0;
}

bool criterion_11() {
  std::printf("  deletion averages transfer through the line graph\n");
  for (int n = 4; n <= 8; ++n) {
    Rational lp = tau_index(line_graph(path_graph(n))).tau;
    Rational p = tau_index(path_graph(n - 1)).tau;
    expect(lp == p, "line graph of the " + std::to_string(n) + "-path (" + rat(lp) + " vs " +
                        rat(p) + ")");
    Rational lc = tau_index(line_graph(cycle_graph(n))).tau;
    Rational c = tau_index(cycle_graph(n)).tau;
    expect(lc == c, "line graph of the " + std::to_string(n) + "-cycle (" + rat(lc) + " vs " +
                        rat(c) + ")");
  }
  return g_failures == 0;
}

struct Criterion {
  int id;
  const char* label;
  bool (*fn)();
};

const Criterion kCriteria[] = {
    {1, "known colouring numbers for paths, cycles, and complete graphs", criterion_1},
    {2, "solver equals the independent reference search", criterion_2},
    {3, "nine-cycle deletion average with witness replay", criterion_3},
    {4, "deletion-average recurrence equals the all-orders reference", criterion_4},
    {5, "closed-form audit with recorded disagreements", criterion_5},
    {6, "deletion-average bounds and unique minimizer", criterion_6},
    {7, "linear-construction structure tables", criterion_7},
    {8, "conjecture sweeps with certificates", criterion_8},
    {9, "distance metric values", criterion_9},
    {10, "insertion constructions within colour bounds", criterion_10},
    {11, "line-graph transfer of deletion averages", criterion_11},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 11) {
      std::fprintf(stderr, "usage: %s [criterion 1..11]\n", argv[0]);
      return 2;
    }
  }
  int failed = 0;
  for (const Criterion& c : kCriteria) {
    if (only && c.id != only) continue;
    g_checks = 0;
    g_failures = 0;
    bool ok = c.fn();
    std::printf("criterion %d: %s - %s (%d checks)\n", c.id, ok ? "PASS" : "FAIL", c.label,
                g_checks);
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
