#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/graph.hpp"
#include "core/report.hpp"
#include "core/thue.hpp"

namespace thuelab {

// Parameters of the linear rule f(x) = m*x + c.
struct JacoParams {
  int m = 0;
  int c = 0;
  int n = 0;
};

// Finite linear Jaco graph: vertices 1..n; the arc (i, j), i < j, exists iff
// f(i) + i - indeg(i) >= j, where indeg(i) counts arcs from lower-indexed
// vertices and is therefore final before vertex i emits its own arcs.
struct JacoGraph {
  JacoParams params;
  std::vector<Edge> arcs;  // directed low -> high
  Graph underlying;
  std::vector<int> in_degree;   // 1-based
  std::vector<int> out_degree;  // 1-based
};

JacoGraph build_jaco(const JacoParams& p);  // 1 <= n <= 64, m, c >= 0

struct JaconianInfo {
  int delta = 0;              // max degree of the underlying graph
  std::vector<int> jaconian;  // vertices attaining delta
  int prime = 0;              // lowest-indexed of those
  std::vector<int> hope_ids;  // vertices prime+1..n (may be empty)
  std::optional<Graph> hope;  // induced on hope_ids, relabelled; nullopt if empty
};

JaconianInfo jaconian(const JacoGraph& jg);

// The construction is said to leave a complete graph on the vertices after
// the prime Jaconian vertex, of order delta. Both halves of that claim are
// recorded separately because they come apart for some n.
struct HopeCheck {
  bool complete = false;     // induced subgraph complete (vacuously for empty)
  bool delta_sized = false;  // hope order equals delta
  int hope_order = 0;
  int delta = 0;
};

HopeCheck hope_check(const JacoGraph& jg);

// Sweeps below share the row schema m,c,n,epsilon,delta_min,delta_max,pi,
// bound_flags. Budget exhaustion marks the row "timeout" instead of failing
// the sweep; pi witnesses are re-verified with the path-scanning checker.

// m=1, c=0: degree bound on pi (both the wide and the tight variant).
Report degree_bound_table(int n_lo, int n_hi, const SolveLimits& limits, int jobs = 1);

// m=1, c=0: max degree grows by 0 or 1 from n to n+1.
Report delta_step_table(int n_lo, int n_hi);

// m=1, c=0: hope completeness and order per n.
Report hope_table(int n_lo, int n_hi);

// m=0: pi from the clique-union component structure and from the solver.
Report pi_range_table(int c, int n_lo, int n_hi, const SolveLimits& limits);

// m >= 2, c >= 1: pi <= delta_max + delta_min sweep. Violating rows emit the
// graph as an edge-list file under cert_dir (when given).
Report conjecture_table(int m_lo, int m_hi, int c_lo, int c_hi, int n_lo, int n_hi,
                        const SolveLimits& limits, const std::string& cert_dir = "",
                        int jobs = 1);

// Lemma shape for m=0: disjoint union of floor(n/(c+1)) copies of K_{c+1}
// plus a remainder clique.
Graph clique_union_shape(int c, int n);

}  // namespace thuelab
