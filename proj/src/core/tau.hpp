#pragma once

#include <vector>

#include "core/graph.hpp"
#include "core/rational.hpp"
#include "core/report.hpp"
#include "core/thue.hpp"

namespace thuelab {

// A full deletion order: every edge of the graph exactly once.
using DeletionOrder = std::vector<Edge>;

struct TauLimits {
  int max_epsilon = 16;  // subset table is 2^epsilon
  SolveLimits solve;
};

// pi of the shrinking graph: eps+1 entries, starting at pi(G), non-increasing
// (deleting an edge never needs more colours), ending at 1 once no edges
// remain.
std::vector<int> thue_sequence(const Graph& g, const DeletionOrder& order,
                               const SolveLimits& limits = {});

Rational tau_of_order(const Graph& g, const DeletionOrder& order, const SolveLimits& limits = {});

struct TauResult {
  Rational tau;
  DeletionOrder order;  // a minimizing order, deterministic tie-breaks
  long long sum = 0;    // sum of the pi entries along it
};

// Minimum of tau over all eps! deletion orders via the subset recurrence
// f(S) = pi(G[S]) + min over e in S of f(S minus e), f(empty set) = 1.
// Ties are broken toward the lexicographically smallest edge, so the
// reported order is deterministic.
TauResult tau_index(const Graph& g, const TauLimits& limits = {});

// Reference value by walking every permutation of the edges. eps <= 7.
Rational tau_index_oracle(const Graph& g, const SolveLimits& limits = {});

Rational tau_path_closed(int n);                      // n >= 1
Rational tau_cycle_closed(int n);                     // n >= 4
Rational tau_star_closed(int leaves);                 // leaves >= 1
Rational tau_complete_closed(int n, bool corrected);  // n >= 2

// The peel order behind the complete-graph value: delete all edges inside
// {1..n-1} first (recursively in the same fashion), then the star at n.
DeletionOrder complete_peel_order(int n);

enum class TauFamily { path, cycle, star, complete };

// One row per size in lo..hi: subset-recurrence value against the closed
// form and, where eps <= 7, against the permutation reference.
Report tau_formula_audit(TauFamily family, int lo, int hi, const TauLimits& limits = {});

}  // namespace thuelab
