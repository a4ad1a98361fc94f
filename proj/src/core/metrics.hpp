#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/graph.hpp"
#include "core/report.hpp"
#include "core/thue.hpp"

namespace thuelab {

// Per-colour distance statistics of one minimum colouring: pi_d is the
// smallest and pi_D the largest distance between two vertices sharing that
// colour. Classes with no finite same-colour pair (singletons, or pairs
// split across components) report the default 0. Indexed by colour, entry 0
// unused.
struct ColourMetrics {
  std::vector<int> pi_d;
  std::vector<int> pi_D;
};

// Requires phi to be square-free on all paths and to use exactly pi(g)
// distinct colours.
ColourMetrics colour_metrics(const Graph& g, const Colouring& phi,
                             const SolveLimits& limits = {});

struct RadiusReach {
  int pi = 0;     // pi(g)
  int diam = 0;   // kInfiniteDistance when disconnected
  int pi_r = 0;   // least positive pi_d over all minimum colourings; 0 if none
  int pi_R = 0;   // largest pi_D over all minimum colourings
  Colouring radius_witness;
  Colouring reach_witness;
};

// Enumerates all minimum colourings up to colour renaming (the statistics
// are renaming-invariant) and aggregates. Positive distances can never be
// below 2 and never exceed the diameter, which gives sound early exits.
RadiusReach radius_and_reach(const Graph& g, const SolveLimits& limits = {});

using LabelledGraphs = std::vector<std::pair<std::string, Graph>>;

// Expected values: 0 for complete graphs, 2 for connected non-complete ones.
Report check_radius_theorem(const LabelledGraphs& items, const SolveLimits& limits = {});

// pi_R against the plain diameter; rows that differ are flagged and, when
// cert_dir is given, dumped as edge list plus witness colouring.
Report check_reach_conjecture(const LabelledGraphs& items, const SolveLimits& limits = {},
                              const std::string& cert_dir = "");

}  // namespace thuelab
