#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "core/graph.hpp"

namespace thuelab {

// colour[v] for v in 1..n; colour[0] is unused. 0 means "not yet coloured"
// in partial assignments; complete colourings use values 1..k.
struct Colouring {
  int k = 0;
  std::vector<int> colour;

  int colours_used() const;
};

// Vertex path whose colour word is a square: the first half repeats.
struct RepetitionWitness {
  std::vector<int> path;  // even length >= 2
};

// True iff no contiguous block of the word immediately repeats (no factor XX).
bool is_square_free(std::span<const int> word);

// Resource guards for the exact searches. max_n bounds the order a solve
// accepts, enum_max_n bounds colouring enumeration, node_budget counts
// elementary search steps before the solver gives up with budget_exceeded.
struct SolveLimits {
  int max_n = 20;
  int enum_max_n = 12;
  std::uint64_t node_budget = 200'000'000;
};

// Scans every simple path of g and reports a square colour word if one
// exists; nullopt means the colouring is square-free along all paths
// (adjacent repeats are the length-2 case, so this subsumes properness).
std::optional<RepetitionWitness> find_repetition(const Graph& g, const Colouring& c);
bool is_thue_colouring(const Graph& g, const Colouring& c);

struct PiResult {
  int pi = 0;
  Colouring witness;
  std::uint64_t steps = 0;
};

// Smallest k admitting a square-free-on-all-paths proper colouring, with a
// deterministic witness using colours 1..pi.
PiResult thue_number(const Graph& g, const SolveLimits& limits = {});

// Does g admit such a colouring with at most k colours? Returns a witness.
std::optional<Colouring> thue_decision(const Graph& g, int k, const SolveLimits& limits = {});

// thue_number plus a re-check of the witness through the independent
// path-scanning checker; a mismatch is an internal error, never a result.
PiResult verified_thue_number(const Graph& g, const SolveLimits& limits = {});

// Independent reference: tries k = 1, 2, ... and for each runs a plain
// lexicographic assignment search validated by the path-scanning checker
// only. Shares no search code with thue_number. Small graphs only.
int thue_number_oracle(const Graph& g, int max_n = 10);

// Visits colourings of g with at most k colours that pass the square-free
// test, in lexicographic order of the colour vector. canonical restricts to
// first-use-ordered representatives (colour classes modulo renaming).
// Callback returns false to stop early.
void enumerate_thue_colourings(const Graph& g, int k, bool canonical,
                               const std::function<bool(const Colouring&)>& visit,
                               const SolveLimits& limits = {});

// Largest clique size; used as a lower bound and for structural checks.
int clique_number(const Graph& g);

// True iff some simple cycle passes through every vertex. Small graphs only.
bool is_hamiltonian(const Graph& g);

}  // namespace thuelab
