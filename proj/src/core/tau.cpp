#include "core/tau.hpp"

#include <algorithm>
#include <bit>

#include "core/generators.hpp"

namespace thuelab {

namespace {

void check_order(const Graph& g, const DeletionOrder& order) {
  DeletionOrder sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(errc::not_a_permutation, "deletion order repeats an edge");
  if (sorted != g.edges)
    fail(errc::not_a_permutation, "deletion order is not a permutation of the edge set");
}

}  // namespace

std::vector<int> thue_sequence(const Graph& g, const DeletionOrder& order,
                               const SolveLimits& limits) {
  check_order(g, order);
  std::vector<int> seq;
  seq.reserve(order.size() + 1);
  Graph cur = g;
  seq.push_back(thue_number(cur, limits).pi);
  for (const Edge& e : order) {
    cur = delete_edge(cur, e.u, e.v);
    seq.push_back(thue_number(cur, limits).pi);
  }
  return seq;
}

Rational tau_of_order(const Graph& g, const DeletionOrder& order, const SolveLimits& limits) {
  auto seq = thue_sequence(g, order, limits);
  long long sum = 0;
  for (int s : seq) sum += s;
  return Rational(sum, static_cast<long long>(seq.size()));
}

namespace {

// pi for every spanning subgraph selected by an edge-subset mask
std::vector<int> subset_pi_table(const Graph& g, const SolveLimits& limits) {
  int eps = g.size();
  std::vector<int> pi(std::size_t{1} << eps);
  for (std::uint32_t mask = 0; mask < pi.size(); ++mask) {
    std::vector<Edge> keep;
    for (int e = 0; e < eps; ++e)
      if (mask & (1u << e)) keep.push_back(g.edges[e]);
    Graph sub = induced_subgraph_edges(g, keep);
    pi[mask] = thue_number(sub, limits).pi;
  }
  return pi;
}

}  // namespace

TauResult tau_index(const Graph& g, const TauLimits& limits) {
  int eps = g.size();
  if (eps > limits.max_epsilon || eps > 24)
    fail(errc::too_many_edges, "edge count " + std::to_string(eps) + " exceeds limit " +
                                   std::to_string(std::min(limits.max_epsilon, 24)));
  std::vector<int> pi = subset_pi_table(g, limits.solve);
  std::vector<long long> f(std::size_t{1} << eps);
  f[0] = 1;
  for (std::uint32_t mask = 1; mask < f.size(); ++mask) {
    long long best = -1;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      long long cand = f[mask & ~(rest & -rest)];
      if (best < 0 || cand < best) best = cand;
    }
    f[mask] = pi[mask] + best;
  }

  TauResult out;
  std::uint32_t full = eps == 0 ? 0 : (eps == 32 ? ~0u : (1u << eps) - 1);
  out.sum = f[full];
  out.tau = Rational(out.sum, eps + 1);
  // walk the table forward, lowest edge index on ties
  std::uint32_t mask = full;
  while (mask) {
    long long best = -1;
    int pick = -1;
    for (int e = 0; e < eps; ++e) {
      if (!(mask & (1u << e))) continue;
      long long cand = f[mask & ~(1u << e)];
      if (best < 0 || cand < best) {
        best = cand;
        pick = e;
      }
    }
    out.order.push_back(g.edges[pick]);
    mask &= ~(1u << pick);
  }
  return out;
}

Rational tau_index_oracle(const Graph& g, const SolveLimits& limits) {
  int eps = g.size();
  if (eps > 7)
    fail(errc::too_many_edges, "permutation reference limited to 7 edges");
  std::vector<int> pi = subset_pi_table(g, limits);
  std::vector<int> idx(eps);
  for (int i = 0; i < eps; ++i) idx[i] = i;
  std::uint32_t full = eps == 0 ? 0 : (1u << eps) - 1;
  long long best = -1;
  do {
    std::uint32_t mask = full;
    long long sum = pi[mask];
    for (int e : idx) {
      mask &= ~(1u << e);
      sum += pi[mask];
    }
    if (best < 0 || sum < best) best = sum;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return Rational(best, eps + 1);
}

Rational tau_path_closed(int n) {
  if (n < 1) fail(errc::out_of_range, "path size must be positive");
  // n = 3t, 3t-1, 3t-2 in turn
  switch (n % 3) {
    case 0: return Rational(7LL * n - 6, 3LL * n);
    case 2: return Rational(7LL * n - 5, 3LL * n);
    default: return Rational(7LL * n - 4, 3LL * n);
  }
}

namespace {

bool cycle_needs_four(int n) {
  return n == 5 || n == 7 || n == 9 || n == 10 || n == 14 || n == 17;
}

}  // namespace

Rational tau_cycle_closed(int n) {
  if (n < 4) fail(errc::out_of_range, "cycle form starts at order 4");
  int i = (3 - n % 3) % 3;  // n = 3t - i
  long long base = 7LL * n - i + (cycle_needs_four(n) ? 6 : 3);
  return Rational(base, 3LL * (n + 1));
}

Rational tau_star_closed(int leaves) {
  if (leaves < 1) fail(errc::out_of_range, "star needs at least one leaf");
  return Rational(2LL * leaves + 1, leaves + 1);
}

Rational tau_complete_closed(int n, bool corrected) {
  if (n < 2) fail(errc::out_of_range, "complete form starts at order 2");
  long long sum = 1;
  for (int i = 0; i <= n - 2; ++i) sum += static_cast<long long>(i + 1) * (n - i);
  long long den = corrected ? (static_cast<long long>(n) * (n - 1) + 2)
                            : (static_cast<long long>(n) * (n - 1));
  return Rational(2 * sum, den);
}

DeletionOrder complete_peel_order(int n) {
  if (n < 1) fail(errc::out_of_range, "order must be positive");
  DeletionOrder order;
  for (int v = 2; v <= n; ++v)
    for (int i = 1; i < v; ++i) order.push_back(Edge{i, v});
  return order;
}

Report tau_formula_audit(TauFamily family, int lo, int hi, const TauLimits& limits) {
  if (hi < lo) fail(errc::out_of_range, "bad audit range");
  Report rep;
  rep.columns = {"family", "n",            "epsilon",      "dp",           "dp_sum",
                 "closed", "closed_match", "printed_form", "printed_match", "perm_ref",
                 "perm_match"};
  const char* name = family == TauFamily::path     ? "path"
                     : family == TauFamily::cycle  ? "cycle"
                     : family == TauFamily::star   ? "star"
                                                   : "complete";
  rep.title = std::string("minimum deletion average: recurrence vs closed form (") + name + ")";
  for (int n = lo; n <= hi; ++n) {
    Graph g;
    Rational closed;
    std::string printed_form, printed_match;
    switch (family) {
      case TauFamily::path:
        g = path_graph(n);
        closed = tau_path_closed(n);
        break;
      case TauFamily::cycle:
        g = cycle_graph(n);
        closed = tau_cycle_closed(n);
        break;
      case TauFamily::star:
        g = star_graph(n);
        closed = tau_star_closed(n);
        break;
      case TauFamily::complete:
        g = complete_graph(n);
        closed = tau_complete_closed(n, true);
        break;
    }
    TauResult dp = tau_index(g, limits);
    if (family == TauFamily::complete) {
      Rational printed = tau_complete_closed(n, false);
      printed_form = printed.str();
      printed_match = dp.tau == printed ? "yes" : "no";
    }
    std::string perm_ref, perm_match;
    if (g.size() <= 7) {
      Rational oracle = tau_index_oracle(g, limits.solve);
      perm_ref = oracle.str();
      perm_match = dp.tau == oracle ? "yes" : "no";
    } else {
      perm_match = "skipped";
    }
    rep.add_row({name, std::to_string(n), std::to_string(g.size()), dp.tau.str(),
                 std::to_string(dp.sum), closed.str(), dp.tau == closed ? "yes" : "no",
                 printed_form, printed_match, perm_ref, perm_match});
  }
  return rep;
}

}  // namespace thuelab
