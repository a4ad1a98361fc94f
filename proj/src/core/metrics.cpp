#include "core/metrics.hpp"

#include <algorithm>
#include <fstream>

namespace thuelab {

namespace {

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> d(g.n + 1);
  for (int v = 1; v <= g.n; ++v) d[v] = bfs_distances(g, v);
  return d;
}

// min/max finite same-colour distances of one complete colouring
struct Stats {
  int min_positive = 0;  // 0 = no finite pair anywhere
  int max_value = 0;
};

Stats colouring_stats(const Colouring& phi, int n,
                      const std::vector<std::vector<int>>& dist) {
  Stats s;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      if (phi.colour[u] != phi.colour[v]) continue;
      int d = dist[u][v];
      if (d == kInfiniteDistance) continue;
      if (s.min_positive == 0 || d < s.min_positive) s.min_positive = d;
      s.max_value = std::max(s.max_value, d);
    }
  return s;
}

}  // namespace

ColourMetrics colour_metrics(const Graph& g, const Colouring& phi, const SolveLimits& limits) {
  if (find_repetition(g, phi))
    fail(errc::not_a_thue_colouring, "colouring repeats a block along some path");
  int pi = thue_number(g, limits).pi;
  if (phi.colours_used() != pi)
    fail(errc::not_minimum, "colouring uses " + std::to_string(phi.colours_used()) +
                                " distinct colours but the minimum is " + std::to_string(pi));
  auto dist = all_pairs_distances(g);
  ColourMetrics out;
  out.pi_d.assign(phi.k + 1, 0);
  out.pi_D.assign(phi.k + 1, 0);
  for (int c = 1; c <= phi.k; ++c) {
    std::vector<int> cls;
    for (int v = 1; v <= g.n; ++v)
      if (phi.colour[v] == c) cls.push_back(v);
    for (size_t i = 0; i < cls.size(); ++i)
      for (size_t j = i + 1; j < cls.size(); ++j) {
        int d = dist[cls[i]][cls[j]];
        if (d == kInfiniteDistance) continue;
        if (out.pi_d[c] == 0 || d < out.pi_d[c]) out.pi_d[c] = d;
        out.pi_D[c] = std::max(out.pi_D[c], d);
      }
    if (out.pi_d[c] == 1)
      fail(errc::internal, "distance 1 between same-coloured vertices slipped past the checker");
  }
  return out;
}

RadiusReach radius_and_reach(const Graph& g, const SolveLimits& limits) {
  if (g.n > limits.enum_max_n)
    fail(errc::graph_too_large,
         "colouring enumeration limited to order " + std::to_string(limits.enum_max_n));
  RadiusReach out;
  out.pi = verified_thue_number(g, limits).pi;
  out.diam = diameter(g);
  auto dist = all_pairs_distances(g);
  bool have_witness = false;
  bool connected = out.diam != kInfiniteDistance;
  enumerate_thue_colourings(
      g, out.pi, /*canonical=*/true,
      [&](const Colouring& phi) {
        Stats s = colouring_stats(phi, g.n, dist);
        if (!have_witness) {
          have_witness = true;
          out.radius_witness = phi;
          out.reach_witness = phi;
        }
        if (s.min_positive > 0 && (out.pi_r == 0 || s.min_positive < out.pi_r)) {
          out.pi_r = s.min_positive;
          out.radius_witness = phi;
        }
        if (s.max_value > out.pi_R) {
          out.pi_R = s.max_value;
          out.reach_witness = phi;
        }
        // positive distances live in [2, diam]; once both ends are pinned
        // nothing later in the enumeration can change the answer
        bool radius_done = out.pi_r == 2;
        bool reach_done = connected && out.pi_R == out.diam;
        return !(radius_done && reach_done);
      },
      limits);
  return out;
}

namespace {

std::string dist_str(int d) { return d == kInfiniteDistance ? "inf" : std::to_string(d); }

}  // namespace

Report check_radius_theorem(const LabelledGraphs& items, const SolveLimits& limits) {
  Report rep;
  rep.title = "least positive same-colour distance over all minimum colourings";
  rep.columns = {"graph", "n", "pi", "pi_r", "expected", "ok"};
  for (const auto& [label, g] : items) {
    std::string pi, pi_r, expected, ok;
    try {
      RadiusReach rr = radius_and_reach(g, limits);
      pi = std::to_string(rr.pi);
      pi_r = std::to_string(rr.pi_r);
      if (is_complete(g)) {
        expected = "0";
        ok = rr.pi_r == 0 ? "yes" : "no";
      } else if (is_connected(g)) {
        expected = "2";
        ok = rr.pi_r == 2 ? "yes" : "no";
      } else {
        expected = "";
        ok = "n/a";
      }
    } catch (const Error& e) {
      if (e.code() != errc::budget_exceeded) throw;
      pi = pi_r = "timeout";
      ok = "timeout";
    }
    rep.add_row({label, std::to_string(g.n), pi, pi_r, expected, ok});
  }
  return rep;
}

Report check_reach_conjecture(const LabelledGraphs& items, const SolveLimits& limits,
                              const std::string& cert_dir) {
  Report rep;
  rep.title = "largest same-colour distance over all minimum colourings vs diameter";
  rep.columns = {"graph", "n", "pi", "pi_R", "diam", "equal"};
  for (const auto& [label, g] : items) {
    std::string pi, pi_R, diam, equal;
    try {
      RadiusReach rr = radius_and_reach(g, limits);
      pi = std::to_string(rr.pi);
      pi_R = std::to_string(rr.pi_R);
      diam = dist_str(rr.diam);
      bool eq = rr.pi_R == rr.diam;
      equal = eq ? "yes" : "no";
      if (!eq && !cert_dir.empty()) {
        std::string name = cert_dir + "/reach_" + label + ".txt";
        std::ofstream outf(name);
        outf << format_edge_list(g) << "# pi_R " << rr.pi_R << " diam " << diam
             << "\n# witness colouring:";
        for (int v = 1; v <= g.n; ++v) outf << ' ' << rr.reach_witness.colour[v];
        outf << '\n';
        equal += ";certificate=" + name;
      }
    } catch (const Error& e) {
      if (e.code() != errc::budget_exceeded) throw;
      pi = pi_R = "timeout";
      diam = dist_str(diameter(g));
      equal = "timeout";
    }
    rep.add_row({label, std::to_string(g.n), pi, pi_R, diam, equal});
  }
  return rep;
}

}  // namespace thuelab
