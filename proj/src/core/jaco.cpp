#include "core/jaco.hpp"

#include <algorithm>
#include <fstream>

#include "core/util.hpp"

namespace thuelab {

JacoGraph build_jaco(const JacoParams& p) {
  if (p.m < 0 || p.c < 0) fail(errc::out_of_range, "slope and intercept must be non-negative");
  if (p.n < 1 || p.n > 64) fail(errc::out_of_range, "order must lie in 1..64");
  JacoGraph jg;
  jg.params = p;
  jg.in_degree.assign(p.n + 1, 0);
  jg.out_degree.assign(p.n + 1, 0);
  for (int i = 1; i <= p.n; ++i) {
    // in_degree[i] is final here: every arc into i comes from a lower vertex
    long long reach = static_cast<long long>(p.m) * i + p.c + i - jg.in_degree[i];
    int hi = static_cast<int>(std::min<long long>(p.n, reach));
    for (int j = i + 1; j <= hi; ++j) {
      jg.arcs.push_back(Edge{i, j});
      ++jg.out_degree[i];
      ++jg.in_degree[j];
    }
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(jg.arcs.size());
  for (const Edge& a : jg.arcs) pairs.emplace_back(a.u, a.v);
  jg.underlying = make_graph(p.n, pairs);
  if (jg.underlying.size() != static_cast<int>(jg.arcs.size()))
    fail(errc::internal, "duplicate arcs in construction");
  return jg;
}

JaconianInfo jaconian(const JacoGraph& jg) {
  JaconianInfo info;
  auto deg = degrees(jg.underlying);
  info.delta = *std::max_element(deg.begin() + 1, deg.end());
  for (int v = 1; v <= jg.underlying.n; ++v)
    if (deg[v] == info.delta) info.jaconian.push_back(v);
  info.prime = info.jaconian.front();
  for (int v = info.prime + 1; v <= jg.underlying.n; ++v) info.hope_ids.push_back(v);
  if (!info.hope_ids.empty()) info.hope = induced_on(jg.underlying, info.hope_ids);
  return info;
}

HopeCheck hope_check(const JacoGraph& jg) {
  JaconianInfo info = jaconian(jg);
  HopeCheck out;
  out.delta = info.delta;
  out.hope_order = static_cast<int>(info.hope_ids.size());
  out.complete = !info.hope || is_complete(*info.hope);
  out.delta_sized = out.hope_order == info.delta;
  return out;
}

Graph clique_union_shape(int c, int n) {
  if (c < 0 || n < 1) fail(errc::out_of_range, "bad clique union parameters");
  // consecutive blocks of c+1 vertices, each a clique, plus a remainder block
  std::vector<std::pair<int, int>> pairs;
  int block = c + 1;
  for (int start = 1; start <= n; start += block) {
    int end = std::min(n, start + block - 1);
    for (int i = start; i <= end; ++i)
      for (int j = i + 1; j <= end; ++j) pairs.emplace_back(i, j);
  }
  return make_graph(n, pairs);
}

namespace {

const std::vector<std::string> kSweepColumns = {
    "m", "c", "n", "epsilon", "delta_min (interpreted)", "delta_max", "pi", "bound_flags"};

std::string yn(bool b) { return b ? "yes" : "no"; }

struct RowPi {
  bool timeout = false;
  int pi = 0;
};

RowPi row_pi(const Graph& g, const SolveLimits& limits) {
  RowPi out;
  try {
    out.pi = verified_thue_number(g, limits).pi;
  } catch (const Error& e) {
    if (e.code() != errc::budget_exceeded) throw;
    out.timeout = true;
  }
  return out;
}

}  // namespace

Report degree_bound_table(int n_lo, int n_hi, const SolveLimits& limits, int jobs) {
  if (n_lo < 1 || n_hi < n_lo) fail(errc::out_of_range, "bad order range");
  Report rep;
  rep.title = "degree bounds on pi for the m=1, c=0 family";
  rep.columns = kSweepColumns;
  int count = n_hi - n_lo + 1;
  std::vector<std::vector<std::string>> rows(count);
  parallel_for(count, jobs, [&](int idx) {
    int n = n_lo + idx;
    JacoGraph jg = build_jaco({1, 0, n});
    const Graph& g = jg.underlying;
    RowPi r = row_pi(g, limits);
    std::string flags, pi;
    if (r.timeout) {
      flags = "timeout";
      pi = "timeout";
    } else {
      int delta = max_degree(g);
      flags = "pi_ge_delta=" + yn(r.pi >= delta) + ";pi_le_delta_plus_1=" + yn(r.pi <= delta + 1) +
              ";pi_le_delta_plus_2=" + yn(r.pi <= delta + 2);
      pi = std::to_string(r.pi);
    }
    rows[idx] = {"1",
                 "0",
                 std::to_string(n),
                 std::to_string(g.size()),
                 std::to_string(min_degree(g)),
                 std::to_string(max_degree(g)),
                 pi,
                 flags};
  });
  for (auto& row : rows) rep.add_row(std::move(row));
  return rep;
}

Report delta_step_table(int n_lo, int n_hi) {
  if (n_lo < 1 || n_hi < n_lo) fail(errc::out_of_range, "bad order range");
  Report rep;
  rep.title = "max degree step from n to n+1 for the m=1, c=0 family";
  rep.columns = {"n", "delta_n", "delta_next", "step", "step_in_0_1"};
  for (int n = n_lo; n <= n_hi; ++n) {
    int d0 = max_degree(build_jaco({1, 0, n}).underlying);
    int d1 = max_degree(build_jaco({1, 0, n + 1}).underlying);
    int step = d1 - d0;
    rep.add_row({std::to_string(n), std::to_string(d0), std::to_string(d1), std::to_string(step),
                 yn(step == 0 || step == 1)});
  }
  return rep;
}

Report hope_table(int n_lo, int n_hi) {
  if (n_lo < 1 || n_hi < n_lo) fail(errc::out_of_range, "bad order range");
  Report rep;
  rep.title = "completeness and order of the tail clique for the m=1, c=0 family";
  rep.columns = {"n", "prime", "hope_order", "delta_max", "hope_complete", "hope_order_eq_delta"};
  for (int n = n_lo; n <= n_hi; ++n) {
    JacoGraph jg = build_jaco({1, 0, n});
    JaconianInfo info = jaconian(jg);
    HopeCheck hc = hope_check(jg);
    rep.add_row({std::to_string(n), std::to_string(info.prime), std::to_string(hc.hope_order),
                 std::to_string(hc.delta), yn(hc.complete), yn(hc.delta_sized)});
  }
  return rep;
}

Report pi_range_table(int c, int n_lo, int n_hi, const SolveLimits& limits) {
  if (c < 0) fail(errc::out_of_range, "intercept must be non-negative");
  if (n_lo < 1 || n_hi < n_lo) fail(errc::out_of_range, "bad order range");
  Report rep;
  rep.title = "pi of the m=0 clique-union family, structural vs solver";
  rep.columns = {"m", "c", "n", "epsilon", "delta_min (interpreted)", "delta_max",
                 "pi", "pi_structural", "bound_flags"};
  for (int n = n_lo; n <= n_hi; ++n) {
    JacoGraph jg = build_jaco({0, c, n});
    const Graph& g = jg.underlying;
    // components of the clique union are K_{c+1} blocks and one remainder,
    // and pi of a complete graph is its order
    int structural = 0;
    for (const Component& comp : components(g))
      structural = std::max(structural, comp.graph.n);
    if (c == 0) structural = 1;
    RowPi r = row_pi(g, limits);
    std::string flags, pi;
    if (r.timeout) {
      flags = "timeout";
      pi = "timeout";
    } else {
      flags = "agrees_with_structure=" + yn(r.pi == structural) +
              ";pi_in_1_to_c_plus_1=" + yn(r.pi >= 1 && r.pi <= c + 1);
      pi = std::to_string(r.pi);
    }
    rep.add_row({"0", std::to_string(c), std::to_string(n), std::to_string(g.size()),
                 std::to_string(min_degree(g)), std::to_string(max_degree(g)), pi,
                 std::to_string(structural), flags});
  }
  return rep;
}

Report conjecture_table(int m_lo, int m_hi, int c_lo, int c_hi, int n_lo, int n_hi,
                        const SolveLimits& limits, const std::string& cert_dir, int jobs) {
  if (m_lo < 2) fail(errc::out_of_range, "slope range must start at 2");
  if (c_lo < 1) fail(errc::out_of_range, "intercept range must start at 1");
  if (m_hi < m_lo || c_hi < c_lo || n_hi < n_lo || n_lo < 1)
    fail(errc::out_of_range, "bad sweep ranges");
  Report rep;
  rep.title = "pi <= delta_max + delta_min sweep over slopes and intercepts";
  rep.columns = kSweepColumns;
  struct Key {
    int m, c, n;
  };
  std::vector<Key> keys;
  for (int m = m_lo; m <= m_hi; ++m)
    for (int c = c_lo; c <= c_hi; ++c)
      for (int n = n_lo; n <= n_hi; ++n) keys.push_back({m, c, n});
  std::vector<std::vector<std::string>> rows(keys.size());
  parallel_for(static_cast<int>(keys.size()), jobs, [&](int idx) {
    auto [m, c, n] = keys[idx];
    JacoGraph jg = build_jaco({m, c, n});
    const Graph& g = jg.underlying;
    int dmin = min_degree(g);
    int dmax = max_degree(g);
    RowPi r = row_pi(g, limits);
    std::string flags, pi;
    if (r.timeout) {
      flags = "timeout";
      pi = "timeout";
    } else {
      pi = std::to_string(r.pi);
      bool holds = r.pi <= dmax + dmin;
      if (n == 1) {
        // single vertex: pi = 1 exceeds delta_max + delta_min = 0; the bound
        // cannot hold, but there is also no edge for it to speak about
        flags = "vacuous/violation";
      } else {
        flags = std::string("holds=") + yn(holds);
      }
      if (!holds && !cert_dir.empty()) {
        std::string name = cert_dir + "/jaco_m" + std::to_string(m) + "_c" + std::to_string(c) +
                           "_n" + std::to_string(n) + ".edges";
        std::ofstream out(name);
        out << format_edge_list(g);
        flags += ";certificate=" + name;
      }
    }
    rows[idx] = {std::to_string(m), std::to_string(c), std::to_string(n),
                 std::to_string(g.size()), std::to_string(dmin), std::to_string(dmax), pi, flags};
  });
  for (auto& row : rows) rep.add_row(std::move(row));
  return rep;
}

}  // namespace thuelab
