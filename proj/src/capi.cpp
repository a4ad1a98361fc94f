// C boundary of the library. Every entry point traps exceptions, maps them
// to a status code, and stores the message in a thread-local slot; no
// exception may cross into the caller.

#include "thuelab.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "core/errors.hpp"
#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/iso.hpp"
#include "core/jaco.hpp"
#include "core/metrics.hpp"
#include "core/rational.hpp"
#include "core/report.hpp"
#include "core/subdivide.hpp"
#include "core/tau.hpp"
#include "core/thue.hpp"

#ifndef THUELAB_VERSION_STRING
#define THUELAB_VERSION_STRING "0.0.0"
#endif

struct tl_graph {
  thuelab::Graph g;
};

struct tl_report {
  thuelab::Report r;
};

namespace {

thread_local std::string g_last_error;

tl_status status_of(thuelab::errc code) {
  using thuelab::errc;
  switch (code) {
    case errc::parse_error:
      return TL_PARSE;
    case errc::graph_too_large:
    case errc::too_many_edges:
      return TL_LIMIT;
    case errc::budget_exceeded:
      return TL_BUDGET;
    case errc::internal:
      return TL_INTERNAL;
    default:
      return TL_INVALID;
  }
}

// Runs the body and folds every failure mode into a status code.
template <typename Fn>
tl_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return TL_OK;
  } catch (const thuelab::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return TL_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = std::string("unexpected error: ") + e.what();
    return TL_INTERNAL;
  } catch (...) {
    g_last_error = "unexpected non-standard exception";
    return TL_INTERNAL;
  }
}

tl_status invalid(const char* msg) {
  g_last_error = msg;
  return TL_INVALID;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_out(char** out, const std::string& s) {
  if (out) *out = dup_string(s);
}

thuelab::SolveLimits solve_limits(const tl_limits* limits) {
  thuelab::SolveLimits s;
  if (limits) {
    s.max_n = limits->max_n;
    s.enum_max_n = limits->enum_max_n;
    s.node_budget = limits->node_budget;
  }
  return s;
}

thuelab::TauLimits tau_limits(const tl_limits* limits) {
  thuelab::TauLimits t;
  t.solve = solve_limits(limits);
  if (limits) t.max_epsilon = limits->max_epsilon;
  return t;
}

std::string join_ints(const std::vector<int>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string colouring_string(const thuelab::Colouring& c) {
  std::vector<int> vals(c.colour.begin() + (c.colour.empty() ? 0 : 1), c.colour.end());
  return join_ints(vals, ' ');
}

std::string order_string(const thuelab::DeletionOrder& order) {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(order[i].u) + "-" + std::to_string(order[i].v);
  }
  return out;
}

thuelab::Colouring parse_colouring(const char* text, int n) {
  std::istringstream in(text);
  std::vector<int> vals;
  int x = 0;
  while (in >> x) {
    if (x < 0) thuelab::fail(thuelab::errc::parse_error, "colours must be non-negative");
    vals.push_back(x);
  }
  if (!in.eof()) thuelab::fail(thuelab::errc::parse_error, "colouring is not a list of integers");
  if (static_cast<int>(vals.size()) != n)
    thuelab::fail(thuelab::errc::parse_error,
                  "colouring has " + std::to_string(vals.size()) + " entries, graph has " +
                      std::to_string(n) + " vertices");
  thuelab::Colouring c;
  c.colour.assign(1, 0);
  c.colour.insert(c.colour.end(), vals.begin(), vals.end());
  c.k = 1;
  for (int v : vals) c.k = std::max(c.k, v);
  return c;
}

thuelab::DeletionOrder parse_order_indices(const char* text, const thuelab::Graph& g) {
  std::string s(text);
  for (char& ch : s)
    if (ch == ',') ch = ' ';
  std::istringstream in(s);
  thuelab::DeletionOrder order;
  long long idx = 0;
  while (in >> idx) {
    if (idx < 1 || idx > g.size())
      thuelab::fail(thuelab::errc::out_of_range,
                    "edge index " + std::to_string(idx) + " outside 1.." + std::to_string(g.size()));
    order.push_back(g.edges[static_cast<std::size_t>(idx - 1)]);
  }
  if (!in.eof())
    thuelab::fail(thuelab::errc::parse_error, "order is not a list of edge indices");
  return order;
}

thuelab::LabelledGraphs atlas_items(int n) {
  thuelab::LabelledGraphs items;
  auto graphs = thuelab::connected_graph_atlas(n);
  for (std::size_t i = 0; i < graphs.size(); ++i)
    items.emplace_back("n" + std::to_string(n) + "_g" + std::to_string(i + 1),
                       std::move(graphs[i]));
  return items;
}

tl_status make_report(tl_report** out, thuelab::Report&& r) {
  *out = new tl_report{std::move(r)};
  return TL_OK;
}

}  // namespace

extern "C" {

void tl_limits_default(tl_limits* limits) {
  if (!limits) return;
  thuelab::SolveLimits s;
  thuelab::TauLimits t;
  limits->max_n = s.max_n;
  limits->enum_max_n = s.enum_max_n;
  limits->max_epsilon = t.max_epsilon;
  limits->node_budget = s.node_budget;
}

const char* tl_version(void) { return THUELAB_VERSION_STRING; }

const char* tl_last_error(void) { return g_last_error.c_str(); }

void tl_string_free(char* s) { std::free(s); }

tl_status tl_graph_parse(const char* text, tl_graph** out) {
  if (!text || !out) return invalid("tl_graph_parse: null argument");
  return guarded([&] { *out = new tl_graph{thuelab::parse_edge_list(text)}; });
}

tl_status tl_graph_generate(const char* spec, uint64_t seed, tl_graph** out) {
  if (!spec || !out) return invalid("tl_graph_generate: null argument");
  return guarded([&] { *out = new tl_graph{thuelab::generate_from_spec(spec, seed)}; });
}

tl_status tl_graph_format(const tl_graph* g, char** text) {
  if (!g || !text) return invalid("tl_graph_format: null argument");
  return guarded([&] { *text = dup_string(thuelab::format_edge_list(g->g)); });
}

void tl_graph_free(tl_graph* g) { delete g; }

int tl_graph_order(const tl_graph* g) { return g ? g->g.order() : 0; }

int tl_graph_size(const tl_graph* g) { return g ? g->g.size() : 0; }

tl_status tl_graph_add_edge(const tl_graph* g, int u, int v, tl_graph** out) {
  if (!g || !out) return invalid("tl_graph_add_edge: null argument");
  return guarded([&] { *out = new tl_graph{thuelab::add_edge(g->g, u, v)}; });
}

tl_status tl_graph_delete_edge(const tl_graph* g, int u, int v, tl_graph** out) {
  if (!g || !out) return invalid("tl_graph_delete_edge: null argument");
  return guarded([&] { *out = new tl_graph{thuelab::delete_edge(g->g, u, v)}; });
}

tl_status tl_graph_line_graph(const tl_graph* g, tl_graph** out) {
  if (!g || !out) return invalid("tl_graph_line_graph: null argument");
  return guarded([&] { *out = new tl_graph{thuelab::line_graph(g->g)}; });
}

tl_status tl_graph_subdivide_k(const tl_graph* g, int k, tl_graph** out) {
  if (!g || !out) return invalid("tl_graph_subdivide_k: null argument");
  return guarded([&] { *out = new tl_graph{thuelab::subdivide_k(g->g, k)}; });
}

tl_status tl_graph_subdivide_cycle(const tl_graph* g, int m, int u, int w, tl_graph** out) {
  if (!g || !out) return invalid("tl_graph_subdivide_cycle: null argument");
  return guarded([&] {
    std::optional<std::pair<int, int>> attach;
    if (u != 0 || w != 0) attach = std::pair<int, int>{u, w};
    *out = new tl_graph{thuelab::subdivide_cycle(g->g, m, attach)};
  });
}

tl_status tl_graph_subdivide_h(const tl_graph* g, const tl_graph* h, int hu, int hw,
                               tl_graph** out) {
  if (!g || !h || !out) return invalid("tl_graph_subdivide_h: null argument");
  return guarded([&] { *out = new tl_graph{thuelab::subdivide_h(g->g, h->g, hu, hw)}; });
}

tl_status tl_pi(const tl_graph* g, const tl_limits* limits, int* pi, char** witness) {
  if (!g || !pi) return invalid("tl_pi: null argument");
  return guarded([&] {
    auto res = thuelab::verified_thue_number(g->g, solve_limits(limits));
    *pi = res.pi;
    set_out(witness, colouring_string(res.witness));
  });
}

tl_status tl_pi_decision(const tl_graph* g, int k, const tl_limits* limits, int* sat,
                         char** witness) {
  if (!g || !sat) return invalid("tl_pi_decision: null argument");
  return guarded([&] {
    auto res = thuelab::thue_decision(g->g, k, solve_limits(limits));
    *sat = res.has_value() ? 1 : 0;
    set_out(witness, res ? colouring_string(*res) : std::string());
  });
}

tl_status tl_check_colouring(const tl_graph* g, const char* colouring, int* ok,
                             char** witness_path) {
  if (!g || !colouring || !ok) return invalid("tl_check_colouring: null argument");
  return guarded([&] {
    auto c = parse_colouring(colouring, g->g.order());
    auto rep = thuelab::find_repetition(g->g, c);
    *ok = rep.has_value() ? 0 : 1;
    set_out(witness_path, rep ? join_ints(rep->path, ' ') : std::string());
  });
}

tl_status tl_tau(const tl_graph* g, const tl_limits* limits, char** tau, char** order,
                 char** sequence) {
  if (!g || !tau) return invalid("tl_tau: null argument");
  return guarded([&] {
    auto lims = tau_limits(limits);
    auto res = thuelab::tau_index(g->g, lims);
    set_out(tau, res.tau.str());
    set_out(order, order_string(res.order));
    if (sequence) {
      auto seq = thuelab::thue_sequence(g->g, res.order, lims.solve);
      set_out(sequence, join_ints(seq, ' '));
    }
  });
}

tl_status tl_tau_of_order(const tl_graph* g, const char* order_indices, const tl_limits* limits,
                          char** tau, char** sequence) {
  if (!g || !order_indices || !tau) return invalid("tl_tau_of_order: null argument");
  return guarded([&] {
    auto lims = solve_limits(limits);
    auto order = parse_order_indices(order_indices, g->g);
    set_out(tau, thuelab::tau_of_order(g->g, order, lims).str());
    if (sequence) set_out(sequence, join_ints(thuelab::thue_sequence(g->g, order, lims), ' '));
  });
}

tl_status tl_radius_reach(const tl_graph* g, const tl_limits* limits, int* pi_r, int* pi_R,
                          int* diam, int* pi, char** radius_witness, char** reach_witness) {
  if (!g || !pi_r || !pi_R) return invalid("tl_radius_reach: null argument");
  return guarded([&] {
    auto res = thuelab::radius_and_reach(g->g, solve_limits(limits));
    *pi_r = res.pi_r;
    *pi_R = res.pi_R;
    if (diam) *diam = res.diam;
    if (pi) *pi = res.pi;
    set_out(radius_witness, colouring_string(res.radius_witness));
    set_out(reach_witness, colouring_string(res.reach_witness));
  });
}

tl_status tl_graph_from_jaco(int m, int c, int n, tl_graph** out) {
  if (!out) return invalid("tl_graph_from_jaco: null argument");
  return guarded(
      [&] { *out = new tl_graph{thuelab::build_jaco({m, c, n}).underlying}; });
}

tl_status tl_jaco_summary(int m, int c, int n, int* delta, char** jaconian, int* prime,
                          int* hope_order, int* hope_complete) {
  return guarded([&] {
    auto jg = thuelab::build_jaco({m, c, n});
    auto info = thuelab::jaconian(jg);
    auto hc = thuelab::hope_check(jg);
    if (delta) *delta = info.delta;
    if (prime) *prime = info.prime;
    if (hope_order) *hope_order = hc.hope_order;
    if (hope_complete) *hope_complete = hc.complete ? 1 : 0;
    set_out(jaconian, join_ints(info.jaconian, ','));
  });
}

void tl_report_free(tl_report* r) { delete r; }

int tl_report_rows(const tl_report* r) {
  return r ? static_cast<int>(r->r.rows.size()) : 0;
}

int tl_report_cols(const tl_report* r) {
  return r ? static_cast<int>(r->r.columns.size()) : 0;
}

tl_status tl_report_title(const tl_report* r, char** out) {
  if (!r || !out) return invalid("tl_report_title: null argument");
  return guarded([&] { *out = dup_string(r->r.title); });
}

tl_status tl_report_column(const tl_report* r, int col, char** out) {
  if (!r || !out) return invalid("tl_report_column: null argument");
  if (col < 0 || col >= tl_report_cols(r)) return invalid("tl_report_column: index out of range");
  return guarded([&] { *out = dup_string(r->r.columns[static_cast<std::size_t>(col)]); });
}

tl_status tl_report_cell(const tl_report* r, int row, int col, char** out) {
  if (!r || !out) return invalid("tl_report_cell: null argument");
  if (row < 0 || row >= tl_report_rows(r) || col < 0 || col >= tl_report_cols(r))
    return invalid("tl_report_cell: index out of range");
  return guarded([&] {
    *out = dup_string(
        r->r.rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]);
  });
}

tl_status tl_report_csv(const tl_report* r, char** out) {
  if (!r || !out) return invalid("tl_report_csv: null argument");
  return guarded([&] { *out = dup_string(thuelab::to_csv(r->r)); });
}

tl_status tl_report_table(const tl_report* r, char** out) {
  if (!r || !out) return invalid("tl_report_table: null argument");
  return guarded([&] { *out = dup_string(thuelab::to_table(r->r)); });
}

tl_status tl_report_degree_bounds(int n_lo, int n_hi, const tl_limits* limits, int jobs,
                           tl_report** out) {
  if (!out) return invalid("tl_report_degree_bounds: null argument");
  return guarded([&] {
    make_report(out, thuelab::degree_bound_table(n_lo, n_hi, solve_limits(limits), jobs));
  });
}

tl_status tl_report_delta_step(int n_lo, int n_hi, tl_report** out) {
  if (!out) return invalid("tl_report_delta_step: null argument");
  return guarded([&] { make_report(out, thuelab::delta_step_table(n_lo, n_hi)); });
}

tl_status tl_report_hope(int n_lo, int n_hi, tl_report** out) {
  if (!out) return invalid("tl_report_hope: null argument");
  return guarded([&] { make_report(out, thuelab::hope_table(n_lo, n_hi)); });
}

tl_status tl_report_pi_range(int c, int n_lo, int n_hi, const tl_limits* limits,
                             tl_report** out) {
  if (!out) return invalid("tl_report_pi_range: null argument");
  return guarded(
      [&] { make_report(out, thuelab::pi_range_table(c, n_lo, n_hi, solve_limits(limits))); });
}

tl_status tl_report_conjecture(int m_lo, int m_hi, int c_lo, int c_hi, int n_lo, int n_hi,
                               const tl_limits* limits, const char* cert_dir, int jobs,
                               tl_report** out) {
  if (!out) return invalid("tl_report_conjecture: null argument");
  return guarded([&] {
    make_report(out, thuelab::conjecture_table(m_lo, m_hi, c_lo, c_hi, n_lo, n_hi,
                                               solve_limits(limits),
                                               cert_dir ? cert_dir : "", jobs));
  });
}

tl_status tl_report_tau_audit(const char* family, int lo, int hi, const tl_limits* limits,
                              tl_report** out) {
  if (!family || !out) return invalid("tl_report_tau_audit: null argument");
  return guarded([&] {
    std::string f(family);
    thuelab::TauFamily fam;
    if (f == "path")
      fam = thuelab::TauFamily::path;
    else if (f == "cycle")
      fam = thuelab::TauFamily::cycle;
    else if (f == "star")
      fam = thuelab::TauFamily::star;
    else if (f == "complete")
      fam = thuelab::TauFamily::complete;
    else
      thuelab::fail(thuelab::errc::parse_error,
                    "unknown family '" + f + "' (want path, cycle, star or complete)");
    make_report(out, thuelab::tau_formula_audit(fam, lo, hi, tau_limits(limits)));
  });
}

tl_status tl_report_radius_atlas(int n, const tl_limits* limits, tl_report** out) {
  if (!out) return invalid("tl_report_radius_atlas: null argument");
  return guarded(
      [&] { make_report(out, thuelab::check_radius_theorem(atlas_items(n), solve_limits(limits))); });
}

tl_status tl_report_reach_atlas(int n, const tl_limits* limits, const char* cert_dir,
                                tl_report** out) {
  if (!out) return invalid("tl_report_reach_atlas: null argument");
  return guarded([&] {
    make_report(out, thuelab::check_reach_conjecture(atlas_items(n), solve_limits(limits),
                                                     cert_dir ? cert_dir : ""));
  });
}

}  // extern "C"
