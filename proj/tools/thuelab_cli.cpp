// Command-line surface over the shared library. Everything here goes
// through the C API; the core headers are not visible to this target.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "thuelab.h"

namespace {

using nlohmann::json;

struct CliError {
  int code;
  std::string message;
};

int exit_code_for(tl_status st) {
  switch (st) {
    case TL_OK:
      return 0;
    case TL_BUDGET:
      return 3;
    case TL_INTERNAL:
      return 4;
    default:
      return 2;  // parse, validation, limit
  }
}

void check(tl_status st) {
  if (st != TL_OK) throw CliError{exit_code_for(st), tl_last_error()};
}

struct OwnedStr {
  char* p = nullptr;
  OwnedStr() = default;
  OwnedStr(const OwnedStr&) = delete;
  OwnedStr& operator=(const OwnedStr&) = delete;
  ~OwnedStr() { tl_string_free(p); }
  char** out() { return &p; }
  std::string str() const { return p ? p : ""; }
};

struct OwnedGraph {
  tl_graph* g = nullptr;
  OwnedGraph() = default;
  explicit OwnedGraph(tl_graph* raw) : g(raw) {}
  OwnedGraph(const OwnedGraph&) = delete;
  OwnedGraph& operator=(const OwnedGraph&) = delete;
  OwnedGraph(OwnedGraph&& other) noexcept : g(other.g) { other.g = nullptr; }
  OwnedGraph& operator=(OwnedGraph&& other) noexcept {
    std::swap(g, other.g);
    return *this;
  }
  ~OwnedGraph() { tl_graph_free(g); }
  tl_graph** out() { return &g; }
};

struct OwnedReport {
  tl_report* r = nullptr;
  OwnedReport() = default;
  OwnedReport(const OwnedReport&) = delete;
  OwnedReport& operator=(const OwnedReport&) = delete;
  ~OwnedReport() { tl_report_free(r); }
  tl_report** out() { return &r; }
};

// Options shared by all subcommands.
struct Common {
  std::string gen;
  std::string file;
  std::uint64_t seed = 12345;
  std::uint64_t budget = 0;
  bool budget_set = false;
  int max_n = 0;
  int enum_max_n = 0;
  int max_epsilon = 0;
  int jobs = 1;
  std::string format = "human";
  std::string certs;
};

void add_input_options(CLI::App* cmd, Common& o) {
  auto* gen = cmd->add_option("--gen", o.gen, "generator spec, e.g. path:7 or jaco:1,0,8");
  auto* file = cmd->add_option("--file", o.file, "edge-list file");
  gen->excludes(file);
  file->excludes(gen);
  cmd->add_option("--seed", o.seed, "seed for random generator specs");
}

void add_run_options(CLI::App* cmd, Common& o) {
  cmd->add_option("--budget", o.budget, "search node budget (overrides THUE_BUDGET)")
      ->check(CLI::PositiveNumber)
      ->each([&o](const std::string&) { o.budget_set = true; });
  cmd->add_option("--max-n", o.max_n, "solver order cap")->check(CLI::PositiveNumber);
  cmd->add_option("--enum-max-n", o.enum_max_n, "colouring enumeration order cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-epsilon", o.max_epsilon, "edge cap for deletion-order tables")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", o.jobs, "parallel workers for sweeps")->check(CLI::PositiveNumber);
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"human", "csv", "json"}));
  cmd->add_option("--certs", o.certs, "directory for counterexample certificates");
}

tl_limits make_limits(const Common& o) {
  tl_limits limits;
  tl_limits_default(&limits);
  if (const char* env = std::getenv("THUE_BUDGET")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (!end || *end != '\0' || value == 0)
      throw CliError{2, std::string("THUE_BUDGET is not a positive integer: ") + env};
    limits.node_budget = value;
  }
  if (o.budget_set) limits.node_budget = o.budget;
  if (o.max_n > 0) limits.max_n = o.max_n;
  if (o.enum_max_n > 0) limits.enum_max_n = o.enum_max_n;
  if (o.max_epsilon > 0) limits.max_epsilon = o.max_epsilon;
  return limits;
}

OwnedGraph load_graph(const Common& o) {
  OwnedGraph g;
  if (!o.gen.empty()) {
    check(tl_graph_generate(o.gen.c_str(), o.seed, g.out()));
    return g;
  }
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw CliError{2, "cannot open " + o.file};
    std::stringstream buf;
    buf << in.rdbuf();
    check(tl_graph_parse(buf.str().c_str(), g.out()));
    return g;
  }
  throw CliError{2, "exactly one input is required: --gen or --file"};
}

// lo..hi, or a single integer meaning lo = hi.
std::pair<int, int> parse_range(const std::string& text, const std::string& what) {
  auto bad = [&] { throw CliError{2, what + ": expected N or LO..HI, got '" + text + "'"}; };
  auto parse_int = [&](const std::string& s) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(s, &pos);
      if (pos != s.size()) bad();
      return v;
    } catch (const std::exception&) {
      bad();
      return 0;
    }
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = parse_int(text);
    return {v, v};
  }
  int lo = parse_int(text.substr(0, dots));
  int hi = parse_int(text.substr(dots + 2));
  if (lo > hi) throw CliError{2, what + ": empty range '" + text + "'"};
  return {lo, hi};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

// Scalar results: aligned key = value lines, a one-row CSV, or an object.
void print_result(const std::string& format,
                  const std::vector<std::pair<std::string, std::string>>& kv, const json& j) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    for (std::size_t i = 0; i < kv.size(); ++i)
      std::cout << (i ? "," : "") << csv_escape(kv[i].first);
    std::cout << "\n";
    for (std::size_t i = 0; i < kv.size(); ++i)
      std::cout << (i ? "," : "") << csv_escape(kv[i].second);
    std::cout << "\n";
    return;
  }
  for (const auto& [key, value] : kv) std::cout << key << " = " << value << "\n";
}

void print_report(const std::string& format, const tl_report* r) {
  OwnedStr text;
  if (format == "csv") {
    check(tl_report_csv(r, text.out()));
    std::cout << text.str();
    return;
  }
  if (format == "json") {
    json j;
    OwnedStr title;
    check(tl_report_title(r, title.out()));
    j["title"] = title.str();
    j["columns"] = json::array();
    for (int c = 0; c < tl_report_cols(r); ++c) {
      OwnedStr cell;
      check(tl_report_column(r, c, cell.out()));
      j["columns"].push_back(cell.str());
    }
    j["rows"] = json::array();
    for (int row = 0; row < tl_report_rows(r); ++row) {
      json cells = json::array();
      for (int c = 0; c < tl_report_cols(r); ++c) {
        OwnedStr cell;
        check(tl_report_cell(r, row, c, cell.out()));
        cells.push_back(cell.str());
      }
      j["rows"].push_back(std::move(cells));
    }
    std::cout << j.dump(2) << "\n";
    return;
  }
  check(tl_report_table(r, text.out()));
  std::cout << text.str();
}

std::pair<long long, long long> split_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return {std::stoll(s), 1};
  return {std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
}

int run_pi(const Common& o, int decide_k, bool decide_set, const std::string& check_colouring) {
  tl_limits limits = make_limits(o);
  OwnedGraph g = load_graph(o);
  if (!check_colouring.empty()) {
    int ok = 0;
    OwnedStr path;
    check(tl_check_colouring(g.g, check_colouring.c_str(), &ok, path.out()));
    json j{{"square_free", ok == 1}, {"witness_path", path.str()}};
    print_result(o.format, {{"square_free", ok ? "yes" : "no"}, {"witness_path", path.str()}}, j);
    return 0;
  }
  if (decide_set) {
    int sat = 0;
    OwnedStr witness;
    check(tl_pi_decision(g.g, decide_k, &limits, &sat, witness.out()));
    json j{{"k", decide_k}, {"satisfiable", sat == 1}, {"witness", witness.str()}};
    print_result(o.format,
                 {{"k", std::to_string(decide_k)},
                  {"satisfiable", sat ? "yes" : "no"},
                  {"witness", witness.str()}},
                 j);
    return 0;
  }
  int pi = 0;
  OwnedStr witness;
  check(tl_pi(g.g, &limits, &pi, witness.out()));
  json j{{"pi", pi}, {"witness", witness.str()}};
  print_result(o.format, {{"pi", std::to_string(pi)}, {"witness", witness.str()}}, j);
  return 0;
}

int run_tau(const Common& o, const std::string& order, const std::vector<std::string>& audit) {
  tl_limits limits = make_limits(o);
  if (!audit.empty()) {
    auto [lo, hi] = parse_range(audit[1], "--audit range");
    OwnedReport rep;
    check(tl_report_tau_audit(audit[0].c_str(), lo, hi, &limits, rep.out()));
    print_report(o.format, rep.r);
    return 0;
  }
  OwnedGraph g = load_graph(o);
  OwnedStr tau, seq;
  if (!order.empty()) {
    check(tl_tau_of_order(g.g, order.c_str(), &limits, tau.out(), seq.out()));
    auto [num, den] = split_rational(tau.str());
    json j{{"tau_num", num}, {"tau_den", den}, {"order", order}, {"sequence", seq.str()}};
    print_result(
        o.format,
        {{"tau", tau.str()}, {"order", order}, {"sequence", seq.str()}}, j);
    return 0;
  }
  OwnedStr best_order;
  check(tl_tau(g.g, &limits, tau.out(), best_order.out(), seq.out()));
  auto [num, den] = split_rational(tau.str());
  json j{{"tau_num", num}, {"tau_den", den}, {"order", best_order.str()}, {"sequence", seq.str()}};
  print_result(
      o.format,
      {{"tau", tau.str()}, {"order", best_order.str()}, {"sequence", seq.str()}}, j);
  return 0;
}

int run_sequence(const Common& o, const std::string& order) {
  tl_limits limits = make_limits(o);
  OwnedGraph g = load_graph(o);
  OwnedStr seq;
  if (!order.empty()) {
    OwnedStr tau;
    check(tl_tau_of_order(g.g, order.c_str(), &limits, tau.out(), seq.out()));
  } else {
    OwnedStr tau, best;
    check(tl_tau(g.g, &limits, tau.out(), best.out(), seq.out()));
  }
  json j{{"sequence", seq.str()}};
  print_result(o.format, {{"sequence", seq.str()}}, j);
  return 0;
}

int run_jaco(const Common& o, const std::string& m_s, const std::string& c_s,
             const std::string& n_s, bool emit, bool summary, const std::string& check_name) {
  tl_limits limits = make_limits(o);
  auto need = [&](const std::string& value, const std::string& flag) {
    if (value.empty()) throw CliError{2, "jaco: " + flag + " is required here"};
    return value;
  };
  if (!check_name.empty()) {
    OwnedReport rep;
    auto [n_lo, n_hi] = parse_range(need(n_s, "--n"), "--n");
    if (check_name == "bokang") {
      check(tl_report_degree_bounds(n_lo, n_hi, &limits, o.jobs, rep.out()));
    } else if (check_name == "delta-step") {
      check(tl_report_delta_step(n_lo, n_hi, rep.out()));
    } else if (check_name == "hope") {
      check(tl_report_hope(n_lo, n_hi, rep.out()));
    } else if (check_name == "pi-range") {
      auto [c_lo, c_hi] = parse_range(need(c_s, "--c"), "--c");
      if (c_lo != c_hi) throw CliError{2, "jaco --check pi-range: --c must be a single value"};
      check(tl_report_pi_range(c_lo, n_lo, n_hi, &limits, rep.out()));
    } else if (check_name == "conj35") {
      auto [m_lo, m_hi] = parse_range(need(m_s, "--m"), "--m");
      auto [c_lo, c_hi] = parse_range(need(c_s, "--c"), "--c");
      check(tl_report_conjecture(m_lo, m_hi, c_lo, c_hi, n_lo, n_hi, &limits, o.certs.c_str(),
                                 o.jobs, rep.out()));
    } else {
      throw CliError{2, "jaco: unknown check '" + check_name +
                            "' (want bokang, conj35, delta-step, pi-range or hope)"};
    }
    print_report(o.format, rep.r);
    return 0;
  }
  auto single = [&](const std::string& value, const std::string& flag) {
    auto [lo, hi] = parse_range(need(value, flag), flag);
    if (lo != hi) throw CliError{2, "jaco: " + flag + " must be a single value here"};
    return lo;
  };
  int m = single(m_s, "--m"), c = single(c_s, "--c"), n = single(n_s, "--n");
  if (emit) {
    OwnedGraph g;
    check(tl_graph_from_jaco(m, c, n, g.out()));
    OwnedStr text;
    check(tl_graph_format(g.g, text.out()));
    std::cout << text.str();
    return 0;
  }
  (void)summary;  // the default action
  int delta = 0, prime = 0, hope_order = 0, hope_complete = 0;
  OwnedStr jaconian;
  check(tl_jaco_summary(m, c, n, &delta, jaconian.out(), &prime, &hope_order, &hope_complete));
  OwnedGraph g;
  check(tl_graph_from_jaco(m, c, n, g.out()));
  int pi = 0;
  check(tl_pi(g.g, &limits, &pi, nullptr));
  json j{{"delta_max", delta}, {"jaconian", jaconian.str()},   {"prime", prime},
         {"hope_order", hope_order}, {"hope_complete", hope_complete == 1}, {"pi", pi}};
  print_result(o.format,
               {{"delta_max", std::to_string(delta)},
                {"jaconian", jaconian.str()},
                {"prime", std::to_string(prime)},
                {"hope_order", std::to_string(hope_order)},
                {"hope_complete", hope_complete ? "yes" : "no"},
                {"pi", std::to_string(pi)}},
               j);
  return 0;
}

int run_metrics(const Common& o, bool radius, bool reach, int atlas_n, bool check_diam,
                bool check_radius) {
  tl_limits limits = make_limits(o);
  if (atlas_n > 0) {
    OwnedReport rep;
    if (check_radius && check_diam)
      throw CliError{2, "metrics: pick one of --check-radius / --check-diam"};
    if (check_radius)
      check(tl_report_radius_atlas(atlas_n, &limits, rep.out()));
    else
      check(tl_report_reach_atlas(atlas_n, &limits, o.certs.c_str(), rep.out()));
    print_report(o.format, rep.r);
    return 0;
  }
  if (check_diam || check_radius)
    throw CliError{2, "metrics: --check-diam/--check-radius need --atlas N"};
  if (!radius && !reach) radius = reach = true;
  OwnedGraph g = load_graph(o);
  int pi_r = 0, pi_R = 0, diam = 0, pi = 0;
  OwnedStr rad_witness, reach_witness;
  check(tl_radius_reach(g.g, &limits, &pi_r, &pi_R, &diam, &pi, rad_witness.out(),
                        reach_witness.out()));
  std::string diam_str = diam < 0 ? "inf" : std::to_string(diam);
  std::vector<std::pair<std::string, std::string>> kv{{"pi", std::to_string(pi)},
                                                      {"diam", diam_str}};
  json j{{"pi", pi}};
  j["diam"] = diam < 0 ? json(nullptr) : json(diam);
  if (radius) {
    kv.emplace_back("pi_r", std::to_string(pi_r));
    kv.emplace_back("radius_witness", rad_witness.str());
    j["pi_r"] = pi_r;
    j["radius_witness"] = rad_witness.str();
  }
  if (reach) {
    kv.emplace_back("pi_R", std::to_string(pi_R));
    kv.emplace_back("reach_witness", reach_witness.str());
    j["pi_R"] = pi_R;
    j["reach_witness"] = reach_witness.str();
  }
  print_result(o.format, kv, j);
  return 0;
}

bool cycle_needs_four(int m) {
  return m == 5 || m == 7 || m == 9 || m == 10 || m == 14 || m == 17;
}

int run_subdivide(const Common& o, int k, int cycle_m, const std::vector<int>& attach,
                  const std::vector<std::string>& h_args, bool verify) {
  tl_limits limits = make_limits(o);
  OwnedGraph base = load_graph(o);
  int chosen = (k > 0 ? 1 : 0) + (cycle_m > 0 ? 1 : 0) + (h_args.empty() ? 0 : 1);
  if (chosen != 1) throw CliError{2, "subdivide: pick exactly one of --k, --cycle, --h"};

  OwnedGraph result;
  OwnedGraph h;
  std::string construction;
  if (k > 0) {
    construction = "k=" + std::to_string(k);
    check(tl_graph_subdivide_k(base.g, k, result.out()));
  } else if (cycle_m > 0) {
    construction = "cycle m=" + std::to_string(cycle_m);
    int au = 0, aw = 0;
    if (!attach.empty()) {
      au = attach[0];
      aw = attach[1];
    }
    check(tl_graph_subdivide_cycle(base.g, cycle_m, au, aw, result.out()));
  } else {
    construction = "h=" + h_args[0];
    std::ifstream in(h_args[0]);
    if (!in) throw CliError{2, "cannot open " + h_args[0]};
    std::stringstream buf;
    buf << in.rdbuf();
    check(tl_graph_parse(buf.str().c_str(), h.out()));
    auto parse_vertex = [&](const std::string& s) {
      try {
        return std::stoi(s);
      } catch (const std::exception&) {
        throw CliError{2, "subdivide --h: attach vertices must be integers, got '" + s + "'"};
      }
    };
    check(tl_graph_subdivide_h(base.g, h.g, parse_vertex(h_args[1]), parse_vertex(h_args[2]),
                               result.out()));
  }

  if (!verify) {
    OwnedStr text;
    check(tl_graph_format(result.g, text.out()));
    std::cout << text.str();
    return 0;
  }

  int pi_base = 0;
  check(tl_pi(base.g, &limits, &pi_base, nullptr));
  std::optional<int> bound;
  if (k > 0) {
    if (k >= 3) bound = pi_base + 1;  // no bound is claimed for k = 1, 2
  } else if (cycle_m > 0) {
    bound = pi_base + (cycle_needs_four(cycle_m) ? 2 : 1);
  } else {
    int pi_h = 0;
    check(tl_pi(h.g, &limits, &pi_h, nullptr));
    bound = pi_base + pi_h - 1;
  }
  int pi_result = 0;
  check(tl_pi(result.g, &limits, &pi_result, nullptr));
  std::string bound_str = bound ? std::to_string(*bound) : "none";
  std::string within = bound ? (pi_result <= *bound ? "yes" : "NO") : "n/a";
  json j{{"construction", construction},
         {"order", tl_graph_order(result.g)},
         {"pi_base", pi_base},
         {"pi", pi_result},
         {"bound", bound ? json(*bound) : json(nullptr)},
         {"within_bound", bound ? json(pi_result <= *bound) : json(nullptr)}};
  print_result(o.format,
               {{"construction", construction},
                {"order", std::to_string(tl_graph_order(result.g))},
                {"pi_base", std::to_string(pi_base)},
                {"pi", std::to_string(pi_result)},
                {"bound", bound_str},
                {"within_bound", within}},
               j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Thue colouring workbench"};
  app.set_version_flag("--version", tl_version());
  app.require_subcommand(1);

  Common pi_opts;
  int decide_k = 0;
  std::string check_colouring;
  auto* cmd_pi = app.add_subcommand("pi", "Thue chromatic number with witness");
  add_input_options(cmd_pi, pi_opts);
  add_run_options(cmd_pi, pi_opts);
  auto* decide_opt =
      cmd_pi->add_option("--decide", decide_k, "test k colours instead of minimizing")
          ->check(CLI::PositiveNumber);
  cmd_pi->add_option("--check", check_colouring, "validate a colouring 'c1 c2 ... cn'");

  Common tau_opts;
  std::string tau_order;
  std::vector<std::string> tau_audit;
  auto* cmd_tau = app.add_subcommand("tau", "minimum averaged pi over deletion orders");
  add_input_options(cmd_tau, tau_opts);
  add_run_options(cmd_tau, tau_opts);
  cmd_tau->add_option("--order", tau_order, "explicit order: 1-based sorted-edge indices");
  cmd_tau->add_flag("--optimal", "minimize over all orders (the default)");
  cmd_tau->add_option("--audit", tau_audit, "closed-form audit: FAMILY LO..HI")
      ->expected(2);

  Common seq_opts;
  std::string seq_order;
  auto* cmd_seq = app.add_subcommand("sequence", "pi sequence along a deletion order");
  add_input_options(cmd_seq, seq_opts);
  add_run_options(cmd_seq, seq_opts);
  cmd_seq->add_option("--order", seq_order, "explicit order (default: a minimizing order)");

  Common jaco_opts;
  std::string jaco_m, jaco_c, jaco_n, jaco_check;
  bool jaco_emit = false, jaco_summary = false;
  auto* cmd_jaco = app.add_subcommand("jaco", "linear Jaco graph construction and sweeps");
  add_run_options(cmd_jaco, jaco_opts);
  cmd_jaco->add_option("--m", jaco_m, "rule slope (or LO..HI for sweeps)");
  cmd_jaco->add_option("--c", jaco_c, "rule offset (or LO..HI for sweeps)");
  cmd_jaco->add_option("--n", jaco_n, "order (or LO..HI for sweeps)");
  cmd_jaco->add_flag("--emit", jaco_emit, "print the underlying graph as an edge list");
  cmd_jaco->add_flag("--summary", jaco_summary, "print the structure summary (default)");
  cmd_jaco->add_option("--check", jaco_check,
                       "sweep: bokang, conj35, delta-step, pi-range or hope");

  Common metrics_opts;
  bool flag_radius = false, flag_reach = false, flag_check_diam = false,
       flag_check_radius = false;
  int atlas_n = 0;
  auto* cmd_metrics = app.add_subcommand("metrics", "colour distance radius and reach");
  add_input_options(cmd_metrics, metrics_opts);
  add_run_options(cmd_metrics, metrics_opts);
  cmd_metrics->add_flag("--radius", flag_radius, "report the least positive same-colour distance");
  cmd_metrics->add_flag("--reach", flag_reach, "report the largest same-colour distance");
  cmd_metrics->add_option("--atlas", atlas_n, "run over all connected graphs of this order")
      ->check(CLI::PositiveNumber);
  cmd_metrics->add_flag("--check-diam", flag_check_diam, "atlas: compare reach to the diameter");
  cmd_metrics->add_flag("--check-radius", flag_check_radius, "atlas: check the radius values");

  Common sub_opts;
  int sub_k = 0, sub_cycle = 0;
  std::vector<int> sub_attach;
  std::vector<std::string> sub_h;
  bool sub_verify = false;
  auto* cmd_sub = app.add_subcommand("subdivide", "edge subdivision constructions");
  cmd_sub->set_help_flag("--help", "print help");  // frees -h, --h names the gadget graph
  add_input_options(cmd_sub, sub_opts);
  add_run_options(cmd_sub, sub_opts);
  cmd_sub->add_option("--k", sub_k, "insert a k-vertex path into each edge")
      ->check(CLI::PositiveNumber);
  cmd_sub->add_option("--cycle", sub_cycle, "insert an m-cycle into each edge")
      ->check(CLI::PositiveNumber);
  cmd_sub->add_option("--attach", sub_attach, "cycle attachment vertices U W")->expected(2);
  cmd_sub->add_option("--h", sub_h, "insert a graph: FILE U W")->expected(3);
  cmd_sub->add_flag("--verify-bounds", sub_verify, "solve pi of the result against its bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_pi->parsed())
      return run_pi(pi_opts, decide_k, decide_opt->count() > 0, check_colouring);
    if (cmd_tau->parsed()) return run_tau(tau_opts, tau_order, tau_audit);
    if (cmd_seq->parsed()) return run_sequence(seq_opts, seq_order);
    if (cmd_jaco->parsed())
      return run_jaco(jaco_opts, jaco_m, jaco_c, jaco_n, jaco_emit, jaco_summary, jaco_check);
    if (cmd_metrics->parsed())
      return run_metrics(metrics_opts, flag_radius, flag_reach, atlas_n, flag_check_diam,
                         flag_check_radius);
    if (cmd_sub->parsed())
      return run_subdivide(sub_opts, sub_k, sub_cycle, sub_attach, sub_h, sub_verify);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
