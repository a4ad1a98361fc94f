/* thuelab: exact solvers for non-repetitive (square-free) vertex colourings
 * of small graphs, deletion-order tau indices, linear Jaco graph
 * constructions, distance metrics over minimum colourings, and the sweep
 * reports built on top of them.
 *
 * Conventions:
 *   - every function returning tl_status sets the thread-local message
 *     readable via tl_last_error() on failure;
 *   - char** outputs receive malloc'd strings owned by the caller, released
 *     with tl_string_free(); passing NULL skips that output;
 *   - graphs and reports are opaque handles released with the matching
 *     _free();
 *   - vertices are 1-based; colourings serialize as "c1 c2 ... cn";
 *     deletion orders as space-separated "u-v" pairs; rationals as "p/q"
 *     (or a bare integer when q = 1).
 */
#ifndef THUELAB_H
#define THUELAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tl_graph tl_graph;
typedef struct tl_report tl_report;

typedef enum tl_status {
  TL_OK = 0,
  TL_PARSE = 1,    /* malformed text input or generator spec */
  TL_INVALID = 2,  /* domain or validation error */
  TL_LIMIT = 3,    /* a size guard was exceeded */
  TL_BUDGET = 4,   /* search budget exhausted */
  TL_INTERNAL = 5  /* invariant violation: a bug, never a result */
} tl_status;

/* Resource guards. max_n bounds solver input order, enum_max_n bounds
 * colouring enumeration, max_epsilon bounds the deletion-order subset table,
 * node_budget counts elementary search steps. */
typedef struct tl_limits {
  int max_n;
  int enum_max_n;
  int max_epsilon;
  uint64_t node_budget;
} tl_limits;

void tl_limits_default(tl_limits* limits);

const char* tl_version(void);
const char* tl_last_error(void); /* valid until the next call on this thread */
void tl_string_free(char* s);

/* ---- graphs ---- */

/* Text format: '#' comments, a "n edge-count" header line, then "u v"
 * lines. Writers emit edges sorted ascending. */
tl_status tl_graph_parse(const char* text, tl_graph** out);

/* Generator mini-language: path:7 cycle:9 complete:4 star:5 edgeless:6
 * jaco:1,0,8 caterpillar:2,0,3 random:8,10 (seed matters only for random). */
tl_status tl_graph_generate(const char* spec, uint64_t seed, tl_graph** out);

tl_status tl_graph_format(const tl_graph* g, char** text);
void tl_graph_free(tl_graph* g);
int tl_graph_order(const tl_graph* g);
int tl_graph_size(const tl_graph* g);

tl_status tl_graph_add_edge(const tl_graph* g, int u, int v, tl_graph** out);
tl_status tl_graph_delete_edge(const tl_graph* g, int u, int v, tl_graph** out);
tl_status tl_graph_line_graph(const tl_graph* g, tl_graph** out);

/* Every edge is replaced by a fresh gadget in sorted edge order; inserted
 * vertices take ids n+1, n+2, ... subdivide_cycle with u == 0 and w == 0
 * attaches at antipodal cycle vertices. */
tl_status tl_graph_subdivide_k(const tl_graph* g, int k, tl_graph** out);
tl_status tl_graph_subdivide_cycle(const tl_graph* g, int m, int u, int w, tl_graph** out);
tl_status tl_graph_subdivide_h(const tl_graph* g, const tl_graph* h, int hu, int hw,
                               tl_graph** out);

/* ---- exact solvers ---- */

/* Smallest colour count admitting a proper colouring whose colour word is
 * square-free along every simple path, with a deterministic witness. */
tl_status tl_pi(const tl_graph* g, const tl_limits* limits, int* pi, char** witness);

/* Decision variant: *sat = 1 and a witness if at most k colours suffice. */
tl_status tl_pi_decision(const tl_graph* g, int k, const tl_limits* limits, int* sat,
                         char** witness);

/* Validates a colouring; *ok = 1 when square-free on all paths, otherwise 0
 * with the offending vertex path in *witness_path. */
tl_status tl_check_colouring(const tl_graph* g, const char* colouring, int* ok,
                             char** witness_path);

/* Minimum over all edge-deletion orders of the averaged pi sequence, by the
 * subset recurrence; order and the pi sequence along it are returned. */
tl_status tl_tau(const tl_graph* g, const tl_limits* limits, char** tau, char** order,
                 char** sequence);

/* Same average for one explicit order, given as comma-separated 1-based
 * indices into the sorted edge list. */
tl_status tl_tau_of_order(const tl_graph* g, const char* order_indices,
                          const tl_limits* limits, char** tau, char** sequence);

/* Least positive / largest same-colour distance over all minimum
 * colourings (up to renaming), with witnesses. diam is -1 when infinite. */
tl_status tl_radius_reach(const tl_graph* g, const tl_limits* limits, int* pi_r, int* pi_R,
                          int* diam, int* pi, char** radius_witness, char** reach_witness);

/* ---- linear Jaco graphs ---- */

/* Underlying graph of the n-vertex digraph with rule f(x) = m*x + c. */
tl_status tl_graph_from_jaco(int m, int c, int n, tl_graph** out);

/* Structure summary: max degree, its attaining vertices (comma separated),
 * the lowest such vertex, and the order/completeness of the tail subgraph
 * past that vertex. */
tl_status tl_jaco_summary(int m, int c, int n, int* delta, char** jaconian, int* prime,
                          int* hope_order, int* hope_complete);

/* ---- reports ---- */

void tl_report_free(tl_report* r);
int tl_report_rows(const tl_report* r);
int tl_report_cols(const tl_report* r);
tl_status tl_report_title(const tl_report* r, char** out);
tl_status tl_report_column(const tl_report* r, int col, char** out);
tl_status tl_report_cell(const tl_report* r, int row, int col, char** out);
tl_status tl_report_csv(const tl_report* r, char** out);
tl_status tl_report_table(const tl_report* r, char** out);

/* m=1, c=0 family: degree bounds on pi, one row per order. */
tl_status tl_report_degree_bounds(int n_lo, int n_hi, const tl_limits* limits, int jobs,
                           tl_report** out);
/* m=1, c=0 family: max degree step between consecutive orders. */
tl_status tl_report_delta_step(int n_lo, int n_hi, tl_report** out);
/* m=1, c=0 family: completeness and order of the tail subgraph. */
tl_status tl_report_hope(int n_lo, int n_hi, tl_report** out);
/* m=0 family: pi from clique-union structure vs the solver. */
tl_status tl_report_pi_range(int c, int n_lo, int n_hi, const tl_limits* limits,
                             tl_report** out);
/* m >= 2, c >= 1 sweep of pi <= delta_max + delta_min; violations are
 * written to cert_dir (pass NULL or "" to skip certificates). */
tl_status tl_report_conjecture(int m_lo, int m_hi, int c_lo, int c_hi, int n_lo, int n_hi,
                               const tl_limits* limits, const char* cert_dir, int jobs,
                               tl_report** out);
/* family is "path", "cycle", "star" or "complete". */
tl_status tl_report_tau_audit(const char* family, int lo, int hi, const tl_limits* limits,
                              tl_report** out);
/* All connected graphs of the given order, up to isomorphism (order <= 7). */
tl_status tl_report_radius_atlas(int n, const tl_limits* limits, tl_report** out);
tl_status tl_report_reach_atlas(int n, const tl_limits* limits, const char* cert_dir,
                                tl_report** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* THUELAB_H */
