#include <cstring>
#include <string>

#include "doctest.h"
#include "thuelab.h"

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { tl_string_free(p); }
  std::string get() const { return p ? p : ""; }
};

struct G {
  tl_graph* p = nullptr;
  ~G() { tl_graph_free(p); }
};

struct R {
  tl_report* p = nullptr;
  ~R() { tl_report_free(p); }
};

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("version and default limits") {
  CHECK(std::strlen(tl_version()) > 0);
  tl_limits limits;
  tl_limits_default(&limits);
  CHECK(limits.max_n > 0);
  CHECK(limits.enum_max_n > 0);
  CHECK(limits.max_epsilon > 0);
  CHECK(limits.node_budget > 0);
}

TEST_CASE("graph round trip and accessors") {
  G g;
  REQUIRE(tl_graph_parse("4 3\n1 2\n2 3\n3 4\n", &g.p) == TL_OK);
  CHECK(tl_graph_order(g.p) == 4);
  CHECK(tl_graph_size(g.p) == 3);
  Str text;
  REQUIRE(tl_graph_format(g.p, &text.p) == TL_OK);
  CHECK(text.get() == "4 3\n1 2\n2 3\n3 4\n");

  G bigger;
  REQUIRE(tl_graph_add_edge(g.p, 1, 4, &bigger.p) == TL_OK);
  CHECK(tl_graph_size(bigger.p) == 4);
  G back;
  REQUIRE(tl_graph_delete_edge(bigger.p, 1, 4, &back.p) == TL_OK);
  Str round;
  REQUIRE(tl_graph_format(back.p, &round.p) == TL_OK);
  CHECK(round.get() == text.get());

  G line;
  REQUIRE(tl_graph_line_graph(g.p, &line.p) == TL_OK);
  CHECK(tl_graph_order(line.p) == 3);
}

TEST_CASE("failures set a status and a message") {
  G g;
  CHECK(tl_graph_parse("not a graph", &g.p) == TL_PARSE);
  CHECK(std::strlen(tl_last_error()) > 0);
  CHECK(tl_graph_generate("wat:3", 0, &g.p) == TL_PARSE);
  CHECK(tl_graph_parse(nullptr, &g.p) == TL_INVALID);
  CHECK(tl_graph_parse("1 0\n", nullptr) == TL_INVALID);

  G c6;
  REQUIRE(tl_graph_generate("complete:6", 0, &c6.p) == TL_OK);
  tl_limits tiny;
  tl_limits_default(&tiny);
  tiny.node_budget = 1;
  int pi = 0;
  CHECK(tl_pi(c6.p, &tiny, &pi, nullptr) == TL_BUDGET);

  G long_path;
  REQUIRE(tl_graph_generate("path:25", 0, &long_path.p) == TL_OK);
  CHECK(tl_pi(long_path.p, nullptr, &pi, nullptr) == TL_LIMIT);
}

TEST_CASE("pi, decision, and colouring check") {
  G c9;
  REQUIRE(tl_graph_generate("cycle:9", 0, &c9.p) == TL_OK);
  int pi = 0;
  Str witness;
  REQUIRE(tl_pi(c9.p, nullptr, &pi, &witness.p) == TL_OK);
  CHECK(pi == 4);
  CHECK_FALSE(witness.get().empty());

  int ok = 0;
  Str path;
  REQUIRE(tl_check_colouring(c9.p, witness.get().c_str(), &ok, &path.p) == TL_OK);
  CHECK(ok == 1);
  CHECK(path.get().empty());

  int sat = 1;
  REQUIRE(tl_pi_decision(c9.p, 3, nullptr, &sat, nullptr) == TL_OK);
  CHECK(sat == 0);
  REQUIRE(tl_pi_decision(c9.p, 4, nullptr, &sat, nullptr) == TL_OK);
  CHECK(sat == 1);

  G p4;
  REQUIRE(tl_graph_generate("path:4", 0, &p4.p) == TL_OK);
  Str bad_path;
  REQUIRE(tl_check_colouring(p4.p, "1 2 1 2", &ok, &bad_path.p) == TL_OK);
  CHECK(ok == 0);
  CHECK(bad_path.get() == "1 2 3 4");
  CHECK(tl_check_colouring(p4.p, "1 2", &ok, nullptr) == TL_PARSE);
  CHECK(tl_check_colouring(p4.p, "1 2 x 1", &ok, nullptr) == TL_PARSE);
}

TEST_CASE("tau values through the boundary") {
  G c9;
  REQUIRE(tl_graph_generate("cycle:9", 0, &c9.p) == TL_OK);
  Str tau, order, seq;
  REQUIRE(tl_tau(c9.p, nullptr, &tau.p, &order.p, &seq.p) == TL_OK);
  CHECK(tau.get() == "23/10");
  CHECK_FALSE(order.get().empty());
  CHECK(seq.get().substr(0, 1) == "4");

  Str cyclic;
  REQUIRE(tl_tau_of_order(c9.p, "1,2,3,4,5,6,7,8,9", nullptr, &cyclic.p, nullptr) == TL_OK);
  CHECK(cyclic.get() == "27/10");
  Str bad;
  CHECK(tl_tau_of_order(c9.p, "1,2,3", nullptr, &bad.p, nullptr) == TL_INVALID);
  CHECK(tl_tau_of_order(c9.p, "1,2,3,4,5,6,7,8,99", nullptr, &bad.p, nullptr) == TL_INVALID);
}

TEST_CASE("radius and reach through the boundary") {
  G p4;
  REQUIRE(tl_graph_generate("path:4", 0, &p4.p) == TL_OK);
  int pi_r = 0, pi_R = 0, diam = 0, pi = 0;
  Str rw, Rw;
  REQUIRE(tl_radius_reach(p4.p, nullptr, &pi_r, &pi_R, &diam, &pi, &rw.p, &Rw.p) == TL_OK);
  CHECK(pi_r == 2);
  CHECK(pi_R == 3);
  CHECK(diam == 3);
  CHECK(pi == 3);
  CHECK_FALSE(rw.get().empty());
  CHECK_FALSE(Rw.get().empty());
}

TEST_CASE("jaco construction and summary") {
  G g;
  REQUIRE(tl_graph_from_jaco(1, 0, 5, &g.p) == TL_OK);
  Str text;
  REQUIRE(tl_graph_format(g.p, &text.p) == TL_OK);
  CHECK(text.get() == "5 5\n1 2\n2 3\n3 4\n3 5\n4 5\n");

  int delta = 0, prime = 0, hope_order = 0, hope_complete = 0;
  Str jaconian;
  REQUIRE(tl_jaco_summary(1, 0, 5, &delta, &jaconian.p, &prime, &hope_order, &hope_complete) ==
          TL_OK);
  CHECK(delta == 3);
  CHECK(jaconian.get() == "3");
  CHECK(prime == 3);
  CHECK(hope_order == 2);
  CHECK(hope_complete == 1);
  CHECK(tl_graph_from_jaco(1, 0, 0, &g.p) == TL_INVALID);
}

TEST_CASE("subdivisions through the boundary") {
  G p2;
  REQUIRE(tl_graph_generate("path:2", 0, &p2.p) == TL_OK);
  G sub;
  REQUIRE(tl_graph_subdivide_k(p2.p, 1, &sub.p) == TL_OK);
  CHECK(tl_graph_order(sub.p) == 3);

  G ring;
  REQUIRE(tl_graph_subdivide_cycle(p2.p, 4, 0, 0, &ring.p) == TL_OK);
  CHECK(tl_graph_order(ring.p) == 6);
  G too_close;
  CHECK(tl_graph_subdivide_cycle(p2.p, 4, 1, 2, &too_close.p) == TL_INVALID);

  G p3;
  REQUIRE(tl_graph_generate("path:3", 0, &p3.p) == TL_OK);
  G via_h;
  REQUIRE(tl_graph_subdivide_h(p2.p, p3.p, 1, 3, &via_h.p) == TL_OK);
  CHECK(tl_graph_order(via_h.p) == 5);
}

TEST_CASE("reports expose cells, csv, and table text") {
  R rep;
  REQUIRE(tl_report_degree_bounds(1, 6, nullptr, 1, &rep.p) == TL_OK);
  CHECK(tl_report_rows(rep.p) == 6);
  CHECK(tl_report_cols(rep.p) == 8);
  Str title, col, cell, csv, table;
  REQUIRE(tl_report_title(rep.p, &title.p) == TL_OK);
  CHECK_FALSE(title.get().empty());
  REQUIRE(tl_report_column(rep.p, 6, &col.p) == TL_OK);
  CHECK(col.get() == "pi");
  REQUIRE(tl_report_cell(rep.p, 4, 6, &cell.p) == TL_OK);
  CHECK(cell.get() == "3");  // the n=5 row
  REQUIRE(tl_report_csv(rep.p, &csv.p) == TL_OK);
  CHECK(csv.get().find("m,c,n") == 0);
  REQUIRE(tl_report_table(rep.p, &table.p) == TL_OK);
  CHECK_FALSE(table.get().empty());
  CHECK(tl_report_cell(rep.p, 99, 0, &cell.p) == TL_INVALID);
  CHECK(tl_report_cell(rep.p, 0, 99, &cell.p) == TL_INVALID);

  R audit;
  CHECK(tl_report_tau_audit("nope", 3, 4, nullptr, &audit.p) == TL_PARSE);
  REQUIRE(tl_report_tau_audit("path", 4, 6, nullptr, &audit.p) == TL_OK);
  CHECK(tl_report_rows(audit.p) == 3);

  R atlas;
  REQUIRE(tl_report_radius_atlas(4, nullptr, &atlas.p) == TL_OK);
  CHECK(tl_report_rows(atlas.p) == 6);  // connected graphs on four vertices
}

}  // TEST_SUITE
