#pragma once

#include <stdexcept>
#include <string>

namespace thuelab {

// Every failure mode the library reports. Codes group into four categories:
// input/validation problems, resource guards (size limits), exhausted search
// budgets, and internal invariant violations (always a bug).
enum class errc {
  parse_error,
  loop_edge,
  vertex_out_of_range,
  empty_graph,
  edge_absent,
  edge_present,
  no_edges,
  size_too_small,
  too_few_vertices,
  attach_too_close,
  colouring_incomplete,
  not_a_thue_colouring,
  not_minimum,
  not_a_permutation,
  out_of_range,
  graph_too_large,
  too_many_edges,
  budget_exceeded,
  internal,
};

class Error : public std::runtime_error {
public:
  Error(errc c, std::string msg) : std::runtime_error(std::move(msg)), code_(c) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw Error(c, msg); }

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::parse_error: return "parse_error";
    case errc::loop_edge: return "loop_edge";
    case errc::vertex_out_of_range: return "vertex_out_of_range";
    case errc::empty_graph: return "empty_graph";
    case errc::edge_absent: return "edge_absent";
    case errc::edge_present: return "edge_present";
    case errc::no_edges: return "no_edges";
    case errc::size_too_small: return "size_too_small";
    case errc::too_few_vertices: return "too_few_vertices";
    case errc::attach_too_close: return "attach_too_close";
    case errc::colouring_incomplete: return "colouring_incomplete";
    case errc::not_a_thue_colouring: return "not_a_thue_colouring";
    case errc::not_minimum: return "not_minimum";
    case errc::not_a_permutation: return "not_a_permutation";
    case errc::out_of_range: return "out_of_range";
    case errc::graph_too_large: return "graph_too_large";
    case errc::too_many_edges: return "too_many_edges";
    case errc::budget_exceeded: return "budget_exceeded";
    case errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace thuelab
