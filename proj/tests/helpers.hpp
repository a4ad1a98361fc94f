#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "core/errors.hpp"
#include "core/graph.hpp"
#include "doctest.h"

// Asserts that the expression throws Error with the given code.
#define CHECK_FAILS_WITH(expr, expected_code)                    \
  do {                                                           \
    bool thrown_ = false;                                        \
    try {                                                        \
      (void)(expr);                                              \
    } catch (const thuelab::Error& e_) {                         \
      thrown_ = true;                                            \
      CHECK(e_.code() == (expected_code));                       \
    }                                                            \
    CHECK_MESSAGE(thrown_, #expr " was expected to fail");       \
  } while (0)

namespace test_util {

inline thuelab::Graph graph_of(int n, std::initializer_list<std::pair<int, int>> pairs) {
  return thuelab::make_graph(n, std::vector<std::pair<int, int>>(pairs));
}

}  // namespace test_util
