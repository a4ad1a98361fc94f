#pragma once

#include <string>
#include <vector>

namespace thuelab {

// Rectangular result table used by sweeps and audits. Cells are strings so a
// row can mix numbers, fractions, flags, and markers like "timeout".
struct Report {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> cells);
  bool column_all(const std::string& name, const std::string& value) const;
  int column_index(const std::string& name) const;  // -1 when absent
};

std::string to_csv(const Report& r);
std::string to_table(const Report& r);  // aligned, human readable

}  // namespace thuelab
