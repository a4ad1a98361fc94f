#include "core/report.hpp"

#include <algorithm>
#include <sstream>

#include "core/errors.hpp"

namespace thuelab {

void Report::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns.size())
    fail(errc::internal, "report row width does not match column count");
  rows.push_back(std::move(cells));
}

int Report::column_index(const std::string& name) const {
  auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) return -1;
  return static_cast<int>(it - columns.begin());
}

bool Report::column_all(const std::string& name, const std::string& value) const {
  int idx = column_index(name);
  if (idx < 0) fail(errc::internal, "report has no column '" + name + "'");
  for (const auto& row : rows)
    if (row[idx] != value) return false;
  return true;
}

namespace {

// cells never contain commas or quotes by construction; escape defensively
std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_csv(const Report& r) {
  std::ostringstream os;
  for (size_t i = 0; i < r.columns.size(); ++i)
    os << (i ? "," : "") << csv_cell(r.columns[i]);
  os << '\n';
  for (const auto& row : r.rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << '\n';
  }
  return os.str();
}

std::string to_table(const Report& r) {
  std::vector<size_t> width(r.columns.size());
  for (size_t i = 0; i < r.columns.size(); ++i) width[i] = r.columns[i].size();
  for (const auto& row : r.rows)
    for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());

  std::ostringstream os;
  if (!r.title.empty()) os << r.title << '\n';
  auto emit = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      os << cells[i];
      if (i + 1 < cells.size()) os << std::string(width[i] - cells[i].size() + 2, ' ');
    }
    os << '\n';
  };
  emit(r.columns);
  std::vector<std::string> rule;
  for (size_t i = 0; i < r.columns.size(); ++i) rule.push_back(std::string(width[i], '-'));
  emit(rule);
  for (const auto& row : r.rows) emit(row);
  return os.str();
}

}  // namespace thuelab
