/// \file csv.hpp
/// Tabular output as CSV or its JSON mirror. Every floating-point value is
/// written as the shortest decimal that round-trips to the exact binary
/// float.
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace bohmlw {

/// Shortest round-trip decimal representation.
std::string format_double(double v);

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::string> comments;  // emitted as '# ...' lines above the header
  std::vector<std::vector<Cell>> rows;

  void add_comment(std::string text) { comments.push_back(std::move(text)); }
  std::vector<Cell>& new_row() {
    rows.emplace_back();
    rows.back().reserve(columns.size());
    return rows.back();
  }
};

void write_csv(std::ostream& os, const Table& t);
void write_json(std::ostream& os, const Table& t);

}  // namespace bohmlw
