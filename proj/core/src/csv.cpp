#include "bohmlw/csv.hpp"

#include <charconv>

#include <json.hpp>

namespace bohmlw {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::string cell_text(const Cell& c) {
  if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
  if (std::holds_alternative<std::int64_t>(c)) return std::to_string(std::get<std::int64_t>(c));
  return std::get<std::string>(c);
}

}  // namespace

void write_csv(std::ostream& os, const Table& t) {
  for (const std::string& c : t.comments) os << "# " << c << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    os << t.columns[i] << (i + 1 < t.columns.size() ? "," : "");
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << cell_text(row[i]) << (i + 1 < row.size() ? "," : "");
    os << "\n";
  }
}

void write_json(std::ostream& os, const Table& t) {
  nlohmann::json j;
  j["columns"] = t.columns;
  if (!t.comments.empty()) j["comments"] = t.comments;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const Cell& c : row) {
      if (std::holds_alternative<double>(c))
        r.push_back(std::get<double>(c));
      else if (std::holds_alternative<std::int64_t>(c))
        r.push_back(std::get<std::int64_t>(c));
      else
        r.push_back(std::get<std::string>(c));
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  os << j.dump(2) << "\n";
}

}  // namespace bohmlw
