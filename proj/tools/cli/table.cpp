#include "cli/table.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "qhe/version.hpp"

namespace qhe::cli {

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_csv(const Table& t, std::ostream& os) {
  os << "# command=" << t.command << " version=" << kVersion;
  for (const auto& [k, v] : t.parameters) os << ' ' << k << '=' << v;
  os << " columns=";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
    os << '\n';
  }
}

void write_json(const Table& t, std::ostream& os) {
  nlohmann::ordered_json doc;
  doc["metadata"]["command"] = t.command;
  doc["metadata"]["version"] = kVersion;
  auto& params = doc["metadata"]["parameters"];
  params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.parameters) params[k] = v;
  doc["metadata"]["columns"] = t.columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) doc["rows"].push_back(row);
  os << doc.dump(1) << '\n';
}

}  // namespace qhe::cli
