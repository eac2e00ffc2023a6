#pragma once

// Flat numeric result tables. The first output line (CSV) or the metadata
// object (JSON) records the command, version, full parameter set and column
// names; every following row is numeric.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qhe::cli {

enum class OutputFormat { csv, json };

struct Table {
  std::string command;
  /// Resolved parameters, in output order.
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// 12 significant digits.
void write_csv(const Table& t, std::ostream& os);
/// Shortest round-trip representation of every double.
void write_json(const Table& t, std::ostream& os);

std::string format_number(double x);

}  // namespace qhe::cli
