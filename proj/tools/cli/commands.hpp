#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "cli/table.hpp"

namespace qhe::cli {

enum ExitCode : int { kOk = 0, kValidationError = 1, kVerificationFailure = 2, kIoError = 3 };

struct RunConfig {
  /// fig1 | fig4 | fig5 | fig6 | sweep | micro-report | verify
  std::string command;
  std::map<std::string, std::string> overrides;
  /// "-" writes to the provided output stream.
  std::string out = "-";
  OutputFormat format = OutputFormat::csv;
  /// verify only.
  std::string suite = "all";
};

/// Builds the data table of a figure/sweep/report command. Throws
/// InvalidParameter for unknown commands or keys.
Table build_table(const RunConfig& cfg);

/// Executes a command and maps failures onto exit codes.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and runs.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qhe::cli
