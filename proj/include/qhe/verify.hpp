#pragma once

// Invariant suites run by `qhe verify` and by the acceptance binary.

#include <string>
#include <vector>

namespace qhe::verify {

struct CheckResult {
  std::string suite;
  std::string check;
  double residual;
  double tolerance;
  bool passed;
};

struct Options {
  /// Added to entry (g, g) of every map in the gibbs-fixed-point suite.
  /// Nonzero only for mutation testing of the suite itself.
  double map_perturbation = 0.0;
};

/// gibbs-fixed-point, first-law, oracle-equivalence, microscopic-eto.
std::vector<std::string> suite_names();

/// Throws InvalidParameter for unknown names; "all" runs every suite.
std::vector<CheckResult> run_suite(const std::string& name, const Options& opts = {});

}  // namespace qhe::verify
