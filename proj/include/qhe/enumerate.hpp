#pragma once

// Brute-force N-cycle work distribution by enumerating every sequence of
// stroke-boundary states. Independent of the counting-field machinery and
// used as its oracle.
//
// Per cycle the Otto engine visits (after heating, after cooling) and does
// work quantum * (1[e after heating] - 1[e after cooling]); the three-stroke
// engine visits (after heating, after cooling) and does +omega if excited
// before the flip, -omega otherwise.

#include <utility>
#include <vector>

#include "qhe/fcs.hpp"

namespace qhe {

inline constexpr int kMaxEnumeratedCycles = 12;

struct WorkDistribution {
  double work_quantum = 0.0;
  int cycles = 0;
  /// probability[k + cycles] is P(w = k * work_quantum), k in [-cycles, cycles].
  std::vector<double> probability;

  std::vector<std::pair<double, double>> support() const;
  double total() const;
  double mean() const;
  double variance() const;
};

/// OpenMP kernel; parallel over path prefixes with a fixed-order reduction,
/// so the result does not depend on the thread count or schedule.
WorkDistribution enumerate_work_distribution(const EngineConfig& cfg, int N);

/// Serial depth-first reference for the kernel above.
WorkDistribution enumerate_work_distribution_serial(const EngineConfig& cfg, int N);

}  // namespace qhe
