#pragma once

// Four-stroke Otto cycle with thermal-operation heat strokes.
//
// Points 1..4 start the strokes heating (gap omega_H), expansion, cooling
// (gap omega_C), compression. Heat into the qubit is positive: Q_H >= 0 and
// Q_C <= 0 in engine operation, so W = Q_H + Q_C.

#include "qhe/core_maps.hpp"

namespace qhe {

enum class Regime { markov, nonmarkov };

struct OttoConfig {
  double omega_H;
  double omega_C;
  double T_H;
  double T_C;
  double lambda_H;
  double lambda_C;

  /// omega_H > omega_C > 0, T_H > T_C > 0, lambdas in [0,1].
  void validate() const;

  double beta_H() const { return 1.0 / T_H; }
  double beta_C() const { return 1.0 / T_C; }
  double work_quantum() const { return omega_H - omega_C; }
  double carnot_efficiency() const { return 1.0 - T_C / T_H; }

  GibbsStochasticMatrix hot_map() const { return build_map({omega_H, beta_H(), lambda_H}); }
  GibbsStochasticMatrix cold_map() const { return build_map({omega_C, beta_C(), lambda_C}); }

  /// Thermalizing strokes (markov) or extremal thermal operations (nonmarkov).
  static OttoConfig with_regime(double omega_H, double omega_C, double T_H, double T_C,
                                Regime regime);
};

struct OttoCycleReport {
  PopulationVector p1;
  PopulationVector p2;
  PopulationVector p3;
  PopulationVector p4;
  double W;
  double Q_H;
  double Q_C;
  double eta;
  /// Set when eta >= eta_C or W <= 0.
  bool not_an_engine;
};

PopulationVector otto_steady_state(const OttoConfig& cfg);

OttoCycleReport otto_cycle_report(const OttoConfig& cfg);

struct ExcitedPopulations {
  double p_e1;
  double p_e3;
};

/// Closed-form stationary excited populations at points 1 and 3 for the two
/// pure regimes. Throws RegimeMismatch if the lambdas do not match.
ExcitedPopulations analytic_populations(const OttoConfig& cfg, Regime regime);

}  // namespace qhe
