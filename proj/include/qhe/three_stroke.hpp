#pragma once

// Three-stroke engine at fixed gap omega: heating, coherent population flip
// (the work stroke), cooling.

#include "qhe/core_maps.hpp"

namespace qhe {

struct ThreeStrokeConfig {
  double omega;
  double T_H;
  double T_C;
  double lambda_H;
  double lambda_C;

  void validate() const;

  double beta_H() const { return 1.0 / T_H; }
  double beta_C() const { return 1.0 / T_C; }
  double carnot_efficiency() const { return 1.0 - T_C / T_H; }
  bool is_extremal() const { return lambda_H == 1.0 && lambda_C == 1.0; }

  GibbsStochasticMatrix hot_map() const { return build_map({omega, beta_H(), lambda_H}); }
  GibbsStochasticMatrix cold_map() const { return build_map({omega, beta_C(), lambda_C}); }

  static ThreeStrokeConfig extremal(double omega, double T_H, double T_C) {
    return {omega, T_H, T_C, 1.0, 1.0};
  }
};

struct ThreeStrokeReport {
  PopulationVector p1;
  PopulationVector p2;
  PopulationVector p3;
  double W;
  double Q_H;
  double Q_C;
  double eta;
};

PopulationVector three_stroke_steady_state(const ThreeStrokeConfig& cfg);

/// Throws DivisionGuard when Q_H vanishes and eta = W / Q_H is undefined.
ThreeStrokeReport three_stroke_report(const ThreeStrokeConfig& cfg);

}  // namespace qhe
