#pragma once

// Work-per-cycle optimization and the comparison datasets for the Otto and
// three-stroke engines at fixed efficiency and Carnot efficiency. All
// energies are reported in units of k_B T_H.

#include <span>
#include <vector>

#include "qhe/otto.hpp"
#include "qhe/three_stroke.hpp"

namespace qhe {

/// omega_C = (1 - eta) omega_H and T_C = (1 - eta_C) T_H.
OttoConfig otto_config_at(double eta, double eta_C, double T_H, double omega_H, Regime regime);

/// Otto work-per-cycle in units of k_B T_H.
double work_at(double eta, double eta_C, double T_H, double omega_H, Regime regime);

struct ScanSpec {
  double eta;
  double eta_C;
  double T_H = 1.0;
  Regime regime = Regime::nonmarkov;
  double omega_lo = 1e-3;
  double omega_hi = 20.0;
  int grid_size = 200;

  /// 0 < eta < eta_C < 1, 0 < lo < hi, grid_size >= 3.
  void validate() const;
};

struct OptimumRecord {
  double omega_H_star;
  double W_star;
  bool converged;
  int evaluations;
  /// Best coarse-grid point sat on an end of the range: no interior maximum.
  bool at_boundary;
  /// More than one local maximum on the coarse grid.
  bool multimodal;
};

std::vector<double> log_grid(double lo, double hi, int n);

/// Work at every omega_H of the grid. OpenMP kernel.
std::vector<double> evaluate_work_grid(const ScanSpec& spec, std::span<const double> omega_H);

/// Serial reference for evaluate_work_grid.
std::vector<double> evaluate_work_grid_serial(const ScanSpec& spec,
                                              std::span<const double> omega_H);

/// Coarse log-spaced scan, then golden-section refinement of the bracketing
/// interval to 1e-8 in omega_H.
OptimumRecord maximize_work(const ScanSpec& spec);

/// Three-stroke configuration reaching efficiency eta at the given Carnot
/// efficiency. Throws BisectionFailure if eta is not attainable.
ThreeStrokeConfig three_stroke_at_efficiency(double eta, double eta_C, double T_H);

enum class Curve { otto_nonmarkov, otto_markov, three_stroke };

struct EfficiencyRow {
  double eta;
  double W;
  /// Optimal omega_H for Otto rows, the fixed gap for three-stroke rows.
  double omega;
};

std::vector<EfficiencyRow> work_efficiency_curve(double eta_C, double T_H, Curve curve,
                                                 std::span<const double> eta_grid);

enum class Horizon { single_cycle, infinite };

struct CurvePoint {
  double omega;
  double W;
  /// variance / mean for fluctuation curves, the Pearson coefficient for
  /// correlation curves.
  double value;
};

struct FluctuationCurves {
  std::vector<CurvePoint> nonmarkov;
  std::vector<CurvePoint> markov;
  CurvePoint three_stroke;
};

FluctuationCurves fluctuation_curve(double eta, double eta_C, double T_H, Horizon horizon,
                                    std::span<const double> omega_H_grid);

struct CorrelationCurves {
  std::vector<CurvePoint> nonmarkov;
  CurvePoint three_stroke;
};

CorrelationCurves correlation_curve(double eta, double eta_C, double T_H,
                                    std::span<const double> omega_H_grid);

}  // namespace qhe
