#pragma once

// Single-qubit thermal operations acting on level populations. Energies are
// in units with hbar = k_B = 1.

#include <span>
#include <vector>

#include "qhe/mat2.hpp"

namespace qhe {

/// Column-sum tolerance for stochastic matrices and population vectors.
inline constexpr double kStochasticTol = 1e-12;
/// Drift beyond this after a map application is treated as a logic error.
inline constexpr double kDriftErrorTol = 1e-9;

/// Occupation probabilities (p_g, p_e) of a fully dephased qubit.
class PopulationVector {
 public:
  /// Throws InvalidParameter unless both entries are in [0,1] and sum to 1.
  PopulationVector(double p_g, double p_e);

  static PopulationVector ground() { return {1.0, 0.0}; }
  static PopulationVector excited() { return {0.0, 1.0}; }
  static PopulationVector from_excited(double p_e) { return {1.0 - p_e, p_e}; }

  double p_g() const { return p_g_; }
  double p_e() const { return p_e_; }
  Vec2 vec() const { return {p_g_, p_e_}; }

  /// Ground and excited populations exchanged (coherent flip).
  PopulationVector flipped() const { return {p_e_, p_g_}; }

 private:
  double p_g_;
  double p_e_;
};

struct ThermalOpParams {
  double omega;
  double beta;
  double lambda;

  /// Throws InvalidParameter for omega <= 0, beta <= 0, or lambda outside [0,1].
  void validate() const;
};

/// Thermal-operation population map Lambda(omega, beta, lambda). Its Gibbs
/// population vector is a fixed point and every column sums to one.
class GibbsStochasticMatrix {
 public:
  const Mat2& matrix() const { return m_; }
  double operator()(int r, int c) const { return m_(r, c); }
  const ThermalOpParams& params() const { return params_; }

 private:
  friend GibbsStochasticMatrix build_map(const ThermalOpParams& params);
  GibbsStochasticMatrix(const Mat2& m, const ThermalOpParams& p) : m_(m), params_(p) {}

  Mat2 m_;
  ThermalOpParams params_;
};

/// (1 - lambda) I + lambda [[1 - e^{-beta omega}, 1], [e^{-beta omega}, 0]].
GibbsStochasticMatrix build_map(const ThermalOpParams& params);

/// Extremal thermal operation, the lambda = 1 member of the family.
GibbsStochasticMatrix eto(double omega, double beta);

PopulationVector apply_map(const GibbsStochasticMatrix& m, const PopulationVector& p);

/// Applies an arbitrary column-stochastic matrix (composed cycle maps, the
/// flip) and cleans up rounding drift. Drift above 1e-12 is renormalized,
/// drift above 1e-9 raises ConsistencyError.
PopulationVector apply_stochastic(const Mat2& m, const PopulationVector& p);

PopulationVector thermal_population(double omega, double beta);

/// Markovian iff lambda <= 1 / (1 + e^{-beta omega}).
bool is_markovian(const ThermalOpParams& params);

/// lambda value that fully thermalizes the qubit at (omega, beta).
double thermalizing_lambda(double omega, double beta);

struct EtoScanRow {
  double t2_over_t1;
  double p_e_eto;
  double p_e_thermal;
};

/// Qubit prepared thermal at T1 = 1, gap omega_over_t1, then either hit with
/// the ETO at T2 or thermalized at T2.
std::vector<EtoScanRow> eto_vs_thermalization_scan(double omega_over_t1,
                                                   std::span<const double> t2_over_t1_grid);

}  // namespace qhe

namespace qhe {

/// Unique fixed point of a 2x2 column-stochastic cycle map, taken in closed
/// form from its off-diagonal entries. Throws DegenerateCycle when the map is
/// within 1e-12 of the identity.
PopulationVector cycle_fixed_point(const Mat2& cycle);

}  // namespace qhe
