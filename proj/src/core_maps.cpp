#include "qhe/core_maps.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qhe/errors.hpp"

namespace qhe {

namespace {

bool is_probability(double x) { return x >= 0.0 && x <= 1.0; }

void require_positive(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw InvalidParameter(std::string(name) + " must be positive and finite, got " +
                           std::to_string(x));
  }
}

}  // namespace

PopulationVector::PopulationVector(double p_g, double p_e) : p_g_(p_g), p_e_(p_e) {
  if (!is_probability(p_g) || !is_probability(p_e)) {
    throw InvalidParameter("population entries must lie in [0,1]");
  }
  if (std::fabs(p_g + p_e - 1.0) > kStochasticTol) {
    throw InvalidParameter("populations must sum to 1, got " + std::to_string(p_g + p_e));
  }
}

void ThermalOpParams::validate() const {
  require_positive(omega, "omega");
  require_positive(beta, "beta");
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw InvalidParameter("lambda must lie in [0,1], got " + std::to_string(lambda));
  }
}

GibbsStochasticMatrix build_map(const ThermalOpParams& params) {
  params.validate();
  const double x = std::exp(-params.beta * params.omega);
  const double l = params.lambda;
  const Mat2 m{1.0 - l * x, l, l * x, 1.0 - l};
  return GibbsStochasticMatrix(m, params);
}

GibbsStochasticMatrix eto(double omega, double beta) { return build_map({omega, beta, 1.0}); }

PopulationVector apply_stochastic(const Mat2& m, const PopulationVector& p) {
  const Vec2 q = m * p.vec();
  for (double c : q) {
    if (c < -kDriftErrorTol || c > 1.0 + kDriftErrorTol || !std::isfinite(c)) {
      throw ConsistencyError("map produced population outside [0,1]: " + std::to_string(c));
    }
  }
  double g = std::clamp(q[0], 0.0, 1.0);
  double e = std::clamp(q[1], 0.0, 1.0);
  const double drift = std::fabs(g + e - 1.0);
  if (drift > kDriftErrorTol) {
    throw ConsistencyError("population drift " + std::to_string(drift) + " after map");
  }
  if (drift > kStochasticTol) {
    const double s = g + e;
    g /= s;
    e /= s;
  }
  // Exact complement on the smaller entry keeps the sum within rounding.
  if (g < e) {
    return {g, 1.0 - g};
  }
  return {1.0 - e, e};
}

PopulationVector apply_map(const GibbsStochasticMatrix& m, const PopulationVector& p) {
  return apply_stochastic(m.matrix(), p);
}

PopulationVector thermal_population(double omega, double beta) {
  require_positive(omega, "omega");
  require_positive(beta, "beta");
  const double x = std::exp(-beta * omega);
  const double p_e = x / (1.0 + x);
  return {1.0 - p_e, p_e};
}

double thermalizing_lambda(double omega, double beta) { return thermal_population(omega, beta).p_g(); }

bool is_markovian(const ThermalOpParams& params) {
  params.validate();
  // lambda (1 + x) <= 1, arranged so that lambda = 1 stays non-Markovian
  // even when x underflows against 1.
  const double x = std::exp(-params.beta * params.omega);
  return params.lambda * x <= 1.0 - params.lambda;
}

std::vector<EtoScanRow> eto_vs_thermalization_scan(double omega_over_t1,
                                                   std::span<const double> t2_over_t1_grid) {
  require_positive(omega_over_t1, "omega/T1");
  const PopulationVector initial = thermal_population(omega_over_t1, 1.0);
  std::vector<EtoScanRow> rows;
  rows.reserve(t2_over_t1_grid.size());
  for (double t2 : t2_over_t1_grid) {
    require_positive(t2, "T2/T1");
    const double beta2 = 1.0 / t2;
    rows.push_back({t2, apply_map(eto(omega_over_t1, beta2), initial).p_e(),
                    thermal_population(omega_over_t1, beta2).p_e()});
  }
  return rows;
}

}  // namespace qhe

namespace qhe {

PopulationVector cycle_fixed_point(const Mat2& cycle) {
  if (cycle.max_abs_diff(Mat2::identity()) < kStochasticTol) {
    throw DegenerateCycle("cycle map is the identity; steady state is not unique");
  }
  const double up = cycle(1, 0);    // g -> e
  const double down = cycle(0, 1);  // e -> g
  const double p_e = up / (up + down);
  return {down / (up + down), p_e};
}

}  // namespace qhe
