#include "qhe/otto.hpp"

#include <cmath>
#include <string>

#include "qhe/errors.hpp"

namespace qhe {

void OttoConfig::validate() const {
  if (!(omega_C > 0.0 && omega_H > omega_C && std::isfinite(omega_H))) {
    throw InvalidParameter("Otto gaps must satisfy omega_H > omega_C > 0");
  }
  if (!(T_C > 0.0 && T_H > T_C && std::isfinite(T_H))) {
    throw InvalidParameter("Otto temperatures must satisfy T_H > T_C > 0");
  }
  for (double l : {lambda_H, lambda_C}) {
    if (!(l >= 0.0 && l <= 1.0)) {
      throw InvalidParameter("lambda must lie in [0,1], got " + std::to_string(l));
    }
  }
}

OttoConfig OttoConfig::with_regime(double omega_H, double omega_C, double T_H, double T_C,
                                   Regime regime) {
  OttoConfig cfg{omega_H, omega_C, T_H, T_C, 1.0, 1.0};
  cfg.validate();
  if (regime == Regime::markov) {
    cfg.lambda_H = thermalizing_lambda(omega_H, 1.0 / T_H);
    cfg.lambda_C = thermalizing_lambda(omega_C, 1.0 / T_C);
  }
  return cfg;
}

PopulationVector otto_steady_state(const OttoConfig& cfg) {
  cfg.validate();
  return cycle_fixed_point(cfg.cold_map().matrix() * cfg.hot_map().matrix());
}

OttoCycleReport otto_cycle_report(const OttoConfig& cfg) {
  const PopulationVector p1 = otto_steady_state(cfg);
  const PopulationVector p2 = apply_map(cfg.hot_map(), p1);
  const PopulationVector p3 = p2;
  const PopulationVector p4 = p1;

  const double Q_H = cfg.omega_H * (p2.p_e() - p1.p_e());
  const double Q_C = cfg.omega_C * (p4.p_e() - p3.p_e());
  const double W = cfg.work_quantum() * (p3.p_e() - p1.p_e());
  const double eta = 1.0 - cfg.omega_C / cfg.omega_H;
  const bool not_engine = !(W > 0.0) || eta >= cfg.carnot_efficiency();
  return {p1, p2, p3, p4, W, Q_H, Q_C, eta, not_engine};
}

ExcitedPopulations analytic_populations(const OttoConfig& cfg, Regime regime) {
  cfg.validate();
  const double a = cfg.beta_H() * cfg.omega_H;
  const double b = cfg.beta_C() * cfg.omega_C;
  if (regime == Regime::markov) {
    if (std::fabs(cfg.lambda_H - thermalizing_lambda(cfg.omega_H, cfg.beta_H())) > 1e-12 ||
        std::fabs(cfg.lambda_C - thermalizing_lambda(cfg.omega_C, cfg.beta_C())) > 1e-12) {
      throw RegimeMismatch("markov populations need thermalizing lambdas");
    }
    return {1.0 / (1.0 + std::exp(b)), 1.0 / (1.0 + std::exp(a))};
  }
  if (std::fabs(cfg.lambda_H - 1.0) > 1e-12 || std::fabs(cfg.lambda_C - 1.0) > 1e-12) {
    throw RegimeMismatch("non-Markovian populations need lambda = 1 on both strokes");
  }
  const double denom = std::expm1(a + b);
  return {std::expm1(a) / denom, std::expm1(b) / denom};
}

}  // namespace qhe
