#pragma once

// Seeded random engine configurations for property checks.

#include <cmath>
#include <random>

#include "qhe/otto.hpp"
#include "qhe/three_stroke.hpp"

namespace qhe::sampling {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Stroke strength: extremal, thermalizing, or uniform in [0,1], one third each.
inline double draw_lambda(Rng& rng, double omega, double beta) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0:
      return 1.0;
    case 1:
      return thermalizing_lambda(omega, beta);
    default:
      return uniform(rng, 0.0, 1.0);
  }
}

inline OttoConfig random_otto(Rng& rng) {
  OttoConfig cfg{};
  cfg.T_H = uniform(rng, 0.5, 2.0);
  cfg.T_C = cfg.T_H * uniform(rng, 0.1, 0.9);
  cfg.omega_H = cfg.T_H * uniform(rng, 0.2, 5.0);
  cfg.omega_C = cfg.omega_H * uniform(rng, 0.1, 0.9);
  cfg.lambda_H = draw_lambda(rng, cfg.omega_H, cfg.beta_H());
  cfg.lambda_C = draw_lambda(rng, cfg.omega_C, cfg.beta_C());
  return cfg;
}

inline ThreeStrokeConfig random_three_stroke(Rng& rng) {
  ThreeStrokeConfig cfg{};
  cfg.T_H = uniform(rng, 0.5, 2.0);
  cfg.T_C = cfg.T_H * uniform(rng, 0.1, 0.9);
  cfg.omega = cfg.T_H * uniform(rng, 0.05, 3.0);
  cfg.lambda_H = draw_lambda(rng, cfg.omega, cfg.beta_H());
  cfg.lambda_C = draw_lambda(rng, cfg.omega, cfg.beta_C());
  return cfg;
}

}  // namespace qhe::sampling
