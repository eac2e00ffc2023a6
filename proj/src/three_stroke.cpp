#include "qhe/three_stroke.hpp"

#include <cmath>
#include <string>

#include "qhe/errors.hpp"

namespace qhe {

void ThreeStrokeConfig::validate() const {
  if (!(omega > 0.0 && std::isfinite(omega))) {
    throw InvalidParameter("three-stroke gap must be positive");
  }
  if (!(T_C > 0.0 && T_H > T_C && std::isfinite(T_H))) {
    throw InvalidParameter("three-stroke temperatures must satisfy T_H > T_C > 0");
  }
  for (double l : {lambda_H, lambda_C}) {
    if (!(l >= 0.0 && l <= 1.0)) {
      throw InvalidParameter("lambda must lie in [0,1], got " + std::to_string(l));
    }
  }
}

PopulationVector three_stroke_steady_state(const ThreeStrokeConfig& cfg) {
  cfg.validate();
  return cycle_fixed_point(cfg.cold_map().matrix() * Mat2::swap() * cfg.hot_map().matrix());
}

ThreeStrokeReport three_stroke_report(const ThreeStrokeConfig& cfg) {
  const PopulationVector p1 = three_stroke_steady_state(cfg);
  const PopulationVector p2 = apply_map(cfg.hot_map(), p1);
  const PopulationVector p3 = p2.flipped();

  const double W = cfg.omega * (2.0 * p2.p_e() - 1.0);
  const double Q_H = cfg.omega * (p2.p_e() - p1.p_e());
  const double Q_C = cfg.omega * (p1.p_e() - p3.p_e());
  if (std::fabs(Q_H) <= 1e-15 * cfg.omega) {
    throw DivisionGuard("heat from the hot bath vanishes; efficiency undefined");
  }
  return {p1, p2, p3, W, Q_H, Q_C, W / Q_H};
}

}  // namespace qhe
