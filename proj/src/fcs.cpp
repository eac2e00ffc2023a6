#include "qhe/fcs.hpp"

#include <cmath>
#include <string>

#include "qhe/errors.hpp"

namespace qhe {

TiltedMap::TiltedMap(EngineKind kind, EngineConfig cfg, const Mat2& hot, const Mat2& cold,
                     double quantum)
    : kind_(kind), config_(std::move(cfg)), hot_(hot), cold_(cold), quantum_(quantum) {
  untilted_ = kind == EngineKind::otto ? cold_ * hot_ : cold_ * Mat2::swap() * hot_;
}

TiltedMap TiltedMap::otto(const OttoConfig& cfg) {
  cfg.validate();
  return {EngineKind::otto, cfg, cfg.hot_map().matrix(), cfg.cold_map().matrix(),
          cfg.work_quantum()};
}

TiltedMap TiltedMap::three_stroke(const ThreeStrokeConfig& cfg) {
  cfg.validate();
  return {EngineKind::three_stroke, cfg, cfg.hot_map().matrix(), cfg.cold_map().matrix(),
          cfg.omega};
}

TiltedMap TiltedMap::from_config(const EngineConfig& cfg) {
  if (const auto* otto_cfg = std::get_if<OttoConfig>(&cfg)) return otto(*otto_cfg);
  return three_stroke(std::get<ThreeStrokeConfig>(cfg));
}

Mat2 TiltedMap::deviation(double chi) const {
  const double up = std::expm1(chi * quantum_);
  const double down = std::expm1(-chi * quantum_);
  if (kind_ == EngineKind::otto) {
    // (I + D_-) C (I + D_+) H - C H
    const Mat2 d_minus = Mat2::diag(0.0, down);
    const Mat2 d_plus = Mat2::diag(0.0, up);
    const Mat2 c_dp_h = cold_ * d_plus * hot_;
    return d_minus * untilted_ + c_dp_h + d_minus * c_dp_h;
  }
  return cold_ * Mat2{0.0, up, down, 0.0} * hot_;
}

PopulationVector TiltedMap::steady_state() const { return cycle_fixed_point(untilted_); }

double cumulant_gf(const TiltedMap& map, const PopulationVector& p1, int N, double chi) {
  if (N < 1) throw InvalidParameter("cycle count must be >= 1");
  if (std::fabs(chi) * N * map.work_quantum() > 600.0) {
    throw CountingFieldRange("|chi| N quantum exceeds the exponent budget of 600");
  }
  // Track d_k = Pi_chi^k p1 - p1 rather than the propagated vector itself so
  // that 1^T Pi_chi^N p1 - 1 is resolved to full relative precision:
  // d_{k+1} = Pi_0 d_k + (Pi_0 p1 - p1) + E_chi (p1 + d_k).
  const Mat2 base = map.untilted();
  const Mat2 tilt = map.deviation(chi);
  const Vec2 p = p1.vec();
  const Vec2 base_p = base * p;
  const Vec2 residual{base_p[0] - p[0], base_p[1] - p[1]};
  Vec2 d{0.0, 0.0};
  for (int k = 0; k < N; ++k) {
    const Vec2 a = base * d;
    const Vec2 b = tilt * Vec2{p[0] + d[0], p[1] + d[1]};
    d = {a[0] + residual[0] + b[0], a[1] + residual[1] + b[1]};
  }
  const double excess = (p[0] + p[1] - 1.0) + (d[0] + d[1]);
  return std::log1p(excess);
}

WorkStatistics work_moments_N(const TiltedMap& map, const PopulationVector& p1, int N) {
  const double h = kCountingStep / map.work_quantum();
  const Derivatives d =
      central_derivatives([&](double chi) { return cumulant_gf(map, p1, N, chi); }, h);
  return {N, d.first, d.second, d.second / d.first};
}

namespace {

/// lambda_0(chi) - 1 for the Perron root of Pi_0 + E.
///
/// With lambda = 1 + eps the characteristic polynomial becomes
/// eps^2 + (2 - tr) eps + (1 - tr + det) = 0. For column-stochastic Pi_0 the
/// constant term vanishes at chi = 0, so it is formed from E alone; the
/// rounding-level constant 1 - tr_0 + det_0 is dropped since it does not
/// depend on chi. A nonnegative 2x2 matrix has a nonnegative discriminant
/// and its Perron root is always the larger root, so no branch tracking is
/// needed once the spectral gap at chi = 0 has been checked.
double perron_excess(const Mat2& base, const Mat2& e) {
  const double tr_e = e.trace();
  const double ddet = base(0, 0) * e(1, 1) + e(0, 0) * base(1, 1) + e(0, 0) * e(1, 1) -
                      base(0, 1) * e(1, 0) - e(0, 1) * base(1, 0) - e(0, 1) * e(1, 0);
  const double c = ddet - tr_e;
  const double b = 2.0 - base.trace() - tr_e;
  const double disc = std::fmax(b * b - 4.0 * c, 0.0);
  return -2.0 * c / (b + std::sqrt(disc));
}

void require_spectral_gap(const Mat2& base) {
  const double second = base.trace() - 1.0;
  if (std::fabs(second) > 1.0 - 1e-12) {
    throw NonPrimitiveMap("untilted cycle map has a second eigenvalue " + std::to_string(second) +
                          " on the unit circle");
  }
}

}  // namespace

double scaled_cgf(const TiltedMap& map, double chi) {
  require_spectral_gap(map.untilted());
  if (std::fabs(chi) * map.work_quantum() > 600.0) {
    throw CountingFieldRange("|chi| quantum exceeds the exponent budget of 600");
  }
  return std::log1p(perron_excess(map.untilted(), map.deviation(chi)));
}

ScaledCumulants scaled_cumulants(const TiltedMap& map) {
  require_spectral_gap(map.untilted());
  const double h = kCountingStep / map.work_quantum();
  const Derivatives d = central_derivatives([&](double chi) { return scaled_cgf(map, chi); }, h);
  return {d.first, d.second};
}

double intercycle_pcc(const TiltedMap& map, const PopulationVector& p1) {
  const double var1 = work_moments_N(map, p1, 1).variance;
  if (var1 < 1e-14) {
    throw ZeroVariance("single-cycle work variance vanishes; correlation undefined");
  }
  const double var2 = work_moments_N(map, p1, 2).variance;
  return var2 / (2.0 * var1) - 1.0;
}

double pcc_three_stroke_analytic(const ThreeStrokeConfig& cfg) {
  cfg.validate();
  if (std::fabs(cfg.lambda_H - 1.0) > 1e-12 || std::fabs(cfg.lambda_C - 1.0) > 1e-12) {
    throw RegimeMismatch("closed-form correlation needs extremal strokes");
  }
  return -std::exp(-(cfg.beta_C() + cfg.beta_H()) * cfg.omega);
}

}  // namespace qhe
