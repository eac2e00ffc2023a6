#pragma once

// Full counting statistics of the work output.
//
// A real counting field chi tilts the one-cycle map so that
// G_N(chi) = ln 1^T Pi_chi^N p1 generates the cumulants of the work done in
// N cycles started from the cyclostationary state p1. The N -> infinity
// scaled cumulants follow from the Perron root of Pi_chi.

#include <variant>

#include "qhe/core_maps.hpp"
#include "qhe/otto.hpp"
#include "qhe/three_stroke.hpp"

namespace qhe {

enum class EngineKind { otto, three_stroke };

using EngineConfig = std::variant<OttoConfig, ThreeStrokeConfig>;

/// Counting-field-dependent cycle map.
///
/// Otto:         Pi_chi = B_-(chi) Lambda_C B_+(chi) Lambda_H,
///               B_pm = diag(1, exp(pm chi (omega_H - omega_C)))
/// three-stroke: Pi_chi = Lambda_C [[0, e^{chi w}], [e^{-chi w}, 0]] Lambda_H
class TiltedMap {
 public:
  static TiltedMap otto(const OttoConfig& cfg);
  static TiltedMap three_stroke(const ThreeStrokeConfig& cfg);
  static TiltedMap from_config(const EngineConfig& cfg);

  EngineKind kind() const { return kind_; }
  const EngineConfig& config() const { return config_; }
  /// Work exchanged per counted event: omega_H - omega_C or omega.
  double work_quantum() const { return quantum_; }

  Mat2 operator()(double chi) const { return untilted() + deviation(chi); }
  Mat2 untilted() const { return untilted_; }
  /// Pi_chi - Pi_0, assembled from expm1 so it keeps full relative precision
  /// for small chi.
  Mat2 deviation(double chi) const;

  PopulationVector steady_state() const;

 private:
  TiltedMap(EngineKind kind, EngineConfig cfg, const Mat2& hot, const Mat2& cold, double quantum);

  EngineKind kind_;
  EngineConfig config_;
  Mat2 hot_;
  Mat2 cold_;
  Mat2 untilted_;
  double quantum_;
};

/// ln[1^T Pi_chi^N p1]. Throws CountingFieldRange if |chi| N quantum > 600.
double cumulant_gf(const TiltedMap& map, const PopulationVector& p1, int N, double chi);

struct WorkStatistics {
  int N;
  double mean;
  double variance;
  /// variance / mean
  double ratio;
};

/// Mean and variance of N-cycle work from chi-derivatives of G_N at 0.
WorkStatistics work_moments_N(const TiltedMap& map, const PopulationVector& p1, int N);

/// g(chi) = ln lambda_0(chi), lambda_0 the Perron root of Pi_chi.
double scaled_cgf(const TiltedMap& map, double chi);

struct ScaledCumulants {
  double mean;
  double variance;
};

/// Throws NonPrimitiveMap if the untilted map has a second eigenvalue on the
/// unit circle.
ScaledCumulants scaled_cumulants(const TiltedMap& map);

/// Pearson coefficient of the work in two consecutive cycles,
/// Var_2 / (2 Var_1) - 1. Throws ZeroVariance if Var_1 < 1e-14.
double intercycle_pcc(const TiltedMap& map, const PopulationVector& p1);

/// -exp(-(beta_C + beta_H) omega); requires extremal strokes.
double pcc_three_stroke_analytic(const ThreeStrokeConfig& cfg);

/// Finite-difference first and second derivatives at 0 used by the cumulant
/// routines: fourth-order central stencils at steps h and h/2 combined by one
/// Richardson level.
struct Derivatives {
  double first;
  double second;
};

template <typename F>
Derivatives central_derivatives(F&& f, double h) {
  auto stencil = [&](double s) {
    const double fm2 = f(-2.0 * s), fm1 = f(-s), f0 = f(0.0), fp1 = f(s), fp2 = f(2.0 * s);
    return Derivatives{(-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * s),
                       (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * s * s)};
  };
  const Derivatives coarse = stencil(h);
  const Derivatives fine = stencil(0.5 * h);
  return {(16.0 * fine.first - coarse.first) / 15.0, (16.0 * fine.second - coarse.second) / 15.0};
}

/// Counting-field step relative to the inverse work quantum.
inline constexpr double kCountingStep = 1e-3;

}  // namespace qhe
