#include "qhe/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qhe/errors.hpp"
#include "qhe/fcs.hpp"
#include "qhe/golden_section.hpp"
#include "qhe/parallel.hpp"

namespace qhe {

namespace {

constexpr double kRefineTol = 1e-8;

void check_efficiencies(double eta, double eta_C) {
  if (!(eta > 0.0 && eta < eta_C && eta_C < 1.0)) {
    throw InvalidParameter("efficiencies must satisfy 0 < eta < eta_C < 1, got eta=" +
                           std::to_string(eta) + " eta_C=" + std::to_string(eta_C));
  }
}

}  // namespace

OttoConfig otto_config_at(double eta, double eta_C, double T_H, double omega_H, Regime regime) {
  return OttoConfig::with_regime(omega_H, (1.0 - eta) * omega_H, T_H, (1.0 - eta_C) * T_H, regime);
}

double work_at(double eta, double eta_C, double T_H, double omega_H, Regime regime) {
  return otto_cycle_report(otto_config_at(eta, eta_C, T_H, omega_H, regime)).W / T_H;
}

void ScanSpec::validate() const {
  check_efficiencies(eta, eta_C);
  if (!(T_H > 0.0)) throw InvalidParameter("T_H must be positive");
  if (!(omega_lo > 0.0 && omega_hi > omega_lo)) {
    throw InvalidParameter("omega_H range must satisfy 0 < lo < hi");
  }
  if (grid_size < 3) throw InvalidParameter("coarse grid needs at least 3 points");
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (!(lo > 0.0 && hi > lo) || n < 2) {
    throw InvalidParameter("log grid needs 0 < lo < hi and at least 2 points");
  }
  std::vector<double> grid(static_cast<std::size_t>(n));
  const double a = std::log(lo);
  const double step = (std::log(hi) - a) / (n - 1);
  for (int i = 0; i < n; ++i) grid[static_cast<std::size_t>(i)] = std::exp(a + step * i);
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<double> evaluate_work_grid_serial(const ScanSpec& spec,
                                              std::span<const double> omega_H) {
  std::vector<double> w(omega_H.size());
  for (std::size_t i = 0; i < omega_H.size(); ++i) {
    w[i] = work_at(spec.eta, spec.eta_C, spec.T_H, omega_H[i], spec.regime);
  }
  return w;
}

std::vector<double> evaluate_work_grid(const ScanSpec& spec, std::span<const double> omega_H) {
  std::vector<double> w(omega_H.size());
  parallel_for_indexed(omega_H.size(), [&](std::size_t i) {
    w[i] = work_at(spec.eta, spec.eta_C, spec.T_H, omega_H[i], spec.regime);
  });
  return w;
}

OptimumRecord maximize_work(const ScanSpec& spec) {
  spec.validate();
  const std::vector<double> grid = log_grid(spec.omega_lo, spec.omega_hi, spec.grid_size);
  const std::vector<double> w = evaluate_work_grid(spec, grid);
  const std::size_t n = grid.size();

  const auto best = static_cast<std::size_t>(std::max_element(w.begin(), w.end()) - w.begin());
  std::vector<std::size_t> peaks;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (w[i] >= w[i - 1] && w[i] >= w[i + 1]) peaks.push_back(i);
  }

  // Refine the best grid point and any separated local maximum that ties
  // with it to 1e-6.
  std::vector<std::size_t> candidates{best};
  for (std::size_t i : peaks) {
    const std::size_t gap = i > best ? i - best : best - i;
    if (gap > 1 && w[i] >= w[best] - 1e-6) candidates.push_back(i);
  }

  OptimumRecord rec{grid[best], w[best], true, static_cast<int>(n), best == 0 || best == n - 1,
                    peaks.size() > 1};
  auto f = [&](double x) { return work_at(spec.eta, spec.eta_C, spec.T_H, x, spec.regime); };
  for (std::size_t i : candidates) {
    const double lo = grid[i == 0 ? 0 : i - 1];
    const double hi = grid[std::min(i + 1, n - 1)];
    const ScalarMaximum m = golden_section_maximize(f, lo, hi, kRefineTol);
    rec.evaluations += m.evaluations;
    rec.converged = rec.converged && m.converged;
    if (m.value > rec.W_star) {
      rec.W_star = m.value;
      rec.omega_H_star = m.x;
    }
  }
  return rec;
}

ThreeStrokeConfig three_stroke_at_efficiency(double eta, double eta_C, double T_H) {
  check_efficiencies(eta, eta_C);
  if (!(T_H > 0.0)) throw InvalidParameter("T_H must be positive");
  const double T_C = (1.0 - eta_C) * T_H;
  const double beta_H = 1.0 / T_H;
  const double beta_C = 1.0 / T_C;

  // Engine branch ends where e^{beta_H w} + e^{-beta_C w} = 2 (zero work).
  auto excess = [&](double w) { return std::exp(beta_H * w) + std::exp(-beta_C * w) - 2.0; };
  double hi = T_H;
  while (excess(hi) <= 0.0) hi *= 2.0;
  double lo = 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) > 0.0 ? hi : lo) = mid;
  }
  const double omega_max = lo;

  auto efficiency = [&](double w) {
    return three_stroke_report(ThreeStrokeConfig::extremal(w, T_H, T_C)).eta;
  };
  double a = 1e-6 * T_H;
  double b = omega_max * (1.0 - 1e-9);
  if (!(b > a)) throw BisectionFailure("three-stroke engine branch is empty");

  constexpr int kSamples = 64;
  double prev = efficiency(a);
  const double eta_top = prev;
  for (int k = 1; k <= kSamples; ++k) {
    const double e = efficiency(a + (b - a) * k / kSamples);
    if (!(e < prev)) {
      throw BisectionFailure("three-stroke efficiency is not monotone on the engine branch");
    }
    prev = e;
  }
  const double eta_bottom = prev;
  if (!(eta < eta_top && eta > eta_bottom)) {
    throw BisectionFailure("efficiency " + std::to_string(eta) +
                           " is outside the attainable three-stroke range (" +
                           std::to_string(eta_bottom) + ", " + std::to_string(eta_top) + ")");
  }
  for (int it = 0; it < 200 && b - a > 1e-15 * b; ++it) {
    const double mid = 0.5 * (a + b);
    (efficiency(mid) > eta ? a : b) = mid;
  }
  return ThreeStrokeConfig::extremal(0.5 * (a + b), T_H, T_C);
}

std::vector<EfficiencyRow> work_efficiency_curve(double eta_C, double T_H, Curve curve,
                                                 std::span<const double> eta_grid) {
  std::vector<EfficiencyRow> rows;
  rows.reserve(eta_grid.size());
  for (double eta : eta_grid) {
    if (curve == Curve::three_stroke) {
      const ThreeStrokeConfig cfg = three_stroke_at_efficiency(eta, eta_C, T_H);
      rows.push_back({eta, three_stroke_report(cfg).W / T_H, cfg.omega});
      continue;
    }
    ScanSpec spec{eta, eta_C, T_H,
                  curve == Curve::otto_markov ? Regime::markov : Regime::nonmarkov};
    const OptimumRecord rec = maximize_work(spec);
    rows.push_back({eta, rec.W_star, rec.omega_H_star});
  }
  return rows;
}

namespace {

CurvePoint fluctuation_point(const TiltedMap& map, double W, double omega, double T_H,
                             Horizon horizon) {
  if (horizon == Horizon::single_cycle) {
    const WorkStatistics s = work_moments_N(map, map.steady_state(), 1);
    return {omega, W / T_H, s.ratio / T_H};
  }
  const ScaledCumulants s = scaled_cumulants(map);
  return {omega, W / T_H, s.variance / s.mean / T_H};
}

}  // namespace

FluctuationCurves fluctuation_curve(double eta, double eta_C, double T_H, Horizon horizon,
                                    std::span<const double> omega_H_grid) {
  check_efficiencies(eta, eta_C);
  FluctuationCurves out;
  out.nonmarkov.resize(omega_H_grid.size());
  out.markov.resize(omega_H_grid.size());
  parallel_for_indexed(omega_H_grid.size(), [&](std::size_t i) {
    const double w = omega_H_grid[i];
    for (Regime r : {Regime::nonmarkov, Regime::markov}) {
      const OttoConfig cfg = otto_config_at(eta, eta_C, T_H, w, r);
      const CurvePoint p =
          fluctuation_point(TiltedMap::otto(cfg), otto_cycle_report(cfg).W, w, T_H, horizon);
      (r == Regime::nonmarkov ? out.nonmarkov : out.markov)[i] = p;
    }
  });
  const ThreeStrokeConfig ts = three_stroke_at_efficiency(eta, eta_C, T_H);
  out.three_stroke = fluctuation_point(TiltedMap::three_stroke(ts), three_stroke_report(ts).W,
                                       ts.omega, T_H, horizon);
  return out;
}

CorrelationCurves correlation_curve(double eta, double eta_C, double T_H,
                                    std::span<const double> omega_H_grid) {
  check_efficiencies(eta, eta_C);
  CorrelationCurves out;
  out.nonmarkov.resize(omega_H_grid.size());
  parallel_for_indexed(omega_H_grid.size(), [&](std::size_t i) {
    const double w = omega_H_grid[i];
    const OttoConfig cfg = otto_config_at(eta, eta_C, T_H, w, Regime::nonmarkov);
    const TiltedMap map = TiltedMap::otto(cfg);
    out.nonmarkov[i] = {w, otto_cycle_report(cfg).W / T_H, intercycle_pcc(map, map.steady_state())};
  });
  const ThreeStrokeConfig ts = three_stroke_at_efficiency(eta, eta_C, T_H);
  const TiltedMap map = TiltedMap::three_stroke(ts);
  out.three_stroke = {ts.omega, three_stroke_report(ts).W / T_H,
                      intercycle_pcc(map, map.steady_state())};
  return out;
}

}  // namespace qhe
