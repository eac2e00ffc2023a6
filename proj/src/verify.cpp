#include "qhe/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qhe/enumerate.hpp"
#include "qhe/errors.hpp"
#include "qhe/fcs.hpp"
#include "qhe/microscopic.hpp"
#include "qhe/sampling.hpp"

namespace qhe::verify {

namespace {

using sampling::Rng;

CheckResult make(const char* suite, const char* check, double residual, double tol) {
  return {suite, check, residual, tol, residual <= tol};
}

std::vector<CheckResult> gibbs_fixed_point(const Options& opts) {
  Rng rng(0x61bb5);
  double fixed = 0.0, columns = 0.0, range = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const ThermalOpParams p{sampling::uniform(rng, 0.01, 10.0), sampling::uniform(rng, 0.01, 10.0),
                            sampling::uniform(rng, 0.0, 1.0)};
    Mat2 m = build_map(p).matrix();
    m(0, 0) += opts.map_perturbation;
    const Vec2 th = thermal_population(p.omega, p.beta).vec();
    const Vec2 out = m * th;
    fixed = std::max({fixed, std::fabs(out[0] - th[0]), std::fabs(out[1] - th[1])});
    for (int c = 0; c < 2; ++c) {
      columns = std::max(columns, std::fabs(m(0, c) + m(1, c) - 1.0));
      for (int r = 0; r < 2; ++r) {
        range = std::max({range, -m(r, c), m(r, c) - 1.0});
      }
    }
  }
  return {make("gibbs-fixed-point", "fixed-point", fixed, 1e-12),
          make("gibbs-fixed-point", "column-sums", columns, 1e-12),
          make("gibbs-fixed-point", "entry-range", range, 0.0)};
}

std::vector<CheckResult> first_law() {
  Rng rng(0xf1257);
  double otto = 0.0, three = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const OttoCycleReport r = otto_cycle_report(sampling::random_otto(rng));
    otto = std::max(otto, std::fabs(r.W - r.Q_H - r.Q_C));
  }
  for (int i = 0; i < 1000; ++i) {
    ThreeStrokeConfig cfg = sampling::random_three_stroke(rng);
    const ThreeStrokeReport r = three_stroke_report(cfg);
    three = std::max(three, std::fabs(r.W - r.Q_H - r.Q_C));
  }
  return {make("first-law", "otto", otto, 1e-12), make("first-law", "three-stroke", three, 1e-12)};
}

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

template <typename Draw>
std::pair<double, double> oracle_errors(Rng& rng, Draw draw) {
  double mean_err = 0.0, var_err = 0.0;
  for (int k = 0; k < 20; ++k) {
    const EngineConfig cfg = draw(rng);
    const TiltedMap map = TiltedMap::from_config(cfg);
    const PopulationVector p1 = map.steady_state();
    for (int N = 1; N <= 4; ++N) {
      const WorkStatistics s = work_moments_N(map, p1, N);
      const WorkDistribution d = enumerate_work_distribution(cfg, N);
      mean_err = std::max(mean_err, rel(s.mean, d.mean()));
      var_err = std::max(var_err, rel(s.variance, d.variance()));
    }
  }
  return {mean_err, var_err};
}

std::vector<CheckResult> oracle_equivalence() {
  Rng rng(0x0ac1e);
  // Configurations whose mean work is within 1% of a quantum of zero are
  // redrawn; relative error is meaningless there.
  auto otto = [](Rng& r) -> EngineConfig {
    for (;;) {
      const OttoConfig c = sampling::random_otto(r);
      if (std::fabs(otto_cycle_report(c).W) > 1e-2 * c.work_quantum()) return c;
    }
  };
  auto three = [](Rng& r) -> EngineConfig {
    for (;;) {
      const ThreeStrokeConfig c = sampling::random_three_stroke(r);
      if (std::fabs(three_stroke_report(c).W) > 1e-2 * c.omega) return c;
    }
  };
  const auto [om, ov] = oracle_errors(rng, otto);
  const auto [tm, tv] = oracle_errors(rng, three);
  return {make("oracle-equivalence", "otto-mean", om, 1e-8),
          make("oracle-equivalence", "otto-variance", ov, 1e-8),
          make("oracle-equivalence", "three-stroke-mean", tm, 1e-8),
          make("oracle-equivalence", "three-stroke-variance", tv, 1e-8)};
}

std::vector<CheckResult> microscopic_eto() {
  const FockTruncation tr{60, 1.0, 1.0};
  const double swap_dev = eto_deviation(induced_population_map(swap_unitary(tr), tr), tr);
  const double jc_dev = eto_deviation(
      jc_evolution_map(1.0, std::numbers::pi / 2.0, tr, CouplingKind::intensity_dependent), tr);
  double increase = 0.0;
  double prev = 1.0;
  for (int n : {10, 20, 40, 60}) {
    const FockTruncation t{n, 1.0, 1.0};
    const double dev = eto_deviation(induced_population_map(swap_unitary(t), t), t);
    increase = std::max(increase, dev - prev);
    prev = dev;
  }
  return {make("microscopic-eto", "swap-unitary", swap_dev, 1e-8),
          make("microscopic-eto", "intensity-dependent-jc", jc_dev, 1e-8),
          make("microscopic-eto", "truncation-convergence", increase, 0.0)};
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"gibbs-fixed-point", "first-law", "oracle-equivalence", "microscopic-eto"};
}

std::vector<CheckResult> run_suite(const std::string& name, const Options& opts) {
  if (name == "all") {
    std::vector<CheckResult> all;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s, opts);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (name == "gibbs-fixed-point") return gibbs_fixed_point(opts);
  if (name == "first-law") return first_law();
  if (name == "oracle-equivalence") return oracle_equivalence();
  if (name == "microscopic-eto") return microscopic_eto();
  throw InvalidParameter("unknown verification suite '" + name + "'");
}

}  // namespace qhe::verify
