#include <doctest.h>

#include <cmath>

#include "qhe/errors.hpp"
#include "qhe/sampling.hpp"
#include "qhe/three_stroke.hpp"

using namespace qhe;
using doctest::Approx;

namespace {

// omega = 1, temperatures from beta*omega.
ThreeStrokeConfig eto_at(double bh_w, double bc_w) {
  return ThreeStrokeConfig::extremal(1.0, 1.0 / bh_w, 1.0 / bc_w);
}

}  // namespace

TEST_CASE("example: ln1.2 / ln4") {
  const auto r = three_stroke_report(eto_at(std::log(1.2), std::log(4.0)));
  CHECK(r.p1.p_e() == Approx(1.0 / 5.8).epsilon(1e-14));
  CHECK(r.p2.p_e() == Approx(1.0 / 1.45).epsilon(1e-14));
  CHECK(r.W == Approx(2.0 / 1.45 - 1.0).epsilon(1e-13));
  CHECK(r.W == Approx(0.37931).epsilon(1e-4));
}

TEST_CASE("example: ln2 / ln4 is not an engine") {
  const auto r = three_stroke_report(eto_at(std::log(2.0), std::log(4.0)));
  CHECK(r.p2.p_e() == Approx(4.0 / 9.0).epsilon(1e-14));
  CHECK(r.W < 0.0);
}

TEST_CASE("equal temperatures limit") {
  // The config requires T_H > T_C; approach equality from above.
  const double bw = 0.8;
  const auto p = three_stroke_steady_state(ThreeStrokeConfig::extremal(1.0, 1.0 / bw, 1.0 / bw * (1 - 1e-12)));
  CHECK(p.p_e() == Approx(1.0 / (1.0 + std::exp(2.0 * bw))).epsilon(1e-10));
  CHECK_THROWS_AS(ThreeStrokeConfig::extremal(1.0, 1.0, 1.0).validate(), InvalidParameter);
}

TEST_CASE("markovian baths never produce work") {
  sampling::Rng rng(31);
  for (int i = 0; i < 1000; ++i) {
    const double T_H = sampling::uniform(rng, 0.5, 2.0);
    const double T_C = T_H * sampling::uniform(rng, 0.1, 0.9);
    const double w = sampling::uniform(rng, 0.01, 5.0);
    const double lh = sampling::uniform(rng, 0.0, thermalizing_lambda(w, 1.0 / T_H));
    const double lc = sampling::uniform(rng, 0.0, thermalizing_lambda(w, 1.0 / T_C));
    if (lh < 1e-6 && lc < 1e-6) continue;
    const ThreeStrokeConfig cfg{w, T_H, T_C, lh, lc};
    CHECK(three_stroke_report(cfg).W <= 1e-15);
  }
  const double T_H = 1.0, T_C = 0.4, w = 0.3;
  const ThreeStrokeConfig th{w, T_H, T_C, thermalizing_lambda(w, 1.0), thermalizing_lambda(w, 2.5)};
  const auto r = three_stroke_report(th);
  CHECK(r.p2.p_e() == Approx(1.0 / (1.0 + std::exp(w))).epsilon(1e-13));
  CHECK(r.W < 0.0);
}

TEST_CASE("property: closed forms on a grid") {
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double a = 0.05 + i * (4.95 / 19), b = 0.05 + j * (4.95 / 19);
      if (b <= a) continue;
      const auto r = three_stroke_report(eto_at(a, b));
      const double pe1 = 1.0 / (1.0 + std::exp(a + b));
      const double pe2 = 1.0 / (std::exp(a) + std::exp(-b));
      CHECK(std::fabs(r.p1.p_e() - pe1) <= 1e-12);
      CHECK(std::fabs(r.p2.p_e() - pe2) <= 1e-12);
      CHECK(std::fabs(r.p3.p_e() - (1.0 - pe2)) <= 1e-12);
      CHECK(std::fabs(r.W - (2.0 / (std::exp(a) + std::exp(-b)) - 1.0)) <= 1e-12);
      const double eta = 1.0 - std::expm1(a) / -std::expm1(-b);
      CHECK(std::fabs(r.eta - eta) <= 1e-10 * std::fmax(1.0, std::fabs(eta)));
    }
  }
}

TEST_CASE("property: report invariants") {
  sampling::Rng rng(32);
  for (int i = 0; i < 1000; ++i) {
    const ThreeStrokeConfig cfg = sampling::random_three_stroke(rng);
    const auto r = three_stroke_report(cfg);
    CHECK(std::fabs(r.W - r.Q_H - r.Q_C) <= 1e-12);
    CHECK(r.p3.p_e() == r.p2.p_g());
    CHECK((r.W > 0.0) == (r.p2.p_e() > 0.5));
    if (cfg.is_extremal()) {
      const double a = cfg.omega / cfg.T_H, b = cfg.omega / cfg.T_C;
      CHECK((r.W > 0.0) == (std::exp(a) + std::exp(-b) < 2.0));
    }
  }
}

TEST_CASE("degenerate and guarded cases") {
  // With both strokes idle the cycle is the bare flip: unique fixed point
  // (1/2, 1/2), no heat, no efficiency.
  const ThreeStrokeConfig idle{1.0, 1.0, 0.5, 0.0, 0.0};
  CHECK(three_stroke_steady_state(idle).p_e() == 0.5);
  CHECK_THROWS_AS(three_stroke_report(idle), DivisionGuard);
}
