#pragma once

#include <array>
#include <cmath>

namespace qhe {

/// Real 2x2 matrix acting on (g, e) column vectors. Index (row, col) =
/// (target level, source level), level 0 = ground, 1 = excited.
struct Mat2 {
  std::array<double, 4> v{0.0, 0.0, 0.0, 0.0};

  constexpr Mat2() = default;
  constexpr Mat2(double gg, double ge, double eg, double ee) : v{gg, ge, eg, ee} {}

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Mat2 swap() { return {0.0, 1.0, 1.0, 0.0}; }
  static constexpr Mat2 diag(double g, double e) { return {g, 0.0, 0.0, e}; }

  constexpr double& operator()(int r, int c) { return v[2 * r + c]; }
  constexpr double operator()(int r, int c) const { return v[2 * r + c]; }

  constexpr double trace() const { return v[0] + v[3]; }
  constexpr double det() const { return v[0] * v[3] - v[1] * v[2]; }
  double max_abs_diff(const Mat2& o) const {
    double m = 0.0;
    for (int i = 0; i < 4; ++i) m = std::fmax(m, std::fabs(v[i] - o.v[i]));
    return m;
  }
};

constexpr Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
          a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

constexpr Mat2 operator+(const Mat2& a, const Mat2& b) {
  return {a.v[0] + b.v[0], a.v[1] + b.v[1], a.v[2] + b.v[2], a.v[3] + b.v[3]};
}

constexpr Mat2 operator-(const Mat2& a, const Mat2& b) {
  return {a.v[0] - b.v[0], a.v[1] - b.v[1], a.v[2] - b.v[2], a.v[3] - b.v[3]};
}

constexpr Mat2 operator*(double s, const Mat2& a) {
  return {s * a.v[0], s * a.v[1], s * a.v[2], s * a.v[3]};
}

using Vec2 = std::array<double, 2>;

constexpr Vec2 operator*(const Mat2& a, const Vec2& x) {
  return {a(0, 0) * x[0] + a(0, 1) * x[1], a(1, 0) * x[0] + a(1, 1) * x[1]};
}

}  // namespace qhe
