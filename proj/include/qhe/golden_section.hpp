#pragma once

#include <cmath>

namespace qhe {

struct ScalarMaximum {
  double x;
  double value;
  int evaluations;
  bool converged;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi], run
/// until the bracket is narrower than tol.
template <typename F>
ScalarMaximum golden_section_maximize(F&& f, double lo, double hi, double tol,
                                      int max_iterations = 500) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int evals = 2;
  int it = 0;
  for (; it < max_iterations && (b - a) > tol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++evals;
  }
  double x = 0.5 * (a + b);
  double fx = f(x);
  ++evals;
  // Keep the best point actually evaluated.
  if (fc > fx) {
    x = c;
    fx = fc;
  }
  if (fd > fx) {
    x = d;
    fx = fd;
  }
  return {x, fx, evals, (b - a) <= tol};
}

}  // namespace qhe
