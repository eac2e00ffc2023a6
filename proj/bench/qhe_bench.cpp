// Serial reference vs OpenMP kernel timings.
#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "qhe/enumerate.hpp"
#include "qhe/optimize.hpp"

namespace {

double seconds(const std::function<void()>& fn, int reps) {
  fn();  // warm-up
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count() / reps;
}

void report(const char* name, double serial, double parallel, double max_diff) {
  std::printf("%-28s serial %10.4f ms  openmp %10.4f ms  speedup %5.2fx  max|diff| %.3g\n", name,
              1e3 * serial, 1e3 * parallel, serial / parallel, max_diff);
}

}  // namespace

int main(int argc, char** argv) {
  const int cycles = argc > 1 ? std::atoi(argv[1]) : 11;
  std::printf("threads: %d\n", omp_get_max_threads());

  {
    const auto cfg = qhe::otto_config_at(0.3, 0.5, 1.0, 1.3, qhe::Regime::markov);
    qhe::WorkDistribution a, b;
    const double ts = seconds([&] { a = qhe::enumerate_work_distribution_serial(cfg, cycles); }, 1);
    const double tp = seconds([&] { b = qhe::enumerate_work_distribution(cfg, cycles); }, 1);
    double diff = 0.0;
    for (std::size_t i = 0; i < a.probability.size(); ++i) {
      diff = std::fmax(diff, std::fabs(a.probability[i] - b.probability[i]));
    }
    char name[64];
    std::snprintf(name, sizeof name, "enumeration N=%d", cycles);
    report(name, ts, tp, diff);
  }

  {
    const qhe::ScanSpec spec{0.3, 0.5};
    const auto grid = qhe::log_grid(1e-3, 20.0, 20000);
    std::vector<double> a, b;
    const double ts = seconds([&] { a = qhe::evaluate_work_grid_serial(spec, grid); }, 5);
    const double tp = seconds([&] { b = qhe::evaluate_work_grid(spec, grid); }, 5);
    double diff = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) diff = std::fmax(diff, std::fabs(a[i] - b[i]));
    report("work grid 20000 points", ts, tp, diff);
  }
  return 0;
}
