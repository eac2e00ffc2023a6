#include "qhe/enumerate.hpp"

#include <string>

#include "qhe/errors.hpp"
#include "qhe/parallel.hpp"

namespace qhe {

namespace {

struct Chain {
  Mat2 hot;
  Mat2 cold;
  Vec2 start;
  double quantum;
  bool flip;  // three-stroke
};

Chain make_chain(const EngineConfig& cfg) {
  if (const auto* otto = std::get_if<OttoConfig>(&cfg)) {
    return {otto->hot_map().matrix(), otto->cold_map().matrix(), otto_steady_state(*otto).vec(),
            otto->work_quantum(), false};
  }
  const auto& ts = std::get<ThreeStrokeConfig>(cfg);
  return {ts.hot_map().matrix(), ts.cold_map().matrix(), three_stroke_steady_state(ts).vec(),
          ts.omega, true};
}

void check_cycles(int N) {
  if (N < 1) throw InvalidParameter("cycle count must be >= 1");
  if (N > kMaxEnumeratedCycles) {
    throw SizeLimit("path enumeration is limited to N <= " +
                    std::to_string(kMaxEnumeratedCycles) + ", got " + std::to_string(N));
  }
}

/// One cycle from `state`, choosing the post-heating level `mid` and the
/// post-cooling level `end`. Returns the branch weight and the work in units.
struct Step {
  double weight;
  int units;
};

inline Step step(const Chain& c, int state, int mid, int end) {
  if (c.flip) {
    const int flipped = 1 - mid;
    return {c.hot(mid, state) * c.cold(end, flipped), mid == 1 ? 1 : -1};
  }
  return {c.hot(mid, state) * c.cold(end, mid), mid - end};
}

void descend(const Chain& c, int remaining, int state, double weight, int units,
             std::vector<double>& hist, int offset) {
  if (remaining == 0) {
    hist[units + offset] += weight;
    return;
  }
  for (int mid = 0; mid < 2; ++mid) {
    for (int end = 0; end < 2; ++end) {
      const Step s = step(c, state, mid, end);
      if (s.weight == 0.0) continue;
      descend(c, remaining - 1, end, weight * s.weight, units + s.units, hist, offset);
    }
  }
}

WorkDistribution empty_distribution(const Chain& c, int N) {
  WorkDistribution dist;
  dist.work_quantum = c.quantum;
  dist.cycles = N;
  dist.probability.assign(2 * N + 1, 0.0);
  return dist;
}

}  // namespace

std::vector<std::pair<double, double>> WorkDistribution::support() const {
  std::vector<std::pair<double, double>> out;
  for (int k = -cycles; k <= cycles; ++k) {
    const double p = probability[k + cycles];
    if (p > 0.0) out.emplace_back(k * work_quantum, p);
  }
  return out;
}

double WorkDistribution::total() const {
  double s = 0.0;
  for (double p : probability) s += p;
  return s;
}

double WorkDistribution::mean() const {
  double m = 0.0;
  for (int k = -cycles; k <= cycles; ++k) m += k * probability[k + cycles];
  return m * work_quantum;
}

double WorkDistribution::variance() const {
  const double m = mean() / work_quantum;
  double v = 0.0;
  for (int k = -cycles; k <= cycles; ++k) v += (k - m) * (k - m) * probability[k + cycles];
  return v * work_quantum * work_quantum;
}

WorkDistribution enumerate_work_distribution_serial(const EngineConfig& cfg, int N) {
  check_cycles(N);
  const Chain c = make_chain(cfg);
  WorkDistribution dist = empty_distribution(c, N);
  for (int s = 0; s < 2; ++s) {
    if (c.start[s] == 0.0) continue;
    descend(c, N, s, c.start[s], 0, dist.probability, N);
  }
  return dist;
}

WorkDistribution enumerate_work_distribution(const EngineConfig& cfg, int N) {
  check_cycles(N);
  const Chain c = make_chain(cfg);
  WorkDistribution dist = empty_distribution(c, N);

  // Prefix = start level plus the branch choices of the first few cycles.
  const int prefix_cycles = N < 3 ? N : 3;
  const std::size_t per_start = std::size_t{1} << (2 * prefix_cycles);
  const std::size_t n_prefix = 2 * per_start;
  std::vector<std::vector<double>> partial(n_prefix);

  parallel_for_indexed(n_prefix, [&](std::size_t idx) {
    std::vector<double>& hist = partial[idx];
    hist.assign(2 * N + 1, 0.0);
    int state = static_cast<int>(idx / per_start);
    double weight = c.start[state];
    int units = 0;
    std::size_t code = idx % per_start;
    for (int k = 0; k < prefix_cycles && weight != 0.0; ++k) {
      const int mid = static_cast<int>(code & 1U);
      const int end = static_cast<int>((code >> 1) & 1U);
      code >>= 2;
      const Step s = step(c, state, mid, end);
      weight *= s.weight;
      units += s.units;
      state = end;
    }
    if (weight == 0.0) return;
    descend(c, N - prefix_cycles, state, weight, units, hist, N);
  });

  for (const auto& hist : partial) {
    for (std::size_t k = 0; k < hist.size(); ++k) dist.probability[k] += hist[k];
  }
  return dist;
}

}  // namespace qhe
