#include "erosion_lab/stats.hpp"

#include <cmath>
#include <stdexcept>

#include "erosion_lab/errors.hpp"
#include "erosion_lab/potential.hpp"
#include "erosion_lab/regions.hpp"

namespace elab {

double RunningStats::stderr_() const {
  if (count < 2) return 0.0;
  double m = mean();
  double var = (sum_sq - count * m * m) / (count - 1);
  if (var < 0) var = 0;
  return std::sqrt(var / count);
}

DriftEstimate drift_mc(const Coloring& state, long samples, RngSequence& rng) {
  if (samples < 100)
    throw std::invalid_argument("drift_mc needs at least 100 samples");
  const long h0 = height_numerator(state);
  RunningStats stats;
  Coloring work = state;
  for (long i = 0; i < samples; ++i) {
    work = state;
    erosion_step_inplace(work, rng);
    stats.add(static_cast<double>(height_numerator(work) - h0) / state.n());
  }
  DriftEstimate est;
  est.mean = stats.mean();
  est.stderr_ = stats.stderr_();
  est.samples = samples;
  est.method = DriftEstimate::Method::kMonteCarlo;
  return est;
}

DriftEstimate drift_exact(const Coloring& state) {
  const int n = state.n();
  if (n > 20)
    throw resource_error("drift_exact enumerates conversion sites; n <= 20 required");
  if (!state.in_omega())
    throw std::invalid_argument("drift_exact requires an Omega state");

  // Blue walker: exit law of the blue set from a uniform row-0 start. The
  // exit sites are exactly the candidate conversion sites.
  Region blue_region = Region::empty(n);
  for (int i = 0; i < state.size(); ++i) blue_region.members[i] = state.blue(i);
  auto exit_blue = exit_distribution(blue_region, uniform_row_distribution(0, n), n);

  // First term: conditional expectation over the intermediate state.
  double top_sum_expect = 0.0;
  for (int z = 0; z < state.size(); ++z) {
    if (exit_blue[z] <= 0.0) continue;
    Coloring half = state;
    half.set_blue(z, true);
    auto regions = reach_regions(half);
    PotentialField h2 = expected_exit_height(regions.r2, n);
    double top_sum = 0.0;
    for (int col = 0; col < n; ++col) top_sum += h2.at(Site{col, n});
    top_sum_expect += exit_blue[z] * top_sum;
  }

  auto regions0 = reach_regions(state);
  PotentialField h1 = expected_exit_height(regions0.r1, n);
  double bottom_sum = 0.0;
  for (int col = 0; col < n; ++col) bottom_sum += h1.at(Site{col, 0});

  DriftEstimate est;
  est.mean = top_sum_expect / n - bottom_sum / n;
  est.stderr_ = 0.0;
  est.samples = 0;
  est.method = DriftEstimate::Method::kExact;
  return est;
}

HitResult hitting_time(const Coloring& start, const StatePredicate& target, long cap,
                       RngSequence& rng) {
  if (cap < 1) throw std::invalid_argument("hitting cap must be at least 1");
  if (target(start)) return HitResult{true, 0};
  Coloring state = start;
  for (long t = 1; t <= cap; ++t) {
    erosion_step_inplace(state, rng);
    if (target(state)) return HitResult{true, t};
  }
  return HitResult{false, cap};
}

OccupancyReport occupancy(const Coloring& start, const std::vector<StatePredicate>& predicates,
                          long burn_in, long steps, RngSequence& rng) {
  if (steps < 1) throw std::invalid_argument("occupancy needs at least one step");
  OccupancyReport report;
  report.burn_in = burn_in;
  report.steps = steps;
  report.counts.assign(predicates.size(), 0);
  Coloring state = start;
  for (long t = 0; t < burn_in; ++t) erosion_step_inplace(state, rng);
  for (long t = 0; t < steps; ++t) {
    erosion_step_inplace(state, rng);
    for (std::size_t i = 0; i < predicates.size(); ++i)
      if (predicates[i](state)) ++report.counts[i];
  }
  report.fractions.resize(predicates.size());
  for (std::size_t i = 0; i < predicates.size(); ++i)
    report.fractions[i] = static_cast<double>(report.counts[i]) / steps;
  return report;
}

double hitstation_bound(const BoundParams& p) {
  if (p.t2 <= 0) throw std::invalid_argument("hitstation bound requires t2 > 0");
  return p.t1 / p.t2 + p.p1 + p.p2;
}

double azuma_bound_part_i(const BoundParams& p) {
  if (!(p.A2 > 0) || !(p.T > 0))
    throw std::invalid_argument("azuma part i requires positive A2 and T");
  if (!(p.a2 - p.a1 * p.T < 0))
    throw std::invalid_argument("azuma part i requires a2 - a1*T < 0");
  double num = p.a2 - p.a1 * p.T;
  return std::exp(-(num * num) / (4.0 * p.A2 * p.A2 * p.T));
}

AzumaPartII azuma_bound_part_ii(const BoundParams& p) {
  if (!(p.A2 > 0) || !(p.a1 > 0))
    throw std::invalid_argument("azuma part ii requires positive A2 and a1");
  if (!(p.a4 > 2 * p.A2))
    throw std::invalid_argument("azuma part ii requires a4 > 2*A2");
  if (!(p.T > 2 * p.A2 / p.a1))
    throw std::invalid_argument("azuma part ii requires T > 2*A2/a1");
  const double denom = 32.0 * p.A2 * p.A2 * p.T;
  AzumaPartII out;
  out.failure_probability =
      std::exp(-(p.a4 * p.a4) / denom) + std::exp(-(p.a1 * p.a1 * p.T * p.T) / denom);
  out.t_prime = std::exp(std::min(p.a4 * p.a4, p.a1 * p.a1 * p.T * p.T) / denom);
  return out;
}

}  // namespace elab
