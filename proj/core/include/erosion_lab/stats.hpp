#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "erosion_lab/coloring.hpp"
#include "erosion_lab/erosion.hpp"
#include "erosion_lab/rng.hpp"

namespace elab {

struct DriftEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;  // 0 for exact
  long samples = 0;
  enum class Method { kMonteCarlo, kExact } method = Method::kMonteCarlo;
};

/// Mergeable sufficient statistics for replica Monte Carlo.
struct RunningStats {
  long count = 0;
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double x) {
    ++count;
    sum += x;
    sum_sq += x * x;
  }
  RunningStats& merge(const RunningStats& o) {
    count += o.count;
    sum += o.sum;
    sum_sq += o.sum_sq;
    return *this;
  }
  double mean() const { return count ? sum / count : 0.0; }
  double stderr_() const;
};

/// Monte Carlo one-step height drift from a fixed state: mean and standard
/// error of h(sigma_1) - h(sigma_0) over independent steps.
DriftEstimate drift_mc(const Coloring& state, long samples, RngSequence& rng);

/// Exact one-step height drift by conditioning on the blue conversion site:
/// (1/n) E[sum over row n of H_{R2(sigma_1/2)}] - (1/n) sum over row 0 of
/// H_{R1(sigma_0)}. One harmonic solve per reachable conversion site, so it
/// is limited to n <= 20.
DriftEstimate drift_exact(const Coloring& state);

using StatePredicate = std::function<bool(const Coloring&)>;

struct HitResult {
  bool hit = false;
  long t = 0;  // hitting time when hit, the cap otherwise
};

/// First t <= cap with sigma_t in the target (t=0 when the start already
/// is). A timeout is reported distinctly, never as a hit at the cap.
HitResult hitting_time(const Coloring& start, const StatePredicate& target, long cap,
                       RngSequence& rng);

struct OccupancyReport {
  std::vector<double> fractions;  // one per predicate
  std::vector<long> counts;
  long burn_in = 0;
  long steps = 0;
};

/// Fraction of t in (burn_in, burn_in+steps] with sigma_t in each predicate
/// set (the ergodic time-average estimator of the stationary measure).
OccupancyReport occupancy(const Coloring& start, const std::vector<StatePredicate>& predicates,
                          long burn_in, long steps, RngSequence& rng);

/// Parameters for the plug-in bounds.
struct BoundParams {
  double t1 = 0, t2 = 0, p1 = 0, p2 = 0;
  double A1 = 0, A2 = 0, a1 = 0, a2 = 0, a4 = 0, T = 0;
};

/// pi(B^c) <= t1/t2 + p1 + p2.
double hitstation_bound(const BoundParams& p);

/// Submartingale hitting bound exp(-(a2-a1*T)^2 / (4*A2^2*T)); requires
/// a2 - a1*T < 0.
double azuma_bound_part_i(const BoundParams& p);

struct AzumaPartII {
  double failure_probability = 0.0;  // exp(-a4^2/(32 A2^2 T)) + exp(-a1^2 T^2/(32 A2^2 T))
  double t_prime = 0.0;              // exp(min(a4^2, a1^2 T^2) / (32 A2^2 T))
};

/// Level-set escape bound; requires a4 > 2*A2 and T > 2*A2/a1.
AzumaPartII azuma_bound_part_ii(const BoundParams& p);

}  // namespace elab
