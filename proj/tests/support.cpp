#include "support.hpp"

#include <cmath>

namespace elab::test {

Region random_region(int n, double keep_probability, RngSequence& rng,
                     bool avoid_top_row) {
  Region a = Region::empty(n);
  for (int i = 0; i < site_count(n); ++i) {
    Site s = site_at(i, n);
    if (avoid_top_row && s.row == n) continue;
    if (rng.uniform01() < keep_probability) a.members[i] = 1;
  }
  // Keep at least one site outside so the stopped walk is well defined.
  int outside = -1;
  for (int i = 0; i < site_count(n); ++i)
    if (!a.members[i]) outside = i;
  if (outside < 0) a.members[rng.uniform_int(static_cast<std::uint32_t>(site_count(n)))] = 0;
  return a;
}

std::vector<double> mc_exit_frequencies(const Region& a, Site start, int n, long walks,
                                        RngSequence& rng) {
  std::vector<double> freq(site_count(n), 0.0);
  for (long w = 0; w < walks; ++w) {
    Site pos = start;
    while (a.contains(pos)) pos = neighbors(pos, n)[rng.direction()];
    freq[site_index(pos, n)] += 1.0;
  }
  for (double& f : freq) f /= static_cast<double>(walks);
  return freq;
}

std::pair<double, double> mc_row0_visits(const Region& a, Site start, int n, long walks,
                                         RngSequence& rng) {
  double sum = 0.0, sum_sq = 0.0;
  for (long w = 0; w < walks; ++w) {
    Site pos = start;
    long visits = 0;
    while (a.contains(pos)) {
      if (pos.row == 0) ++visits;
      pos = neighbors(pos, n)[rng.direction()];
    }
    double value = static_cast<double>(visits) / (4.0 * n);
    sum += value;
    sum_sq += value * value;
  }
  double mean = sum / walks;
  double var = (sum_sq / walks - mean * mean) * walks / std::max<long>(walks - 1, 1);
  return {mean, std::sqrt(var / walks)};
}

}  // namespace elab::test
