#pragma once

#include <vector>

#include "erosion_lab/coloring.hpp"
#include "erosion_lab/potential.hpp"
#include "erosion_lab/rng.hpp"

namespace elab::test {

/// Fixed master seed for all deterministic test randomness.
inline constexpr std::uint64_t kTestSeed = 0x5eed0001u;

inline RngSequence test_rng(std::uint64_t replica = 0, std::uint64_t walker = 0) {
  return RngStream{kTestSeed, replica}.walker(walker);
}

/// Random region: each site kept with the given probability (never the full
/// cylinder; one site is always dropped so absorbing solves stay regular).
Region random_region(int n, double keep_probability, RngSequence& rng,
                     bool avoid_top_row = false);

/// Monte Carlo estimate of an absorbing-walk functional: runs `walks`
/// simple random walks on Cyl_n from `start`, stopping on exiting `a`,
/// and returns per-site exit frequencies.
std::vector<double> mc_exit_frequencies(const Region& a, Site start, int n, long walks,
                                        RngSequence& rng);

/// Monte Carlo estimate of (1/(4n)) E[#visits to row 0 before exiting a].
/// Returns (estimate, standard error of the estimate).
std::pair<double, double> mc_row0_visits(const Region& a, Site start, int n, long walks,
                                         RngSequence& rng);

}  // namespace elab::test
