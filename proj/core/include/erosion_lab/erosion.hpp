#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "erosion_lab/coloring.hpp"

namespace elab {

/// Hard cap on any single walk; valid runs never get near it.
inline constexpr long kWalkCap = 1000000000L;

/// Record of one full chain step: the two walk trajectories, the two
/// converted sites, and the intermediate (Omega') state.
struct StepTrace {
  std::vector<Site> blue_walk;
  Site blue_convert{};
  std::vector<Site> red_walk;
  Site red_convert{};
  std::optional<Coloring> intermediate;
};

/// One competitive-erosion step. A blue walker starts uniformly on row 0
/// and converts the first red site it visits (the start site itself when
/// that is red); a red walker then starts uniformly on row n and converts
/// the first blue site of the intermediate state. The walkers use the
/// 4-regular kernel, so a boundary site is held with probability 1/4.
void erosion_step_inplace(Coloring& state, RngSequence& rng,
                          StepTrace* trace = nullptr, long walk_cap = kWalkCap);

Coloring erosion_step(const Coloring& state, RngSequence& rng,
                      StepTrace* trace = nullptr, long walk_cap = kWalkCap);

/// Integer n * h(state): sum over blue sites of (n - row).
long height_numerator(const Coloring& state);

/// Height function h = sum over blue sites of (1 - row/n). Exact (the
/// numerator is integral).
double height(const Coloring& state);

/// Membership in the four families of good sets at a given epsilon.
struct GoodSetFlags {
  bool in_A = false;         // all sites outside the eps-band correctly colored
  bool in_G = false;         // at most eps*n^2 sites differ from {y <= alpha}
  bool in_Gamma = false;     // height above (alpha(1-alpha/2)-eps)*n^2
  bool in_Omega_eps = false; // at most eps*n bad rows on each side of y=alpha
  double epsilon = 0.0;
};

/// All four flags evaluated with exact rational band comparisons. Sites with
/// y exactly alpha are never wrong-colored (the definitions are strict).
GoodSetFlags classify(const Coloring& state, Rational epsilon);

/// |sigma^{-1}(blue) symmetric-difference {y <= alpha}|.
int symmetric_difference_count(const Coloring& state);

/// True iff some monochromatic blue blocking set lies over some disjoint
/// monochromatic red blocking set, which certifies a transient state.
///
/// Search: alternate the two separation conditions as a monotone fixpoint.
/// Starting from Y = all red, shrink X to the blue sites cut off from the
/// bottom by Y, then shrink Y to the red sites cut off from the top by X,
/// until stable. Any valid certificate pair is contained in the fixpoint
/// pair, so the certificate exists iff both fixpoint sets are blocking.
bool detect_blue_over_red_blocking(const Coloring& state);

}  // namespace elab
