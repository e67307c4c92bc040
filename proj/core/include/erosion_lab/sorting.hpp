#pragma once

#include <vector>

#include "erosion_lab/coloring.hpp"
#include "erosion_lab/erosion.hpp"
#include "erosion_lab/rng.hpp"

namespace elab {

/// Bijective labeling of the sites of Cyl_n by {1..n(n+1)}.
class Labeling {
 public:
  Labeling(int n, std::vector<int> labels);

  /// Labels increase with (row, col): site (c,r) gets r*n + c + 1.
  static Labeling sorted(int n);
  /// Labels decrease with row: site (c,r) gets (n-r)*n + c + 1.
  static Labeling reverse_sorted(int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(labels_.size()); }
  int label(int index) const { return labels_[index]; }
  int label(Site s) const { return labels_[site_index(s, n_)]; }
  const std::vector<int>& labels() const { return labels_; }

  bool is_bijection() const;

  bool operator==(const Labeling& o) const { return n_ == o.n_ && labels_ == o.labels_; }

 private:
  int n_;
  std::vector<int> labels_;
};

/// First half step: a walker enters at a uniform row-0 site carrying label
/// 0, swaps whenever the vertex label exceeds the carried one (the entry
/// vertex included), stops once it carries N; all labels then increase
/// by 1. The result is again a bijection onto {1..N}.
Labeling sorting_half_step_up(const Labeling& lab, RngSequence& rng,
                              long walk_cap = kWalkCap);

/// Second half step, from the top with carried label N+1, swapping at
/// smaller labels until the walker carries 1; labels then decrease by 1.
Labeling sorting_half_step_down(const Labeling& lab, RngSequence& rng,
                                long walk_cap = kWalkCap);

/// One full diffusive-sorting step (both halves).
Labeling sorting_step(const Labeling& lab, RngSequence& rng, long walk_cap = kWalkCap);

/// S_k: the coloring whose blue set is {v : label(v) <= k}, with
/// alpha = k/(n(n+1)) so the result is an exact Omega state.
Coloring level_projection(const Labeling& lab, int k);

/// sup over sites of |label(v)/n^2 - y(v)|, the sortedness statistic.
double label_deviation(const Labeling& lab);

}  // namespace elab
