#pragma once

#include <cstdint>
#include <vector>

#include "erosion_lab/cyl_graph.hpp"
#include "erosion_lab/rational.hpp"
#include "erosion_lab/rng.hpp"

namespace elab {

/// Two-coloring of Cyl_n (true = blue = color 1, false = red = color 2)
/// with the blue fraction alpha carried along. A state is in Omega when
/// the blue count equals floor(alpha*n(n+1)) and in Omega' at one more.
class Coloring {
 public:
  Coloring(int n, Rational alpha);

  int n() const { return n_; }
  const Rational& alpha() const { return alpha_; }
  int size() const { return static_cast<int>(blue_.size()); }

  bool blue(int index) const { return blue_[index] != 0; }
  bool blue(Site s) const { return blue_[site_index(s, n_)] != 0; }
  void set_blue(int index, bool value);
  void set_blue(Site s, bool value) { set_blue(site_index(s, n_), value); }

  int blue_count() const { return blue_count_; }
  /// floor(alpha * n(n+1)), the Omega blue count.
  int omega_blue_count() const;
  bool in_omega() const { return blue_count_ == omega_blue_count(); }
  bool in_omega_prime() const { return blue_count_ == omega_blue_count() + 1; }

  const std::vector<std::uint8_t>& blue_mask() const { return blue_; }

  bool operator==(const Coloring& o) const {
    return n_ == o.n_ && alpha_ == o.alpha_ && blue_ == o.blue_;
  }
  bool operator!=(const Coloring& o) const { return !(*this == o); }

 private:
  int n_;
  Rational alpha_;
  std::vector<std::uint8_t> blue_;
  int blue_count_ = 0;
};

enum class InitKind { kSlab, kAntislab, kVertical, kCheckerboard, kBernoulli };

/// Builds a valid Omega state. slab colors the lowest floor(alpha*n(n+1))
/// sites blue in (row, col) order (the paper's sigma_max / sigma_*);
/// antislab the highest; vertical fills whole columns left to right.
/// checkerboard and bernoulli(p) are repaired to the exact blue count by
/// recoloring uniformly chosen sites of the majority color.
Coloring make_initial(InitKind kind, int n, Rational alpha, RngSequence& rng,
                      double bernoulli_p = 0.5);

InitKind parse_init_kind(const std::string& name);
const char* init_kind_name(InitKind kind);

/// Uniformly random Omega state (test utility; Fisher-Yates fill).
Coloring random_omega_state(int n, Rational alpha, RngSequence& rng);

/// The reflection y -> 1-y with colors swapped. Maps Omega(alpha) states to
/// Omega(alpha') states only when the counts cooperate, so it is exposed for
/// the symmetric constructions rather than as a chain operation.
Coloring reflect_swap(const Coloring& state);

}  // namespace elab
