#include "erosion_lab/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace elab {

Coloring::Coloring(int n, Rational alpha) : n_(n), alpha_(alpha) {
  check_cylinder_size(n);
  if (!(Rational(0, 1) < alpha && alpha < Rational(1, 1)))
    throw std::invalid_argument("alpha must lie strictly between 0 and 1");
  blue_.assign(site_count(n), 0);
}

void Coloring::set_blue(int index, bool value) {
  std::uint8_t v = value ? 1 : 0;
  if (blue_[index] == v) return;
  blue_[index] = v;
  blue_count_ += value ? 1 : -1;
}

int Coloring::omega_blue_count() const {
  return static_cast<int>(alpha_.floor_mul(site_count(n_)));
}

namespace {

void check_target(int k, int total) {
  if (k < 1 || k > total - 1)
    throw std::invalid_argument("floor(alpha*n(n+1)) = " + std::to_string(k) +
                                " leaves no room for both colors");
}

// Recolors uniformly chosen sites of the majority color until the count is
// exact.
void repair_count(Coloring& c, int target, RngSequence& rng) {
  while (c.blue_count() != target) {
    bool remove = c.blue_count() > target;
    int excess_seen = 0;
    int pick = -1;
    // Reservoir-sample one site of the color to flip.
    for (int i = 0; i < c.size(); ++i) {
      if (c.blue(i) == remove) {
        ++excess_seen;
        if (rng.uniform_int(static_cast<std::uint32_t>(excess_seen)) == 0) pick = i;
      }
    }
    c.set_blue(pick, !remove);
  }
}

}  // namespace

Coloring make_initial(InitKind kind, int n, Rational alpha, RngSequence& rng,
                      double bernoulli_p) {
  Coloring c(n, alpha);
  const int total = site_count(n);
  const int k = c.omega_blue_count();
  check_target(k, total);
  switch (kind) {
    case InitKind::kSlab:
      for (int i = 0; i < k; ++i) c.set_blue(i, true);
      break;
    case InitKind::kAntislab:
      for (int i = 0; i < k; ++i) c.set_blue(total - 1 - i, true);
      break;
    case InitKind::kVertical: {
      int placed = 0;
      for (int col = 0; col < n && placed < k; ++col)
        for (int row = 0; row <= n && placed < k; ++row, ++placed)
          c.set_blue(Site{col, row}, true);
      break;
    }
    case InitKind::kCheckerboard:
      for (int i = 0; i < total; ++i) {
        Site s = site_at(i, n);
        if ((s.col + s.row) % 2 == 0) c.set_blue(i, true);
      }
      repair_count(c, k, rng);
      break;
    case InitKind::kBernoulli:
      if (!(bernoulli_p > 0.0 && bernoulli_p < 1.0))
        throw std::invalid_argument("bernoulli probability must lie in (0,1)");
      for (int i = 0; i < total; ++i)
        if (rng.uniform01() < bernoulli_p) c.set_blue(i, true);
      repair_count(c, k, rng);
      break;
  }
  return c;
}

InitKind parse_init_kind(const std::string& name) {
  if (name == "slab") return InitKind::kSlab;
  if (name == "antislab") return InitKind::kAntislab;
  if (name == "vertical") return InitKind::kVertical;
  if (name == "checkerboard") return InitKind::kCheckerboard;
  if (name == "bernoulli") return InitKind::kBernoulli;
  throw std::invalid_argument("unknown initial condition: " + name);
}

const char* init_kind_name(InitKind kind) {
  switch (kind) {
    case InitKind::kSlab: return "slab";
    case InitKind::kAntislab: return "antislab";
    case InitKind::kVertical: return "vertical";
    case InitKind::kCheckerboard: return "checkerboard";
    case InitKind::kBernoulli: return "bernoulli";
  }
  return "?";
}

Coloring random_omega_state(int n, Rational alpha, RngSequence& rng) {
  Coloring c(n, alpha);
  const int total = site_count(n);
  const int k = c.omega_blue_count();
  check_target(k, total);
  std::vector<int> perm(total);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = total - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.uniform_int(static_cast<std::uint32_t>(i + 1))]);
  for (int i = 0; i < k; ++i) c.set_blue(perm[i], true);
  return c;
}

Coloring reflect_swap(const Coloring& state) {
  const int n = state.n();
  Coloring out(n, Rational(1, 1) - state.alpha());
  for (int i = 0; i < state.size(); ++i) {
    Site s = site_at(i, n);
    Site r{s.col, n - s.row};
    out.set_blue(r, !state.blue(i));
  }
  return out;
}

}  // namespace elab
