#include "erosion_lab/sorting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "erosion_lab/errors.hpp"

namespace elab {

Labeling::Labeling(int n, std::vector<int> labels) : n_(n), labels_(std::move(labels)) {
  check_cylinder_size(n);
  if (static_cast<int>(labels_.size()) != site_count(n))
    throw std::invalid_argument("labeling has the wrong number of sites");
  if (!is_bijection())
    throw std::invalid_argument("labeling is not a bijection onto {1..n(n+1)}");
}

Labeling Labeling::sorted(int n) {
  check_cylinder_size(n);
  std::vector<int> labels(site_count(n));
  for (int i = 0; i < site_count(n); ++i) labels[i] = i + 1;
  return Labeling(n, std::move(labels));
}

Labeling Labeling::reverse_sorted(int n) {
  check_cylinder_size(n);
  std::vector<int> labels(site_count(n));
  for (int i = 0; i < site_count(n); ++i) {
    Site s = site_at(i, n);
    labels[i] = (n - s.row) * n + s.col + 1;
  }
  return Labeling(n, std::move(labels));
}

bool Labeling::is_bijection() const {
  std::vector<std::uint8_t> seen(labels_.size() + 1, 0);
  for (int v : labels_) {
    if (v < 1 || v > static_cast<int>(labels_.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

namespace {

// Shared phase body. The walker carries `carried` and swaps whenever
// cmp(vertex_label, carried) holds, starting at the entry vertex itself,
// until it carries `stop_label`.
template <typename Cmp>
void run_walker(std::vector<int>& labels, int n, int entry_row, int carried,
                int stop_label, Cmp cmp, RngSequence& rng, long walk_cap) {
  Site pos{static_cast<int>(rng.uniform_int(static_cast<std::uint32_t>(n))), entry_row};
  long steps = 0;
  while (true) {
    int& vertex = labels[site_index(pos, n)];
    if (cmp(vertex, carried)) std::swap(vertex, carried);
    if (carried == stop_label) return;
    if (++steps > walk_cap) throw walk_cap_error(walk_cap);
    pos = neighbors(pos, n)[rng.direction()];
  }
}

}  // namespace

Labeling sorting_half_step_up(const Labeling& lab, RngSequence& rng, long walk_cap) {
  const int n = lab.n();
  const int N = lab.size();
  std::vector<int> labels = lab.labels();
  run_walker(labels, n, 0, 0, N, [](int v, int c) { return v > c; }, rng, walk_cap);
  for (int& v : labels) ++v;  // labels were {0..N-1}
  return Labeling(n, std::move(labels));
}

Labeling sorting_half_step_down(const Labeling& lab, RngSequence& rng, long walk_cap) {
  const int n = lab.n();
  const int N = lab.size();
  std::vector<int> labels = lab.labels();
  run_walker(labels, n, n, N + 1, 1, [](int v, int c) { return v < c; }, rng, walk_cap);
  for (int& v : labels) --v;  // labels were {2..N+1}
  return Labeling(n, std::move(labels));
}

Labeling sorting_step(const Labeling& lab, RngSequence& rng, long walk_cap) {
  return sorting_half_step_down(sorting_half_step_up(lab, rng, walk_cap), rng, walk_cap);
}

Coloring level_projection(const Labeling& lab, int k) {
  const int N = lab.size();
  if (k < 0 || k > N)
    throw std::invalid_argument("projection level must lie in [0, n(n+1)]");
  // alpha = k/N makes the blue count exactly k; the Coloring type needs
  // alpha strictly inside (0,1), so clamp the degenerate ends to the
  // nearest representable fraction (the blue sets are still exact).
  Rational alpha = k == 0 ? Rational(1, 2 * N) : k == N ? Rational(2 * N - 1, 2 * N)
                                                        : Rational(k, N);
  Coloring out(lab.n(), alpha);
  for (int i = 0; i < N; ++i)
    if (lab.label(i) <= k) out.set_blue(i, true);
  return out;
}

double label_deviation(const Labeling& lab) {
  const int n = lab.n();
  double worst = 0.0;
  for (int i = 0; i < lab.size(); ++i) {
    Site s = site_at(i, n);
    double dev = std::abs(static_cast<double>(lab.label(i)) / (static_cast<double>(n) * n) -
                          static_cast<double>(s.row) / n);
    worst = std::max(worst, dev);
  }
  return worst;
}

}  // namespace elab
