#include "erosion_lab/erosion.hpp"

#include <stdexcept>

#include "erosion_lab/errors.hpp"

namespace elab {

namespace {

// Walks from a uniform start on the given rim row until the state's color at
// the current site differs from `walk_color`, then returns that site.
Site walk_to_conversion(const Coloring& state, bool walk_color, int start_row,
                        RngSequence& rng, std::vector<Site>* walk, long walk_cap) {
  const int n = state.n();
  Site pos{static_cast<int>(rng.uniform_int(static_cast<std::uint32_t>(n))), start_row};
  long steps = 0;
  while (true) {
    if (walk) walk->push_back(pos);
    if (state.blue(pos) != walk_color) return pos;
    if (++steps > walk_cap) throw walk_cap_error(walk_cap);
    pos = neighbors(pos, n)[rng.direction()];
  }
}

}  // namespace

void erosion_step_inplace(Coloring& state, RngSequence& rng, StepTrace* trace,
                          long walk_cap) {
  if (!state.in_omega())
    throw std::invalid_argument("erosion_step requires an Omega state");
  Site x = walk_to_conversion(state, true, 0, rng, trace ? &trace->blue_walk : nullptr,
                              walk_cap);
  state.set_blue(x, true);
  if (trace) {
    trace->blue_convert = x;
    trace->intermediate = state;
  }
  Site y = walk_to_conversion(state, false, state.n(), rng,
                              trace ? &trace->red_walk : nullptr, walk_cap);
  state.set_blue(y, false);
  if (trace) trace->red_convert = y;
}

Coloring erosion_step(const Coloring& state, RngSequence& rng, StepTrace* trace,
                      long walk_cap) {
  Coloring next = state;
  erosion_step_inplace(next, rng, trace, walk_cap);
  return next;
}

long height_numerator(const Coloring& state) {
  const int n = state.n();
  long sum = 0;
  for (int i = 0; i < state.size(); ++i)
    if (state.blue(i)) sum += n - site_at(i, n).row;
  return sum;
}

double height(const Coloring& state) {
  return static_cast<double>(height_numerator(state)) / state.n();
}

int symmetric_difference_count(const Coloring& state) {
  const int n = state.n();
  const Rational& alpha = state.alpha();
  int count = 0;
  for (int i = 0; i < state.size(); ++i) {
    // {y <= alpha}  <=>  row * den <= n * num
    bool below = compare_ratio(site_at(i, n).row, n, alpha.num, alpha.den) <= 0;
    if (below != state.blue(i)) ++count;
  }
  return count;
}

GoodSetFlags classify(const Coloring& state, Rational epsilon) {
  if (!(Rational(0, 1) < epsilon))
    throw std::invalid_argument("epsilon must be positive");
  const int n = state.n();
  const Rational& alpha = state.alpha();
  const Rational lo = alpha - epsilon;
  const Rational hi = alpha + epsilon;

  GoodSetFlags flags;
  flags.epsilon = epsilon.value();

  // A_eps: everything strictly below alpha-eps blue, strictly above
  // alpha+eps red.
  bool in_a = true;
  // Omega_eps: rows with a wrong-colored site, counted per side of y=alpha
  // with strict inequalities.
  int bad_rows_below = 0;
  int bad_rows_above = 0;
  for (int row = 0; row <= n; ++row) {
    int cmp_alpha = compare_ratio(row, n, alpha.num, alpha.den);
    bool row_has_wrong = false;
    for (int col = 0; col < n; ++col) {
      bool blue = state.blue(Site{col, row});
      if (in_a) {
        if (compare_ratio(row, n, lo.num, lo.den) < 0 && !blue) in_a = false;
        if (compare_ratio(row, n, hi.num, hi.den) > 0 && blue) in_a = false;
      }
      if (cmp_alpha < 0 && !blue) row_has_wrong = true;
      if (cmp_alpha > 0 && blue) row_has_wrong = true;
    }
    if (row_has_wrong) {
      if (cmp_alpha < 0) ++bad_rows_below;
      if (cmp_alpha > 0) ++bad_rows_above;
    }
  }
  flags.in_A = in_a;
  // counts <= eps*n, exactly
  flags.in_Omega_eps = compare_ratio(bad_rows_below, n, epsilon.num, epsilon.den) <= 0 &&
                       compare_ratio(bad_rows_above, n, epsilon.num, epsilon.den) <= 0;

  // G_eps: |blue ^ {y <= alpha}| <= eps*n^2.
  long diff = symmetric_difference_count(state);
  flags.in_G = compare_ratio(diff, static_cast<std::int64_t>(n) * n, epsilon.num,
                             epsilon.den) <= 0;

  // Gamma_eps: h > (alpha(1-alpha/2) - eps) n^2, cross-multiplied exactly:
  // h = S/n with S integral, alpha = p/q, eps = a/b.
  const std::int64_t S = height_numerator(state);
  const std::int64_t p = alpha.num, q = alpha.den;
  const std::int64_t a = epsilon.num, b = epsilon.den;
  // S/n > [p(2q-p)/(2q^2) - a/b] n^2
  //  <=>  2*q*q*b*S > n^3 * (p(2q-p)b - 2q^2 a)
  __int128 lhs = static_cast<__int128>(2) * q * q * b * S;
  __int128 rhs = static_cast<__int128>(n) * n * n *
                 (static_cast<__int128>(p) * (2 * q - p) * b -
                  static_cast<__int128>(2) * q * q * a);
  flags.in_Gamma = lhs > rhs;
  return flags;
}

namespace {

// Reachable-set helper over an arbitrary allowed mask: BFS from all seed
// sites that are allowed.
std::vector<std::uint8_t> reach(const std::vector<std::uint8_t>& allowed,
                                const std::vector<int>& seeds, int n) {
  std::vector<std::uint8_t> seen(allowed.size(), 0);
  std::vector<int> stack;
  for (int s : seeds)
    if (allowed[s] && !seen[s]) {
      seen[s] = 1;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (Site w : neighbors(site_at(v, n), n)) {
      int j = site_index(w, n);
      if (allowed[j] && !seen[j]) {
        seen[j] = 1;
        stack.push_back(j);
      }
    }
  }
  return seen;
}

// Literal blocking test: Cyl_n minus `cut` is disconnected and no component
// of the remainder meets both the bottom-row and the top-row remainders.
bool is_blocking(const std::vector<std::uint8_t>& cut, int n) {
  const int total = site_count(n);
  std::vector<int> comp(total, -1);
  int comp_count = 0;
  for (int start = 0; start < total; ++start) {
    if (cut[start] || comp[start] >= 0) continue;
    std::vector<int> stack{start};
    comp[start] = comp_count;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (Site w : neighbors(site_at(v, n), n)) {
        int j = site_index(w, n);
        if (!cut[j] && comp[j] < 0) {
          comp[j] = comp_count;
          stack.push_back(j);
        }
      }
    }
    ++comp_count;
  }
  if (comp_count < 2) return false;
  std::vector<std::uint8_t> has_bottom(comp_count, 0), has_top(comp_count, 0);
  for (int col = 0; col < n; ++col) {
    int b = site_index(Site{col, 0}, n);
    int t = site_index(Site{col, n}, n);
    if (comp[b] >= 0) has_bottom[comp[b]] = 1;
    if (comp[t] >= 0) has_top[comp[t]] = 1;
  }
  for (int c = 0; c < comp_count; ++c)
    if (has_bottom[c] && has_top[c]) return false;
  return true;
}

}  // namespace

bool detect_blue_over_red_blocking(const Coloring& state) {
  const int n = state.n();
  const int total = state.size();

  // Greatest-fixpoint pair: Y starts at all red, then
  //   X = blue sites not reachable from row 0 in Cyl \ Y   (condition 1)
  //   Y = red sites not reachable from row n in Cyl \ X    (condition 2)
  // shrinks monotonically. Every certificate pair is contained in the
  // limit, so a certificate exists iff the limit sets are both blocking.
  std::vector<std::uint8_t> y_set(total), x_set(total);
  for (int i = 0; i < total; ++i) y_set[i] = !state.blue(i);

  std::vector<int> bottom_rim, top_rim;
  for (int col = 0; col < n; ++col) {
    bottom_rim.push_back(site_index(Site{col, 0}, n));
    top_rim.push_back(site_index(Site{col, n}, n));
  }

  while (true) {
    std::vector<std::uint8_t> allowed(total);
    for (int i = 0; i < total; ++i) allowed[i] = !y_set[i];
    auto bottom_reach = reach(allowed, bottom_rim, n);
    for (int i = 0; i < total; ++i) x_set[i] = state.blue(i) && !bottom_reach[i];

    for (int i = 0; i < total; ++i) allowed[i] = !x_set[i];
    auto top_reach = reach(allowed, top_rim, n);
    bool changed = false;
    for (int i = 0; i < total; ++i) {
      std::uint8_t want = !state.blue(i) && !top_reach[i];
      if (want != y_set[i]) changed = true;
      y_set[i] = want;
    }
    if (!changed) break;
  }

  return is_blocking(x_set, n) && is_blocking(y_set, n);
}

}  // namespace elab
