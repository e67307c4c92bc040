#include "erosion_lab/potential.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "erosion_lab/errors.hpp"

namespace elab {

namespace {

constexpr int kDenseLimit = 3000;

// Equation layout for an absorbing solve on the sites of `a`.
struct AbsorbingLayout {
  std::vector<int> eq_of_site;  // -1 outside a
  std::vector<int> site_of_eq;

  AbsorbingLayout(const Region& a, int n) : eq_of_site(site_count(n), -1) {
    for (int i = 0; i < site_count(n); ++i)
      if (a.contains(i)) {
        eq_of_site[i] = static_cast<int>(site_of_eq.size());
        site_of_eq.push_back(i);
      }
  }
  int equations() const { return static_cast<int>(site_of_eq.size()); }
};

// Solves (I - P_AA) x = b where P is the uniform 4-slot kernel restricted
// to the region. Returns the solution and the max-norm residual.
std::vector<double> solve_absorbing(const Region& a, int n, const std::vector<double>& b,
                                    double* residual_out) {
  const AbsorbingLayout layout(a, n);
  const int m = layout.equations();
  if (m == 0) {
    if (residual_out) *residual_out = 0.0;
    return {};
  }

  Eigen::VectorXd rhs(m);
  for (int e = 0; e < m; ++e) rhs[e] = b[e];

  Eigen::VectorXd x;
  if (m <= kDenseLimit) {
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(m, m);
    for (int e = 0; e < m; ++e) {
      mat(e, e) = 1.0;
      Site s = site_at(layout.site_of_eq[e], n);
      for (Site w : neighbors(s, n)) {
        int j = layout.eq_of_site[site_index(w, n)];
        if (j >= 0) mat(e, j) -= 0.25;
      }
    }
    x = mat.partialPivLu().solve(rhs);
  } else {
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(m) * 5);
    for (int e = 0; e < m; ++e) {
      double diag = 1.0;
      Site s = site_at(layout.site_of_eq[e], n);
      for (Site w : neighbors(s, n)) {
        int j = layout.eq_of_site[site_index(w, n)];
        if (j == e)
          diag -= 0.25;
        else if (j >= 0)
          trips.emplace_back(e, j, -0.25);
      }
      trips.emplace_back(e, e, diag);
    }
    Eigen::SparseMatrix<double> mat(m, m);
    mat.setFromTriplets(trips.begin(), trips.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu(mat);
    if (lu.info() != Eigen::Success)
      throw numeric_error("sparse factorization failed", std::nan(""));
    x = lu.solve(rhs);
  }

  // True residual of the assembled equations.
  double residual = 0.0;
  for (int e = 0; e < m; ++e) {
    Site s = site_at(layout.site_of_eq[e], n);
    double row = x[e];
    for (Site w : neighbors(s, n)) {
      int j = layout.eq_of_site[site_index(w, n)];
      if (j >= 0) row -= 0.25 * x[j];
    }
    residual = std::max(residual, std::abs(row - rhs[e]));
  }
  if (residual_out) *residual_out = residual;
  if (!(residual <= kSolveTolerance))
    throw numeric_error("absorbing solve missed the residual target", residual);

  std::vector<double> out(x.data(), x.data() + m);
  return out;
}

void check_region(const Region& a, int n) {
  check_cylinder_size(n);
  if (static_cast<int>(a.members.size()) != site_count(n))
    throw std::invalid_argument("region mask has the wrong size for Cyl_n");
}

}  // namespace

PotentialField expected_exit_height(const Region& a, int n) {
  check_region(a, n);
  const AbsorbingLayout layout(a, n);
  std::vector<double> b(layout.equations(), 0.0);
  for (int e = 0; e < layout.equations(); ++e) {
    Site s = site_at(layout.site_of_eq[e], n);
    for (Site w : neighbors(s, n))
      if (!a.contains(w)) b[e] += 0.25 * (static_cast<double>(w.row) / n);
  }
  PotentialField field;
  field.n = n;
  field.values.resize(site_count(n));
  auto x = solve_absorbing(a, n, b, &field.residual);
  for (int i = 0; i < site_count(n); ++i) {
    int e = layout.eq_of_site[i];
    field.values[i] = e >= 0 ? x[e] : static_cast<double>(site_at(i, n).row) / n;
  }
  return field;
}

PotentialField stopped_green(const Region& a, int n) {
  check_region(a, n);
  for (int col = 0; col < n; ++col)
    if (a.contains(Site{col, n}))
      throw std::invalid_argument("stopped_green requires A disjoint from the top row");
  PotentialField h = expected_exit_height(a, n);
  PotentialField g;
  g.n = n;
  g.residual = h.residual;
  g.values.resize(site_count(n));
  for (int i = 0; i < site_count(n); ++i)
    g.values[i] = h.values[i] - static_cast<double>(site_at(i, n).row) / n;
  return g;
}

PotentialField stopped_green_visit_count(const Region& a, int n) {
  check_region(a, n);
  for (int col = 0; col < n; ++col)
    if (a.contains(Site{col, n}))
      throw std::invalid_argument("stopped_green requires A disjoint from the top row");
  const AbsorbingLayout layout(a, n);
  std::vector<double> b(layout.equations(), 0.0);
  for (int e = 0; e < layout.equations(); ++e)
    if (site_at(layout.site_of_eq[e], n).row == 0) b[e] = 1.0;
  PotentialField field;
  field.n = n;
  field.values.assign(site_count(n), 0.0);
  auto x = solve_absorbing(a, n, b, &field.residual);
  for (int e = 0; e < layout.equations(); ++e)
    field.values[layout.site_of_eq[e]] = x[e] / (4.0 * n);
  return field;
}

std::vector<double> uniform_row_distribution(int row, int n) {
  check_cylinder_size(n);
  if (row < 0 || row > n) throw std::invalid_argument("row outside the cylinder");
  std::vector<double> mu(site_count(n), 0.0);
  for (int col = 0; col < n; ++col) mu[site_index(Site{col, row}, n)] = 1.0 / n;
  return mu;
}

std::vector<double> exit_distribution(const Region& a, const std::vector<double>& start,
                                      int n) {
  check_region(a, n);
  if (static_cast<int>(start.size()) != site_count(n))
    throw std::invalid_argument("start distribution has the wrong size");
  double total = 0.0;
  for (double p : start) {
    if (p < 0) throw std::invalid_argument("start distribution has negative mass");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("start distribution does not sum to 1");

  const AbsorbingLayout layout(a, n);
  // Expected visit counts: (I - P_AA) nu = start|_A. The slot kernel is
  // symmetric, so the transpose solve is the same system.
  std::vector<double> b(layout.equations(), 0.0);
  for (int e = 0; e < layout.equations(); ++e) b[e] = start[layout.site_of_eq[e]];
  auto nu = solve_absorbing(a, n, b, nullptr);

  std::vector<double> exit(site_count(n), 0.0);
  for (int i = 0; i < site_count(n); ++i)
    if (!a.contains(i)) exit[i] = start[i];  // immediate-exit atoms
  for (int e = 0; e < layout.equations(); ++e) {
    Site s = site_at(layout.site_of_eq[e], n);
    for (Site w : neighbors(s, n)) {
      int j = site_index(w, n);
      if (!a.contains(j)) exit[j] += 0.25 * nu[e];
    }
  }
  return exit;
}

Flow::Flow(int n) : n_(n) {
  check_cylinder_size(n);
  horiz_.assign(static_cast<std::size_t>(n) * (n + 1), 0.0);
  vert_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

namespace {

// Locates the storage slot for the traversal (s, d): index into horiz/vert
// plus the sign relating the traversal to the stored orientation.
struct EdgeRef {
  bool horizontal = false;
  bool self_loop = false;
  int index = 0;
  double sign = 1.0;
};

EdgeRef edge_ref(Site s, Direction d, int n) {
  EdgeRef ref;
  switch (d) {
    case kRight:
      ref.horizontal = true;
      ref.index = s.row * n + s.col;
      ref.sign = 1.0;
      break;
    case kLeft:
      ref.horizontal = true;
      ref.index = s.row * n + (s.col + n - 1) % n;
      ref.sign = -1.0;
      break;
    case kUp:
      if (s.row == n) {
        ref.self_loop = true;
      } else {
        ref.index = s.row * n + s.col;
        ref.sign = 1.0;
      }
      break;
    case kDown:
      if (s.row == 0) {
        ref.self_loop = true;
      } else {
        ref.index = (s.row - 1) * n + s.col;
        ref.sign = -1.0;
      }
      break;
  }
  return ref;
}

}  // namespace

double Flow::value(Site s, Direction d) const {
  check_site(s, n_);
  EdgeRef ref = edge_ref(s, d, n_);
  if (ref.self_loop) return 0.0;
  return ref.sign * (ref.horizontal ? horiz_[ref.index] : vert_[ref.index]);
}

void Flow::set_value(Site s, Direction d, double v) {
  check_site(s, n_);
  EdgeRef ref = edge_ref(s, d, n_);
  if (ref.self_loop) {
    if (v != 0.0) throw std::invalid_argument("a flow is 0 on self-loops");
    return;
  }
  (ref.horizontal ? horiz_ : vert_)[ref.index] = ref.sign * v;
}

void Flow::add_value(Site s, Direction d, double v) {
  set_value(s, d, value(s, d) + v);
}

Flow Flow::from_directed(int n, const std::vector<DirectedValue>& entries, double tol) {
  Flow f(n);
  // 0 = unset, 1 = horizontal set, 2 = vertical set
  std::vector<std::uint8_t> seen_h(f.horiz_.size(), 0), seen_v(f.vert_.size(), 0);
  for (const auto& e : entries) {
    check_site(e.site, n);
    EdgeRef ref = edge_ref(e.site, e.dir, n);
    if (ref.self_loop) {
      if (e.value != 0.0)
        throw std::invalid_argument("self-loop flow value must be 0");
      continue;
    }
    auto& store = ref.horizontal ? f.horiz_ : f.vert_;
    auto& seen = ref.horizontal ? seen_h : seen_v;
    double canonical = ref.sign * e.value;
    if (seen[ref.index] && std::abs(store[ref.index] - canonical) > tol)
      throw std::invalid_argument("flow antisymmetry violation");
    store[ref.index] = canonical;
    seen[ref.index] = 1;
  }
  return f;
}

FlowMetrics flow_metrics(const Flow& f) {
  const int n = f.n();
  FlowMetrics m;
  m.divergence.assign(site_count(n), 0.0);
  for (int row = 0; row <= n; ++row) {
    for (int col = 0; col < n; ++col) {
      double v = f.horizontal()[row * n + col];
      m.energy += v * v;
      // stored orientation: (col,row) -> (col+1,row)
      m.divergence[site_index(Site{(col + 1) % n, row}, n)] += v;
      m.divergence[site_index(Site{col, row}, n)] -= v;
    }
  }
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      double v = f.vertical()[row * n + col];
      m.energy += v * v;
      m.divergence[site_index(Site{col, row + 1}, n)] += v;
      m.divergence[site_index(Site{col, row}, n)] -= v;
    }
  }
  return m;
}

Flow gradient_flow(const PotentialField& g) {
  const int n = g.n;
  Flow f(n);
  for (int row = 0; row <= n; ++row)
    for (int col = 0; col < n; ++col)
      f.set_value(Site{col, row}, kRight,
                  g.at(Site{(col + 1) % n, row}) - g.at(Site{col, row}));
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col)
      f.set_value(Site{col, row}, kUp, g.at(Site{col, row + 1}) - g.at(Site{col, row}));
  return f;
}

namespace {

void check_profile_matches(const ColumnProfile& profile, const TruncatedRegion& r1_trunc,
                           int n) {
  if (profile.n != n || static_cast<int>(profile.y_star_row.size()) != n)
    throw std::invalid_argument("column profile has the wrong size");
  for (int col = 0; col < n; ++col) {
    int first_out = n + 1;
    for (int row = 0; row <= n; ++row)
      if (!r1_trunc.contains(Site{col, row})) {
        first_out = row;
        break;
      }
    if (first_out != profile.y_star_row[col])
      throw std::invalid_argument("column profile is inconsistent with the region");
  }
}

}  // namespace

Flow trivial_flow(const ColumnProfile& profile, const TruncatedRegion& r1_trunc, int n) {
  check_region(r1_trunc, n);
  check_profile_matches(profile, r1_trunc, n);
  Flow f(n);
  for (int col = 0; col < n; ++col)
    for (int row = 0; row < profile.y_star_row[col]; ++row)
      f.set_value(Site{col, row}, kUp, -1.0 / n);
  return f;
}

Region truncated_boundary(const TruncatedRegion& r1_trunc, int n) {
  check_region(r1_trunc, n);
  Region out = Region::empty(n);
  for (int i = 0; i < site_count(n); ++i) {
    if (r1_trunc.members[i]) continue;
    Site s = site_at(i, n);
    if (s.row == 0) {
      out.members[i] = 1;  // adjacent to the phantom row below the cylinder
      continue;
    }
    for (Site w : neighbors(s, n)) {
      if (w == s) continue;
      if (r1_trunc.contains(w)) {
        out.members[i] = 1;
        break;
      }
    }
  }
  return out;
}

Flow bend_flow(const BendSpec& spec, const ColumnProfile& profile,
               const TruncatedRegion& r1_trunc, int n) {
  check_region(r1_trunc, n);
  check_profile_matches(profile, r1_trunc, n);
  Flow f = trivial_flow(profile, r1_trunc, n);

  std::vector<std::uint8_t> level_used(n + 1, 0);
  for (const BendColumn& bent : spec.w2) {
    const int k = bent.col;
    const int level = bent.level_row;
    if (k < 0 || k >= n || level < 0 || level > n)
      throw std::invalid_argument("bent column outside the cylinder");
    if (level_used[level])
      throw std::invalid_argument("bent columns must use distinct levels");
    level_used[level] = 1;
    const int y_star = profile.y_star_row[k];
    if (level >= y_star)
      throw std::invalid_argument("bend level must lie strictly below y*_k");
    const double gap = static_cast<double>(y_star - level) / n;
    if (gap + 1e-12 < spec.c / 8.0)
      throw std::invalid_argument("bent column violates y*_k - y_k >= c/8");
    if (std::abs(bent.d - 1.0 / (1.0 + gap)) > 1e-9)
      throw std::invalid_argument("bent split is not 1/(1 + y*_k - y_k)");
    if (r1_trunc.contains(Site{bent.target_col, level}))
      throw std::invalid_argument("bend target must lie outside the region");

    // Reroute the vertical mass above the bend level.
    for (int row = level; row < y_star; ++row)
      f.set_value(Site{k, row}, kUp, -bent.d / n);

    // Horizontal run along the shorter arc (ties rightward); interior
    // sites must belong to the region for the divergence conditions.
    int dist_right = (bent.target_col - k + n) % n;
    int dist_left = (k - bent.target_col + n) % n;
    if (dist_right == 0) throw std::invalid_argument("bend target equals the bent column");
    bool rightward = dist_right <= dist_left;
    int dist = rightward ? dist_right : dist_left;
    int col = k;
    for (int step = 0; step < dist; ++step) {
      int next = rightward ? (col + 1) % n : (col + n - 1) % n;
      if (step + 1 < dist && !r1_trunc.contains(Site{next, level}))
        throw std::invalid_argument("horizontal run leaves the region before its target");
      f.set_value(Site{col, level}, rightward ? kRight : kLeft, -(1.0 - bent.d) / n);
      col = next;
    }
  }
  return f;
}

double bent_energy_bound(const BendSpec& spec, const ColumnProfile& profile, int n) {
  double bound = profile.y_star_mean();
  for (const BendColumn& bent : spec.w2) {
    double gap = static_cast<double>(profile.y_star_row[bent.col] - bent.level_row) / n;
    bound -= gap * gap / ((gap + 1.0) * n);
  }
  return bound;
}

std::optional<BendSpec> make_bend_spec(const ColumnProfile& profile,
                                       const TruncatedRegion& r1_trunc, double m, double c,
                                       int n) {
  check_region(r1_trunc, n);
  if (!(m > 0.0 && m < 1.0) || !(c > 0.0))
    throw std::invalid_argument("bend level m must lie in (0,1) and c must be positive");
  Region boundary = truncated_boundary(r1_trunc, n);

  // Rows at or below m - c/4 that meet the boundary, highest first.
  std::vector<int> candidate_rows;
  for (int row = n; row >= 0; --row) {
    if (static_cast<double>(row) / n > m - c / 4.0 + 1e-12) continue;
    for (int col = 0; col < n; ++col)
      if (boundary.contains(Site{col, row})) {
        candidate_rows.push_back(row);
        break;
      }
  }
  if (candidate_rows.empty()) return std::nullopt;

  BendSpec spec;
  spec.m = m;
  spec.c = c;
  for (int col = 0; col < n; ++col)
    if (static_cast<double>(profile.y_star_star_row[col]) / n >= m - 1e-12)
      spec.w1.push_back(col);
  int w1_size = std::max<int>(1, static_cast<int>(c * n / 6.0));
  if (static_cast<int>(spec.w1.size()) > w1_size) spec.w1.resize(w1_size);

  for (int col : spec.w1) {
    int y_star = profile.y_star_row[col];
    if (y_star > n) continue;  // column entirely inside the region
    if (static_cast<double>(y_star) / n < m - c / 8.0 - 1e-12) continue;
    // Largest unused boundary row strictly below y*_col.
    std::size_t pick = 0;
    while (pick < candidate_rows.size() && candidate_rows[pick] >= y_star) ++pick;
    if (pick >= candidate_rows.size()) continue;
    int level = candidate_rows[pick];
    candidate_rows.erase(candidate_rows.begin() + static_cast<long>(pick));

    // Circularly closest boundary column on the chosen row.
    int target = -1;
    for (int offset = 1; offset < n && target < 0; ++offset) {
      int right = (col + offset) % n;
      int left = (col + n - offset) % n;
      if (boundary.contains(Site{right, level}))
        target = right;
      else if (boundary.contains(Site{left, level}))
        target = left;
    }
    if (target < 0) continue;
    double gap = static_cast<double>(y_star - level) / n;
    spec.w2.push_back(BendColumn{col, target, level, 1.0 / (1.0 + gap)});
  }
  if (spec.w2.empty()) return std::nullopt;
  return spec;
}

GeneralGraph cylinder_general_graph(int n) {
  check_cylinder_size(n);
  GeneralGraph g;
  g.degree = 4;
  g.adj.resize(site_count(n));
  for (int i = 0; i < site_count(n); ++i)
    for (Site w : neighbors(site_at(i, n), n)) g.adj[i].push_back(site_index(w, n));
  return g;
}

std::vector<double> apply_laplacian(const GeneralGraph& graph, const std::vector<double>& g) {
  if (static_cast<int>(g.size()) != graph.size())
    throw std::invalid_argument("field size does not match the graph");
  std::vector<double> out(g.size(), 0.0);
  for (int v = 0; v < graph.size(); ++v) {
    double acc = 0.0;
    for (int w : graph.adj[v]) acc += g[v] - g[w];
    out[v] = acc / graph.degree;
  }
  return out;
}

std::vector<double> apply_laplacian_cyl(const std::vector<double>& f, int n) {
  check_cylinder_size(n);
  if (static_cast<int>(f.size()) != site_count(n))
    throw std::invalid_argument("field size does not match Cyl_n");
  std::vector<double> out(f.size(), 0.0);
  for (int i = 0; i < site_count(n); ++i) {
    double acc = 0.0;
    for (Site w : neighbors(site_at(i, n), n)) acc += f[site_index(w, n)];
    out[i] = f[i] - 0.25 * acc;
  }
  return out;
}

namespace {

void check_distribution(const std::vector<double>& mu, int size, const char* name) {
  if (static_cast<int>(mu.size()) != size)
    throw std::invalid_argument(std::string(name) + " has the wrong size");
  double total = 0.0;
  for (double p : mu) {
    if (p < 0) throw std::invalid_argument(std::string(name) + " has negative mass");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument(std::string(name) + " does not sum to 1");
}

}  // namespace

std::vector<double> solve_poisson(const GeneralGraph& graph, const std::vector<double>& mu1,
                                  const std::vector<double>& mu2, double* residual_out) {
  const int size = graph.size();
  if (size == 0) throw std::invalid_argument("empty graph");
  if (graph.degree < 1) throw std::invalid_argument("graph degree must be positive");
  for (int v = 0; v < size; ++v)
    if (static_cast<int>(graph.adj[v].size()) != graph.degree)
      throw std::invalid_argument("graph is not regular");
  check_distribution(mu1, size, "mu1");
  check_distribution(mu2, size, "mu2");

  // Connectivity (self-loops ignored).
  {
    std::vector<std::uint8_t> seen(size, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : graph.adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached != size) throw std::invalid_argument("graph is disconnected");
  }

  // Delta g = mu1 - mu2 determines g up to constants; the first equation is
  // replaced by sum g = 0, which is exact because the residual rows sum to
  // zero.
  Eigen::VectorXd b(size);
  for (int v = 0; v < size; ++v) b[v] = mu1[v] - mu2[v];
  b[0] = 0.0;

  Eigen::VectorXd x;
  const double inv_r = 1.0 / graph.degree;
  if (size <= kDenseLimit) {
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(size, size);
    for (int v = 0; v < size; ++v) {
      if (v == 0) continue;
      mat(v, v) += 1.0;
      for (int w : graph.adj[v]) mat(v, w) -= inv_r;
    }
    for (int w = 0; w < size; ++w) mat(0, w) = 1.0;
    x = mat.partialPivLu().solve(b);
  } else {
    std::vector<Eigen::Triplet<double>> trips;
    for (int w = 0; w < size; ++w) trips.emplace_back(0, w, 1.0);
    for (int v = 1; v < size; ++v) {
      double diag = 1.0;
      for (int w : graph.adj[v]) {
        if (w == v)
          diag -= inv_r;
        else
          trips.emplace_back(v, w, -inv_r);
      }
      trips.emplace_back(v, v, diag);
    }
    Eigen::SparseMatrix<double> mat(size, size);
    mat.setFromTriplets(trips.begin(), trips.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu(mat);
    if (lu.info() != Eigen::Success)
      throw numeric_error("sparse factorization failed", std::nan(""));
    x = lu.solve(b);
  }

  std::vector<double> g(x.data(), x.data() + size);
  auto lap = apply_laplacian(graph, g);
  double residual = 0.0;
  for (int v = 0; v < size; ++v)
    residual = std::max(residual, std::abs(lap[v] - (mu1[v] - mu2[v])));
  double mean = std::accumulate(g.begin(), g.end(), 0.0) / size;
  for (double& v : g) v -= mean;
  if (residual_out) *residual_out = residual;
  if (!(residual <= kSolveTolerance))
    throw numeric_error("poisson solve missed the residual target", residual);
  return g;
}

std::vector<int> level_set_partition(const std::vector<double>& g, int k) {
  const int size = static_cast<int>(g.size());
  if (k < 0 || k > size)
    throw std::invalid_argument("level-set size must lie in [0, vertex count]");
  std::vector<int> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g[a] != g[b]) return g[a] > g[b];
    return a < b;
  });
  order.resize(k);
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace elab
