#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "erosion_lab/regions.hpp"

namespace elab {

/// Per-site real field on Cyl_n, with the residual of the solve that
/// produced it (0 for closed forms).
struct PotentialField {
  int n = 0;
  std::vector<double> values;
  double residual = 0.0;

  double at(int index) const { return values[index]; }
  double at(Site s) const { return values[site_index(s, n)]; }
};

/// Default residual requirement for all linear solves.
inline constexpr double kSolveTolerance = 1e-10;

/// H_A(v) = E_v[y at the first exit from A]. Equals y(v) off A and solves
/// the harmonic equation H(v) = (1/4) sum over neighbor slots on A
/// (self-loops included). Throws numeric_error when the solve misses the
/// residual target (e.g. A = all of Cyl_n, where the walk never exits).
PotentialField expected_exit_height(const Region& a, int n);

/// Stopped Green function G_A = H_A - y, normalized expected visits to the
/// line y=0 before exiting A. Requires A disjoint from the top row.
PotentialField stopped_green(const Region& a, int n);

/// Independent route to G_A: solves the expected-visit-count system
/// directly and scales by 1/(4n). Kept separate from stopped_green so the
/// two can be checked against each other.
PotentialField stopped_green_visit_count(const Region& a, int n);

/// Law of the site where a walk with the given start distribution first
/// leaves A. Mass on start sites outside A exits immediately in place.
/// The result is supported on the complement of A and sums to 1.
std::vector<double> exit_distribution(const Region& a, const std::vector<double>& start,
                                      int n);

/// Uniform distribution on one row (the walker entry laws).
std::vector<double> uniform_row_distribution(int row, int n);

/// Antisymmetric edge flow on Cyl_n, stored per undirected edge with the
/// canonical orientations col -> col+1 and row -> row+1. Self-loops carry 0
/// by construction. For n = 2 the two parallel horizontal edges per row are
/// distinct slots.
class Flow {
 public:
  Flow() = default;
  explicit Flow(int n);

  int n() const { return n_; }

  /// Value of f(s, w) where w is the neighbor in slot d. Self-loop slots
  /// return 0.
  double value(Site s, Direction d) const;
  /// Sets f(s, w) = v (and f(w, s) = -v structurally). Self-loop slots
  /// reject nonzero values.
  void set_value(Site s, Direction d, double v);
  void add_value(Site s, Direction d, double v);

  /// Builds a flow from explicit directed values, validating antisymmetry:
  /// every listed (s, d, v) must agree with its reverse traversal if that
  /// is also listed. Conflicts raise std::invalid_argument.
  struct DirectedValue {
    Site site;
    Direction dir;
    double value;
  };
  static Flow from_directed(int n, const std::vector<DirectedValue>& entries,
                            double tol = 1e-12);

  const std::vector<double>& horizontal() const { return horiz_; }
  const std::vector<double>& vertical() const { return vert_; }

 private:
  int n_ = 0;
  std::vector<double> horiz_;  // edge (col,row)->(col+1 mod n,row), index row*n+col
  std::vector<double> vert_;   // edge (col,row)->(col,row+1),       index row*n+col
};

struct FlowMetrics {
  double energy = 0.0;                 // (1/2) sum over directed edges of f^2
  std::vector<double> divergence;      // div f(v) = sum_w f(w,v)
};

FlowMetrics flow_metrics(const Flow& f);

/// f = grad G: f(v,w) = G(w) - G(v) on every edge.
Flow gradient_flow(const PotentialField& g);

/// The vertical flow with f((k,y),(k,y+1/n)) = -1/n for 0 <= y < y*_k.
/// Divergence is 1/n on row-0 sites of R~1 and 0 on its other sites;
/// energy is (1/n) sum_k y*_k.
Flow trivial_flow(const ColumnProfile& profile, const TruncatedRegion& r1_trunc, int n);

/// One bent column: full mass rises to level_row, then splits d/(1-d)
/// between the vertical continuation and a horizontal run to target_col.
struct BendColumn {
  int col = 0;
  int target_col = 0;  // boundary site (target_col, level_row) outside R~1
  int level_row = 0;
  double d = 0.0;      // 1/(1 + y* - y), the optimal split
};

struct BendSpec {
  double m = 0.0;  // reference level in (0,1)
  double c = 0.0;  // margin
  std::vector<int> w1;          // candidate columns
  std::vector<BendColumn> w2;   // bent columns, distinct level rows
};

/// The bent flow of the drift argument. Equals the trivial flow off the
/// bent columns; satisfies the same divergence conditions on R~1. Throws
/// std::invalid_argument when the spec is inconsistent with the region.
Flow bend_flow(const BendSpec& spec, const ColumnProfile& profile,
               const TruncatedRegion& r1_trunc, int n);

/// Closed-form energy bound of the bent flow (the horizontal run costed at
/// a full n edges): (1/n) sum_k y*_k - (1/n) sum_bent g^2/(1+g) with
/// g = y* - y. The constructed flow's true energy is <= this bound, with
/// equality exactly when every run uses n edges.
double bent_energy_bound(const BendSpec& spec, const ColumnProfile& profile, int n);

/// Boundary of R~1 + the phantom bottom row (no visibility filter).
Region truncated_boundary(const TruncatedRegion& r1_trunc, int n);

/// Builds a BendSpec at a given level m and margin c following the drift
/// construction: W = {l : y**_l >= m}, W2 = {l in W1 : y*_l >= m - c/8},
/// paired with distinct boundary-intersecting rows at or below m - c/4.
/// Returns nullopt when no column can be bent.
std::optional<BendSpec> make_bend_spec(const ColumnProfile& profile,
                                       const TruncatedRegion& r1_trunc, double m,
                                       double c, int n);

/// Connected r-regular graph given by neighbor-slot lists (self-loops
/// appear as the vertex itself).
struct GeneralGraph {
  int degree = 0;
  std::vector<std::vector<int>> adj;

  int size() const { return static_cast<int>(adj.size()); }
};

/// Cyl_n as a 4-regular GeneralGraph, vertices ordered by site_index.
GeneralGraph cylinder_general_graph(int n);

/// Laplacian (1/r) sum over slots of (g(x) - g(y)); self-loops contribute 0.
std::vector<double> apply_laplacian(const GeneralGraph& graph, const std::vector<double>& g);

/// Cylinder Laplacian of the flow calculus, Delta F(v) = F(v) - (1/4) sum F(w).
/// Coincides with apply_laplacian on cylinder_general_graph(n).
std::vector<double> apply_laplacian_cyl(const std::vector<double>& f, int n);

/// Solves Delta g = mu1 - mu2 on a connected regular graph, normalized to
/// sum g = 0. Throws std::invalid_argument for disconnected or irregular
/// graphs and numeric_error when the residual target is missed.
std::vector<double> solve_poisson(const GeneralGraph& graph, const std::vector<double>& mu1,
                                  const std::vector<double>& mu2,
                                  double* residual_out = nullptr);

/// The k vertices on the mu1 side of the level-set split: largest potential
/// first, ties broken by vertex index (lexicographic (row, col) on the
/// cylinder). Returns a sorted index list.
std::vector<int> level_set_partition(const std::vector<double>& g, int k);

}  // namespace elab
