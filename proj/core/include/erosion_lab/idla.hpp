#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "erosion_lab/coloring.hpp"
#include "erosion_lab/erosion.hpp"
#include "erosion_lab/rng.hpp"

namespace elab {

/// Site of the half-infinite cylinder C_n x Z>=0.
struct HalfSite {
  int col = 0;
  long row = 0;

  bool operator==(const HalfSite& o) const { return col == o.col && row == o.row; }
  bool operator<(const HalfSite& o) const {
    return row != o.row ? row < o.row : col < o.col;
  }
};

/// Growth cluster on the half-infinite cylinder. Occupancy is a hash set
/// keyed by (col, row); no height cap is materialized since walkers excurse
/// above any fixed bound.
class IdlaCluster {
 public:
  IdlaCluster(int n, std::vector<int> initial_rows);

  int n() const { return n_; }
  const std::vector<int>& initial_rows() const { return initial_rows_; }
  long particles_placed() const { return particles_; }
  long occupied_count() const { return static_cast<long>(occupied_.size()); }

  bool occupied(int col, long row) const {
    return occupied_.count(key(col, row)) != 0;
  }
  void add(int col, long row);
  void count_particle() { ++particles_; }

  long max_row() const { return max_row_; }
  std::vector<HalfSite> sites() const;

 private:
  long key(int col, long row) const { return row * n_ + col; }
  int n_;
  std::vector<int> initial_rows_;
  std::unordered_set<long> occupied_;
  long particles_ = 0;
  long max_row_ = -1;
};

/// The order-preserving bijection Z>=0 -> Z>=0 \ initial_rows and its
/// partial inverse on the image.
class PhiMap {
 public:
  explicit PhiMap(std::vector<int> initial_rows);
  long forward(long row) const;
  long inverse(long image_row) const;  // throws if image_row is an initial row

 private:
  std::vector<int> initial_rows_;  // sorted
};

/// Generalized IDLA: t particles start uniformly on row 0 and settle at the
/// first unoccupied site of their walk. The walk kernel is the reflected
/// projection of the planar walk: at row 0 the down move reflects upward,
/// so the up probability there is 1/2. With kill_row set, a particle
/// reaching that row before settling is discarded (the kill is checked on
/// arrival, before the occupancy test).
IdlaCluster idla_run(int n, const std::vector<int>& initial_rows, long t,
                     RngSequence& rng, std::optional<long> kill_row = std::nullopt,
                     long walk_cap = kWalkCap);

/// A(t) = phi^{-1}(I(t) \ I(0)): the newly grown sites pulled back through
/// the order-preserving map. |A(t)| = t for unkilled runs.
std::vector<HalfSite> normalize_cluster(const IdlaCluster& cluster);

/// True iff C_n x [0, lo] is contained in A(t) (rows 0..lo all present).
bool cluster_contains_rows(const std::vector<HalfSite>& normalized, int n, long lo);

/// Max normalized row, or -1 when empty.
long cluster_max_row(const std::vector<HalfSite>& normalized);

/// Pathwise coupling check. Runs the erosion chain and the blue IDLA pair
/// (unkilled and killed at kill_row) with one shared direction stream per
/// particle index, consumed identically by every process. The IDLA side
/// uses the self-loop rule at its base row so that trajectories coincide
/// with the erosion walker's on the shared rows; the kill row defaults to
/// two rows above the highest initially blue row.
struct CouplingReport {
  bool killed_subset_unkilled = true;
  bool erosion_blue_subset_idla = true;
  bool kill_row_respected = true;
  long first_violation_step = -1;
  long kill_row = 0;

  bool all_held() const {
    return killed_subset_unkilled && erosion_blue_subset_idla && kill_row_respected;
  }
};

CouplingReport coupled_containment_run(const Coloring& start, long steps,
                                       const RngStream& stream,
                                       std::optional<long> kill_row = std::nullopt,
                                       long walk_cap = kWalkCap);

/// Monotonicity coupling: two IDLA clusters from nested initial occupancies
/// driven by identical per-particle streams. Returns true iff the smaller
/// cluster stayed inside the larger one after every particle.
bool coupled_idla_monotone_run(int n, const std::vector<HalfSite>& initial_small,
                               const std::vector<HalfSite>& initial_large, long t,
                               const RngStream& stream, long walk_cap = kWalkCap);

/// Cluster snapshot: rows 0..max occupied row top-first ('#' occupied,
/// '.' empty) followed by one JSON line with t, max_row and the containment
/// flags at the given band.
std::string render_cluster_snapshot(const IdlaCluster& cluster, long contained_low_row,
                                    long contained_high_row);

}  // namespace elab
