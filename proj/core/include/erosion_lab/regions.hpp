#pragma once

#include <cstdint>
#include <vector>

#include "erosion_lab/coloring.hpp"

namespace elab {

/// Site subset of Cyl_n, stored as a mask indexed by site_index.
struct Region {
  int n = 0;
  std::vector<std::uint8_t> members;

  Region() = default;
  Region(int n_, std::vector<std::uint8_t> m) : n(n_), members(std::move(m)) {}
  static Region empty(int n_) { return Region(n_, std::vector<std::uint8_t>(site_count(n_), 0)); }

  bool contains(int index) const { return members[index] != 0; }
  bool contains(Site s) const { return members[site_index(s, n)] != 0; }
  int count() const;
  std::vector<Site> sites() const;
};

/// Region whose defining paths avoid the far rim row; R~1 never meets row n
/// and R~2 never meets row 0.
struct TruncatedRegion : Region {
  TruncatedRegion() = default;
  explicit TruncatedRegion(Region r) : Region(std::move(r)) {}
};

struct ReachRegions {
  Region r1;           // blue reachable from row 0 through blue
  Region r2;           // red reachable from row n through red
  TruncatedRegion r1_trunc;  // as r1 but paths avoid row n
  TruncatedRegion r2_trunc;  // as r2 but paths avoid row 0
};

ReachRegions reach_regions(const Coloring& state);

/// Per-column first/last exclusion rows of the truncated regions:
///   y*_k  = min row with (k,row) outside R~1 (n+1 when the column is full),
///   y**_k = max row with (k,row) outside R~2 (-1 when the column is full).
/// The overflow conventions are documented fallbacks; regions produced by
/// reach_regions never contain the far rim row, so they cannot trigger.
struct ColumnProfile {
  int n = 0;
  std::vector<int> y_star_row;
  std::vector<int> y_star_star_row;

  double y_star(int col) const { return static_cast<double>(y_star_row[col]) / n; }
  double y_star_star(int col) const { return static_cast<double>(y_star_star_row[col]) / n; }
  /// (1/n) sum_k y*_k, the trivial-flow energy.
  double y_star_mean() const;
  double y_star_star_mean() const;
};

ColumnProfile column_profiles(const Coloring& state);
ColumnProfile column_profiles(const ReachRegions& regions);

/// Outer boundary of R~1: sites of the boundary of R~1 + a phantom row -1
/// (in the padded cylinder) that are visible from row n, i.e. connected to
/// C_n x {1} in Cyl_n \ R~1 under ordinary adjacency. Throws if the result
/// is not *-connected (it always is for regions of actual colorings).
struct OuterBoundary {
  int n = 0;
  std::vector<Site> sites;
  std::vector<std::uint8_t> mask;
  std::vector<int> y_low_row;   // min boundary row per column
  std::vector<int> y_high_row;  // max boundary row per column
  std::vector<int> height_rows; // sorted rows of the height set

  double y_low(int col) const { return static_cast<double>(y_low_row[col]) / n; }
  double y_high(int col) const { return static_cast<double>(y_high_row[col]) / n; }
};

OuterBoundary outer_boundary(const TruncatedRegion& r1_trunc, int n);

}  // namespace elab
