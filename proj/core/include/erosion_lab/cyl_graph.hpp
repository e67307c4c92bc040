#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace elab {

/// Neighbor-slot order of `neighbors`, also the walk-direction encoding.
enum Direction : int { kLeft = 0, kRight = 1, kDown = 2, kUp = 3 };

/// Lattice site of Cyl_n = C_n x P_n. Stored as integer (col,row); the
/// paper-coordinates are x = col/n (circular) and y = row/n.
struct Site {
  int col = 0;
  int row = 0;

  bool operator==(const Site& o) const { return col == o.col && row == o.row; }
  bool operator!=(const Site& o) const { return !(*this == o); }
  /// (row, col) lexicographic; doubles as the canonical site order.
  bool operator<(const Site& o) const {
    return row != o.row ? row < o.row : col < o.col;
  }
};

inline int site_count(int n) { return n * (n + 1); }

inline bool site_valid(Site s, int n) {
  return s.col >= 0 && s.col < n && s.row >= 0 && s.row <= n;
}

/// Index in {0..n(n+1)-1}, ordered by (row, col).
inline int site_index(Site s, int n) { return s.row * n + s.col; }

inline Site site_at(int index, int n) { return Site{index % n, index / n}; }

/// Throws unless n >= 2 (degenerate cylinders are excluded throughout).
void check_cylinder_size(int n);

void check_site(Site s, int n);

/// The four neighbor slots of a site, self-loops included, indexed by
/// Direction (left, right, down, up). At row 0 the "down" slot is the site
/// itself and at row n the "up" slot is, which makes Cyl_n 4-regular and
/// lets a walker move by neighbors(s,n)[rng.direction()]. For n = 2 the
/// left and right slots coincide (the 2-cycle is a doubled edge).
std::array<Site, 4> neighbors(Site s, int n);

/// Distinct neighbors of s in the star graph Cyl*_n: the lattice neighbors
/// without self-loops plus the diagonal neighbors (col+-1, row+-1) that
/// exist. Wrap duplicates (n = 2) are removed.
std::vector<Site> star_neighbors(Site s, int n);

/// True iff the sites induce one connected component of Cyl*_n.
/// The empty set counts as connected.
bool is_star_connected(const std::vector<Site>& sites, int n);

/// Same test over a membership mask indexed by site_index.
bool is_star_connected(const std::vector<std::uint8_t>& members, int n);

}  // namespace elab
