#include "erosion_lab/regions.hpp"

#include <algorithm>
#include <stdexcept>

namespace elab {

int Region::count() const {
  int c = 0;
  for (auto m : members) c += m != 0;
  return c;
}

std::vector<Site> Region::sites() const {
  std::vector<Site> out;
  for (int i = 0; i < static_cast<int>(members.size()); ++i)
    if (members[i]) out.push_back(site_at(i, n));
  return out;
}

namespace {

// Monochromatic reachability from one rim row. `blue` selects the color,
// `forbidden_row` (or -1) removes a row from the walkable set entirely.
Region monochromatic_reach(const Coloring& state, bool blue, int seed_row,
                           int forbidden_row) {
  const int n = state.n();
  Region out = Region::empty(n);
  std::vector<int> stack;
  for (int col = 0; col < n; ++col) {
    Site s{col, seed_row};
    int idx = site_index(s, n);
    if (state.blue(idx) == blue && seed_row != forbidden_row && !out.members[idx]) {
      out.members[idx] = 1;
      stack.push_back(idx);
    }
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (Site w : neighbors(site_at(v, n), n)) {
      if (w.row == forbidden_row) continue;
      int j = site_index(w, n);
      if (state.blue(j) == blue && !out.members[j]) {
        out.members[j] = 1;
        stack.push_back(j);
      }
    }
  }
  return out;
}

}  // namespace

ReachRegions reach_regions(const Coloring& state) {
  const int n = state.n();
  ReachRegions out;
  out.r1 = monochromatic_reach(state, true, 0, -1);
  out.r2 = monochromatic_reach(state, false, n, -1);
  out.r1_trunc = TruncatedRegion(monochromatic_reach(state, true, 0, n));
  out.r2_trunc = TruncatedRegion(monochromatic_reach(state, false, n, 0));
  return out;
}

ColumnProfile column_profiles(const ReachRegions& regions) {
  const int n = regions.r1.n;
  ColumnProfile p;
  p.n = n;
  p.y_star_row.assign(n, n + 1);
  p.y_star_star_row.assign(n, -1);
  for (int col = 0; col < n; ++col) {
    for (int row = 0; row <= n; ++row) {
      if (!regions.r1_trunc.contains(Site{col, row})) {
        p.y_star_row[col] = row;
        break;
      }
    }
    for (int row = n; row >= 0; --row) {
      if (!regions.r2_trunc.contains(Site{col, row})) {
        p.y_star_star_row[col] = row;
        break;
      }
    }
  }
  return p;
}

ColumnProfile column_profiles(const Coloring& state) {
  return column_profiles(reach_regions(state));
}

double ColumnProfile::y_star_mean() const {
  long sum = 0;
  for (int r : y_star_row) sum += r;
  return static_cast<double>(sum) / (static_cast<double>(n) * n);
}

double ColumnProfile::y_star_star_mean() const {
  long sum = 0;
  for (int r : y_star_star_row) sum += r;
  return static_cast<double>(sum) / (static_cast<double>(n) * n);
}

OuterBoundary outer_boundary(const TruncatedRegion& r1_trunc, int n) {
  check_cylinder_size(n);
  const int total = site_count(n);
  if (static_cast<int>(r1_trunc.members.size()) != total)
    throw std::invalid_argument("truncated region has the wrong size");
  for (int col = 0; col < n; ++col)
    if (r1_trunc.contains(Site{col, n}))
      throw std::invalid_argument("R~1 may not meet the top row");

  // Boundary of R~1 union a phantom row below row 0, inside the padded
  // cylinder: every non-member adjacent to a member, plus every row-0
  // non-member (each is adjacent to the phantom row).
  std::vector<std::uint8_t> boundary(total, 0);
  for (int i = 0; i < total; ++i) {
    if (r1_trunc.members[i]) continue;
    Site s = site_at(i, n);
    if (s.row == 0) {
      boundary[i] = 1;
      continue;
    }
    for (Site w : neighbors(s, n)) {
      if (w == s) continue;
      if (r1_trunc.contains(w)) {
        boundary[i] = 1;
        break;
      }
    }
  }

  // Visibility: connected to row n within Cyl_n \ R~1. Row-n sites are never
  // in R~1 so they always seed the search.
  std::vector<std::uint8_t> visible(total, 0);
  std::vector<int> stack;
  for (int col = 0; col < n; ++col) {
    int idx = site_index(Site{col, n}, n);
    visible[idx] = 1;
    stack.push_back(idx);
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (Site w : neighbors(site_at(v, n), n)) {
      int j = site_index(w, n);
      if (!r1_trunc.members[j] && !visible[j]) {
        visible[j] = 1;
        stack.push_back(j);
      }
    }
  }

  OuterBoundary out;
  out.n = n;
  out.mask.assign(total, 0);
  out.y_low_row.assign(n, n + 1);
  out.y_high_row.assign(n, -1);
  std::vector<std::uint8_t> row_hit(n + 1, 0);
  for (int i = 0; i < total; ++i) {
    if (!boundary[i] || !visible[i]) continue;
    out.mask[i] = 1;
    Site s = site_at(i, n);
    out.sites.push_back(s);
    out.y_low_row[s.col] = std::min(out.y_low_row[s.col], s.row);
    out.y_high_row[s.col] = std::max(out.y_high_row[s.col], s.row);
    row_hit[s.row] = 1;
  }
  for (int row = 0; row <= n; ++row)
    if (row_hit[row]) out.height_rows.push_back(row);

  if (!is_star_connected(out.mask, n))
    throw std::logic_error("outer boundary failed the *-connectivity invariant");
  return out;
}

}  // namespace elab
