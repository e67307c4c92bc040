#include "erosion_lab/cyl_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace elab {

void check_cylinder_size(int n) {
  if (n < 2) throw std::invalid_argument("cylinder size must satisfy n >= 2, got " + std::to_string(n));
}

void check_site(Site s, int n) {
  check_cylinder_size(n);
  if (!site_valid(s, n))
    throw std::invalid_argument("site (" + std::to_string(s.col) + "," + std::to_string(s.row) +
                                ") is not in Cyl_" + std::to_string(n));
}

std::array<Site, 4> neighbors(Site s, int n) {
  check_site(s, n);
  std::array<Site, 4> out;
  out[kLeft] = Site{(s.col + n - 1) % n, s.row};
  out[kRight] = Site{(s.col + 1) % n, s.row};
  out[kDown] = s.row > 0 ? Site{s.col, s.row - 1} : s;
  out[kUp] = s.row < n ? Site{s.col, s.row + 1} : s;
  return out;
}

std::vector<Site> star_neighbors(Site s, int n) {
  check_site(s, n);
  std::vector<Site> out;
  out.reserve(8);
  auto push = [&](int col, int row) {
    if (row < 0 || row > n) return;
    Site cand{(col % n + n) % n, row};
    if (cand == s) return;
    if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
  };
  push(s.col - 1, s.row);
  push(s.col + 1, s.row);
  push(s.col, s.row - 1);
  push(s.col, s.row + 1);
  push(s.col - 1, s.row + 1);
  push(s.col + 1, s.row + 1);
  push(s.col - 1, s.row - 1);
  push(s.col + 1, s.row - 1);
  return out;
}

bool is_star_connected(const std::vector<std::uint8_t>& members, int n) {
  check_cylinder_size(n);
  const int total = site_count(n);
  if (static_cast<int>(members.size()) != total)
    throw std::invalid_argument("membership mask has the wrong size");
  int count = 0;
  int seed = -1;
  for (int i = 0; i < total; ++i) {
    if (members[i]) {
      ++count;
      seed = i;
    }
  }
  if (count == 0) return true;
  std::vector<std::uint8_t> seen(total, 0);
  std::vector<int> stack{seed};
  seen[seed] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (Site w : star_neighbors(site_at(v, n), n)) {
      int j = site_index(w, n);
      if (members[j] && !seen[j]) {
        seen[j] = 1;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == count;
}

bool is_star_connected(const std::vector<Site>& sites, int n) {
  check_cylinder_size(n);
  std::vector<std::uint8_t> members(site_count(n), 0);
  for (Site s : sites) {
    check_site(s, n);
    members[site_index(s, n)] = 1;
  }
  return is_star_connected(members, n);
}

}  // namespace elab
