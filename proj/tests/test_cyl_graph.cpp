#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "erosion_lab/cyl_graph.hpp"
#include "support.hpp"

using namespace elab;

namespace {

std::multiset<std::pair<int, int>> as_multiset(const std::array<Site, 4>& sites) {
  std::multiset<std::pair<int, int>> out;
  for (Site s : sites) out.insert({s.col, s.row});
  return out;
}

}  // namespace

TEST_CASE("interior neighbors are the four lattice neighbors") {
  auto nb = as_multiset(neighbors(Site{1, 2}, 4));
  CHECK(nb == std::multiset<std::pair<int, int>>{{0, 2}, {2, 2}, {1, 1}, {1, 3}});
}

TEST_CASE("bottom row has a self-loop slot") {
  auto nb = as_multiset(neighbors(Site{0, 0}, 4));
  CHECK(nb == std::multiset<std::pair<int, int>>{{3, 0}, {1, 0}, {0, 1}, {0, 0}});
}

TEST_CASE("top row has a self-loop slot") {
  auto nb = as_multiset(neighbors(Site{2, 4}, 4));
  CHECK(nb == std::multiset<std::pair<int, int>>{{1, 4}, {3, 4}, {2, 3}, {2, 4}});
}

TEST_CASE("column wrap-around") {
  auto nb = neighbors(Site{3, 2}, 4);
  CHECK(std::count(nb.begin(), nb.end(), Site{0, 2}) == 1);
}

TEST_CASE("n=2 doubles the horizontal edge") {
  auto nb = neighbors(Site{0, 1}, 2);
  CHECK(std::count(nb.begin(), nb.end(), Site{1, 1}) == 2);
}

TEST_CASE("every site has exactly 4 neighbor slots and adjacency is symmetric") {
  for (int n : {2, 3, 4, 5}) {
    for (int i = 0; i < site_count(n); ++i) {
      Site v = site_at(i, n);
      auto nv = neighbors(v, n);
      CHECK(nv.size() == 4);
      for (Site w : nv) {
        auto nw = neighbors(w, n);
        long multiplicity_vw = std::count(nv.begin(), nv.end(), w);
        long multiplicity_wv = std::count(nw.begin(), nw.end(), v);
        if (v == w) {
          CHECK(multiplicity_vw == multiplicity_wv);
        } else {
          CHECK(multiplicity_vw == multiplicity_wv);
        }
      }
    }
  }
}

TEST_CASE("invalid sites are rejected") {
  CHECK_THROWS_AS(neighbors(Site{4, 0}, 4), std::invalid_argument);
  CHECK_THROWS_AS(neighbors(Site{0, 5}, 4), std::invalid_argument);
  CHECK_THROWS_AS(neighbors(Site{0, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(star_neighbors(Site{-1, 0}, 4), std::invalid_argument);
}

TEST_CASE("star neighbors of an interior site") {
  auto sn = star_neighbors(Site{1, 2}, 4);
  CHECK(sn.size() == 8);
  // contains the lattice neighbors (minus self-loops)
  for (Site w : {Site{0, 2}, Site{2, 2}, Site{1, 1}, Site{1, 3}})
    CHECK(std::count(sn.begin(), sn.end(), w) == 1);
  // and the diagonals
  for (Site w : {Site{0, 1}, Site{2, 1}, Site{0, 3}, Site{2, 3}})
    CHECK(std::count(sn.begin(), sn.end(), w) == 1);
}

TEST_CASE("star neighbors at the bottom boundary") {
  auto sn = star_neighbors(Site{0, 0}, 4);
  CHECK(sn.size() == 5);  // no row below
}

TEST_CASE("star neighbors on the 2-cylinder deduplicate wraps") {
  // By hand: (0,1) on Cyl_2 touches (1,1) sideways (both ways), (0,0) and
  // (0,2) vertically, and (1,0), (1,2) diagonally (each twice through the
  // wrap) -- 5 distinct sites.
  auto sn = star_neighbors(Site{0, 1}, 2);
  std::set<std::pair<int, int>> got;
  for (Site s : sn) got.insert({s.col, s.row});
  CHECK(got == std::set<std::pair<int, int>>{{1, 1}, {0, 0}, {0, 2}, {1, 0}, {1, 2}});
  CHECK(sn.size() == got.size());
}

TEST_CASE("star neighbors contain the ordinary neighbors") {
  for (int n : {2, 4, 6}) {
    for (int i = 0; i < site_count(n); ++i) {
      Site v = site_at(i, n);
      auto sn = star_neighbors(v, n);
      for (Site w : neighbors(v, n)) {
        if (w == v) continue;
        CHECK(std::count(sn.begin(), sn.end(), w) == 1);
      }
    }
  }
}

TEST_CASE("diagonal pairs are star-connected") {
  CHECK(is_star_connected({Site{0, 0}, Site{1, 1}}, 4));
  CHECK_FALSE(is_star_connected({Site{0, 0}, Site{2, 0}}, 4));
  CHECK(is_star_connected(std::vector<Site>{}, 4));
}

TEST_CASE("star connectivity of a full ring and a broken ring") {
  std::vector<Site> ring;
  for (int col = 0; col < 6; ++col) ring.push_back(Site{col, 3});
  CHECK(is_star_connected(ring, 6));
  ring.erase(ring.begin() + 2);  // cols {0,1,3,4,5}: one arc around the wrap
  CHECK(is_star_connected(ring, 6));
  CHECK_FALSE(is_star_connected({Site{0, 3}, Site{3, 3}}, 6));  // antipodal columns
  // A diagonal staircase is *-connected without ordinary adjacency.
  CHECK(is_star_connected({Site{0, 0}, Site{1, 1}, Site{2, 2}, Site{3, 3}}, 6));
}

TEST_CASE("site indexing is (row, col) lexicographic") {
  int n = 5;
  for (int i = 0; i + 1 < site_count(n); ++i)
    CHECK(site_at(i, n) < site_at(i + 1, n));
  for (int i = 0; i < site_count(n); ++i)
    CHECK(site_index(site_at(i, n), n) == i);
}
