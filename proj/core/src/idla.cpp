#include "erosion_lab/idla.hpp"

#include <algorithm>
#include <stdexcept>

#include "erosion_lab/errors.hpp"

namespace elab {

IdlaCluster::IdlaCluster(int n, std::vector<int> initial_rows)
    : n_(n), initial_rows_(std::move(initial_rows)) {
  check_cylinder_size(n);
  std::sort(initial_rows_.begin(), initial_rows_.end());
  initial_rows_.erase(std::unique(initial_rows_.begin(), initial_rows_.end()),
                      initial_rows_.end());
  for (int row : initial_rows_) {
    if (row < 0) throw std::invalid_argument("initial rows must be non-negative");
    for (int col = 0; col < n_; ++col) add(col, row);
  }
}

void IdlaCluster::add(int col, long row) {
  occupied_.insert(key(col, row));
  max_row_ = std::max(max_row_, row);
}

std::vector<HalfSite> IdlaCluster::sites() const {
  std::vector<HalfSite> out;
  out.reserve(occupied_.size());
  for (long k : occupied_) out.push_back(HalfSite{static_cast<int>(k % n_), k / n_});
  std::sort(out.begin(), out.end());
  return out;
}

PhiMap::PhiMap(std::vector<int> initial_rows) : initial_rows_(std::move(initial_rows)) {
  std::sort(initial_rows_.begin(), initial_rows_.end());
}

long PhiMap::forward(long row) const {
  long v = row;
  for (int skipped : initial_rows_) {
    if (skipped <= v)
      ++v;
    else
      break;
  }
  return v;
}

long PhiMap::inverse(long image_row) const {
  long below = 0;
  for (int skipped : initial_rows_) {
    if (skipped == image_row)
      throw std::invalid_argument("row is an initial row, not in the image of phi");
    if (skipped < image_row) ++below;
  }
  return image_row - below;
}

namespace {

enum class BaseRule { kReflect, kSelfLoop };

// One walk move on the half-infinite cylinder. kReflect is the projected
// planar kernel (up-probability 1/2 at row 0); kSelfLoop holds the walker
// in place, matching the finite-cylinder kernel on its bottom row.
inline void half_cyl_move(int& col, long& row, Direction d, int n, BaseRule rule) {
  switch (d) {
    case kLeft:
      col = (col + n - 1) % n;
      break;
    case kRight:
      col = (col + 1) % n;
      break;
    case kUp:
      ++row;
      break;
    case kDown:
      if (row > 0)
        --row;
      else if (rule == BaseRule::kReflect)
        ++row;
      break;
  }
}

// Walks one particle until it settles; returns false when killed.
bool settle_particle(IdlaCluster& cluster, RngSequence rng, BaseRule rule,
                     std::optional<long> kill_row, long walk_cap, HalfSite* settled) {
  const int n = cluster.n();
  int col = static_cast<int>(rng.uniform_int(static_cast<std::uint32_t>(n)));
  long row = 0;
  long steps = 0;
  while (true) {
    if (kill_row && row == *kill_row) return false;
    if (!cluster.occupied(col, row)) {
      cluster.add(col, row);
      cluster.count_particle();
      if (settled) *settled = HalfSite{col, row};
      return true;
    }
    if (++steps > walk_cap) throw walk_cap_error(walk_cap);
    half_cyl_move(col, row, rng.direction(), n, rule);
  }
}

}  // namespace

IdlaCluster idla_run(int n, const std::vector<int>& initial_rows, long t,
                     RngSequence& rng, std::optional<long> kill_row, long walk_cap) {
  if (t < 0) throw std::invalid_argument("particle count must be non-negative");
  if (static_cast<long>(initial_rows.size()) > n)
    throw std::invalid_argument("at most n initial rows are supported");
  IdlaCluster cluster(n, initial_rows);
  for (long i = 0; i < t; ++i)
    settle_particle(cluster, rng, BaseRule::kReflect, kill_row, walk_cap, nullptr);
  return cluster;
}

std::vector<HalfSite> normalize_cluster(const IdlaCluster& cluster) {
  PhiMap phi(cluster.initial_rows());
  std::vector<HalfSite> out;
  for (HalfSite s : cluster.sites()) {
    bool is_initial = std::binary_search(cluster.initial_rows().begin(),
                                         cluster.initial_rows().end(),
                                         static_cast<int>(s.row));
    if (is_initial) continue;
    out.push_back(HalfSite{s.col, phi.inverse(s.row)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool cluster_contains_rows(const std::vector<HalfSite>& normalized, int n, long lo) {
  std::vector<std::uint8_t> seen;
  if (lo < 0) return true;
  seen.assign(static_cast<std::size_t>((lo + 1)) * n, 0);
  for (HalfSite s : normalized)
    if (s.row <= lo) seen[s.row * n + s.col] = 1;
  return std::all_of(seen.begin(), seen.end(), [](std::uint8_t v) { return v != 0; });
}

long cluster_max_row(const std::vector<HalfSite>& normalized) {
  long m = -1;
  for (HalfSite s : normalized) m = std::max(m, s.row);
  return m;
}

namespace {

// Erosion walker replay that shares the stream layout of the IDLA side:
// first draw is the start column, then directions.
Site erosion_walk(const Coloring& state, bool walk_color, int start_row,
                  RngSequence rng, long walk_cap) {
  const int n = state.n();
  Site pos{static_cast<int>(rng.uniform_int(static_cast<std::uint32_t>(n))), start_row};
  long steps = 0;
  while (state.blue(pos) == walk_color) {
    if (++steps > walk_cap) throw walk_cap_error(walk_cap);
    pos = neighbors(pos, n)[rng.direction()];
  }
  return pos;
}

}  // namespace

CouplingReport coupled_containment_run(const Coloring& start, long steps,
                                       const RngStream& stream,
                                       std::optional<long> kill_row, long walk_cap) {
  if (!start.in_omega())
    throw std::invalid_argument("coupled run requires an Omega start state");
  const int n = start.n();

  long max_blue_row = 0;
  std::vector<HalfSite> blue_sites;
  for (int i = 0; i < start.size(); ++i)
    if (start.blue(i)) {
      Site s = site_at(i, n);
      blue_sites.push_back(HalfSite{s.col, s.row});
      max_blue_row = std::max<long>(max_blue_row, s.row);
    }

  CouplingReport report;
  report.kill_row = kill_row.value_or(max_blue_row + 2);

  IdlaCluster unkilled(n, {});
  IdlaCluster killed(n, {});
  for (HalfSite s : blue_sites) {
    unkilled.add(s.col, s.row);
    killed.add(s.col, s.row);
  }

  Coloring state = start;
  for (long t = 0; t < steps; ++t) {
    RngSequence blue_stream = stream.walker(static_cast<std::uint64_t>(2 * t));
    RngSequence red_stream = stream.walker(static_cast<std::uint64_t>(2 * t + 1));

    Site converted = erosion_walk(state, true, 0, blue_stream, walk_cap);
    state.set_blue(converted, true);
    settle_particle(unkilled, blue_stream, BaseRule::kSelfLoop, std::nullopt, walk_cap,
                    nullptr);
    settle_particle(killed, blue_stream, BaseRule::kSelfLoop, report.kill_row, walk_cap,
                    nullptr);

    Site evicted = erosion_walk(state, false, n, red_stream, walk_cap);
    state.set_blue(evicted, false);

    bool step_ok = true;
    for (int i = 0; i < state.size(); ++i)
      if (state.blue(i)) {
        Site s = site_at(i, n);
        if (!unkilled.occupied(s.col, s.row)) {
          report.erosion_blue_subset_idla = false;
          step_ok = false;
        }
      }
    for (HalfSite s : killed.sites())
      if (!unkilled.occupied(s.col, s.row)) {
        report.killed_subset_unkilled = false;
        step_ok = false;
      }
    if (killed.max_row() >= report.kill_row) {
      report.kill_row_respected = false;
      step_ok = false;
    }
    if (!step_ok && report.first_violation_step < 0) report.first_violation_step = t;
  }
  return report;
}

bool coupled_idla_monotone_run(int n, const std::vector<HalfSite>& initial_small,
                               const std::vector<HalfSite>& initial_large, long t,
                               const RngStream& stream, long walk_cap) {
  IdlaCluster small(n, {}), large(n, {});
  for (HalfSite s : initial_small) small.add(s.col, s.row);
  for (HalfSite s : initial_large) large.add(s.col, s.row);
  for (HalfSite s : initial_small)
    if (!large.occupied(s.col, s.row))
      throw std::invalid_argument("initial clusters are not nested");
  for (long i = 0; i < t; ++i) {
    settle_particle(small, stream.walker(static_cast<std::uint64_t>(i)),
                    BaseRule::kReflect, std::nullopt, walk_cap, nullptr);
    settle_particle(large, stream.walker(static_cast<std::uint64_t>(i)),
                    BaseRule::kReflect, std::nullopt, walk_cap, nullptr);
    for (HalfSite s : small.sites())
      if (!large.occupied(s.col, s.row)) return false;
  }
  return true;
}

std::string render_cluster_snapshot(const IdlaCluster& cluster, long contained_low_row,
                                    long contained_high_row) {
  const int n = cluster.n();
  const long top = std::max<long>(cluster.max_row(), 0);
  std::string out = "n=" + std::to_string(n) + " t=" +
                    std::to_string(cluster.particles_placed()) + "\n";
  for (long row = top; row >= 0; --row) {
    for (int col = 0; col < n; ++col) out += cluster.occupied(col, row) ? '#' : '.';
    out += '\n';
  }
  auto normalized = normalize_cluster(cluster);
  bool low = cluster_contains_rows(normalized, n, contained_low_row);
  bool high = cluster_max_row(normalized) <= contained_high_row;
  out += "{\"t\":" + std::to_string(cluster.particles_placed()) +
         ",\"max_row\":" + std::to_string(cluster.max_row()) +
         ",\"contained_low\":" + (low ? "true" : "false") +
         ",\"contained_high\":" + (high ? "true" : "false") + "}\n";
  return out;
}

}  // namespace elab
