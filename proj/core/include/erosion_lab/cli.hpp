#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "erosion_lab/coloring.hpp"
#include "erosion_lab/rational.hpp"

namespace elab {

/// CLI usage problem; the driver maps it to exit code 1.
class usage_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Resolved run configuration. Values come from built-in defaults, then an
/// optional JSON config file, then flags (flags win). The full resolved
/// config is embedded in every output file.
struct RunConfig {
  std::string subcommand;
  int n = 30;
  Rational alpha{1, 3};
  Rational epsilon{1, 5};
  long steps = 1000;
  long burn_in = 0;
  std::uint64_t seed = 1;
  int replicas = 1;
  InitKind init = InitKind::kBernoulli;
  double bernoulli_p = 0.33;
  long snapshot_every = 0;  // 0: snapshot only the first and last states
  std::string out_dir = "out";
  std::string config_path;

  bool exact = false;      // drift: exact instead of Monte Carlo
  long samples = 10000;    // drift: Monte Carlo sample count
  long particles = 1250;   // idla: particle count
  double idla_k = 0.5;     // idla: band parameter k
  std::optional<long> kill_row;        // idla: killed variant
  std::vector<int> initial_rows;       // idla: initial full rows
  int level_k = -1;        // predict/sort: level-set size; -1 = floor(alpha*N)
  std::string region_path; // potential: region grid input file
  std::string start_path;  // erode/drift/stationary: snapshot to start from
};

/// Parses argv (without the program name). Unknown flags and out-of-range
/// values raise usage_error.
RunConfig parse_args(const std::vector<std::string>& args);

/// Runs a resolved config. Returns the process exit code:
/// 0 success, 2 numeric/solver failure, 3 timeout-dominated run.
int run_config(const RunConfig& config);

/// Full driver: parse + run, mapping usage errors to exit code 1.
int cli_main(int argc, const char* const* argv);

/// Worker-thread cap from EROSION_LAB_THREADS (>= 1).
int thread_count();

}  // namespace elab
