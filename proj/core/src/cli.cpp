#include "erosion_lab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "erosion_lab/errors.hpp"
#include "erosion_lab/idla.hpp"
#include "erosion_lab/potential.hpp"
#include "erosion_lab/regions.hpp"
#include "erosion_lab/snapshot.hpp"
#include "erosion_lab/sorting.hpp"
#include "erosion_lab/stats.hpp"

namespace elab {

namespace {

using nlohmann::json;

constexpr const char* kBuildVersion = "erosion-lab 0.1.0";

struct help_requested : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json config_json(const RunConfig& c) {
  json j;
  j["subcommand"] = c.subcommand;
  j["n"] = c.n;
  j["alpha"] = c.alpha.str();
  j["epsilon"] = c.epsilon.str();
  j["steps"] = c.steps;
  j["burn_in"] = c.burn_in;
  j["seed"] = c.seed;
  j["replicas"] = c.replicas;
  j["init"] = init_kind_name(c.init);
  j["p"] = c.bernoulli_p;
  j["snapshot_every"] = c.snapshot_every;
  j["out"] = c.out_dir;
  if (!c.config_path.empty()) j["config"] = c.config_path;
  j["exact"] = c.exact;
  j["samples"] = c.samples;
  j["particles"] = c.particles;
  j["k"] = c.idla_k;
  if (c.kill_row) j["kill_row"] = *c.kill_row;
  if (!c.initial_rows.empty()) j["initial_rows"] = c.initial_rows;
  j["level"] = c.level_k;
  if (!c.region_path.empty()) j["region"] = c.region_path;
  if (!c.start_path.empty()) j["start"] = c.start_path;
  j["rng"] = RngStream::generator_name();
  j["build"] = kBuildVersion;
  return j;
}

void apply_config_file(RunConfig& c, const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw usage_error("config file " + path + " is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw usage_error("config file must hold a JSON object");
  for (auto& [key, val] : j.items()) {
    if (key == "n") c.n = val.get<int>();
    else if (key == "alpha") c.alpha = Rational::parse(val.is_string() ? val.get<std::string>() : val.dump());
    else if (key == "epsilon") c.epsilon = Rational::parse(val.is_string() ? val.get<std::string>() : val.dump());
    else if (key == "steps") c.steps = val.get<long>();
    else if (key == "burn_in") c.burn_in = val.get<long>();
    else if (key == "seed") c.seed = val.get<std::uint64_t>();
    else if (key == "replicas") c.replicas = val.get<int>();
    else if (key == "init") c.init = parse_init_kind(val.get<std::string>());
    else if (key == "p") c.bernoulli_p = val.get<double>();
    else if (key == "snapshot_every") c.snapshot_every = val.get<long>();
    else if (key == "out") c.out_dir = val.get<std::string>();
    else if (key == "exact") c.exact = val.get<bool>();
    else if (key == "samples") c.samples = val.get<long>();
    else if (key == "particles") c.particles = val.get<long>();
    else if (key == "k") c.idla_k = val.get<double>();
    else if (key == "kill_row") c.kill_row = val.get<long>();
    else if (key == "initial_rows") c.initial_rows = val.get<std::vector<int>>();
    else if (key == "level") c.level_k = val.get<int>();
    else if (key == "region") c.region_path = val.get<std::string>();
    else if (key == "start") c.start_path = val.get<std::string>();
    else throw usage_error("unknown config key '" + key + "'");
  }
}

void validate_config(const RunConfig& c) {
  if (c.n < 2) throw usage_error("--n must be at least 2");
  if (!(Rational(0, 1) < c.alpha && c.alpha < Rational(1, 1)))
    throw usage_error("--alpha must lie strictly between 0 and 1");
  if (!(Rational(0, 1) < c.epsilon)) throw usage_error("--epsilon must be positive");
  if (c.replicas < 1) throw usage_error("--replicas must be at least 1");
  if (c.steps < 0) throw usage_error("--steps must be non-negative");
  if (c.burn_in < 0) throw usage_error("--burn-in must be non-negative");
  if (c.init == InitKind::kBernoulli && !(c.bernoulli_p > 0 && c.bernoulli_p < 1))
    throw usage_error("--p must lie strictly between 0 and 1");
  long k = c.alpha.floor_mul(site_count(c.n));
  if (k < 1 || k > site_count(c.n) - 1)
    throw usage_error("floor(alpha*n(n+1)) leaves no room for both colors");
}

// Runs fn(replica) over a small thread pool capped by EROSION_LAB_THREADS.
template <typename Fn>
void parallel_replicas(int replicas, Fn&& fn) {
  int workers = std::min(thread_count(), replicas);
  if (workers <= 1) {
    for (int r = 0; r < replicas; ++r) fn(r);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      while (true) {
        int r = next.fetch_add(1);
        if (r >= replicas) return;
        try {
          fn(r);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

Coloring initial_state(const RunConfig& c, RngSequence& rng) {
  if (!c.start_path.empty()) {
    auto parsed = parse_snapshot(read_file(c.start_path));
    if (parsed.state.n() != c.n)
      throw usage_error("start snapshot has n=" + std::to_string(parsed.state.n()) +
                        ", run requested n=" + std::to_string(c.n));
    return parsed.state;
  }
  return make_initial(c.init, c.n, c.alpha, rng, c.bernoulli_p);
}

struct ChainReplicaResult {
  bool hit = false;
  long hit_t = 0;
  GoodSetFlags final_flags;
  double final_h = 0.0;
  std::array<long, 4> in_counts{0, 0, 0, 0};
  long counted_steps = 0;
};

// Shared body of `erode` and `stationary`.
ChainReplicaResult run_chain_replica(const RunConfig& c, int replica, bool write_series) {
  RngSequence rng = RngStream{c.seed, static_cast<std::uint64_t>(replica)}.walker(0);
  Coloring state = initial_state(c, rng);

  std::ostringstream csv;
  csv << "t,h,in_A,in_G,in_Gamma,in_Omega,sym_diff\n";
  auto emit_row = [&](long t) {
    GoodSetFlags f = classify(state, c.epsilon);
    csv << t << ',' << format_double(height(state)) << ',' << int(f.in_A) << ','
        << int(f.in_G) << ',' << int(f.in_Gamma) << ',' << int(f.in_Omega_eps) << ','
        << symmetric_difference_count(state) << '\n';
    return f;
  };

  ChainReplicaResult result;
  std::filesystem::path dir(c.out_dir);
  auto snapshot_name = [&](long t) {
    return dir / ("snap_r" + std::to_string(replica) + "_t" + std::to_string(t) + ".txt");
  };

  GoodSetFlags flags = emit_row(0);
  if (flags.in_A) result.hit = true;
  if (write_series) write_file(snapshot_name(0), render_snapshot(state, 0));

  for (long t = 1; t <= c.steps; ++t) {
    erosion_step_inplace(state, rng);
    flags = emit_row(t);
    if (!result.hit && flags.in_A) {
      result.hit = true;
      result.hit_t = t;
    }
    if (t > c.burn_in) {
      ++result.counted_steps;
      result.in_counts[0] += flags.in_A;
      result.in_counts[1] += flags.in_G;
      result.in_counts[2] += flags.in_Gamma;
      result.in_counts[3] += flags.in_Omega_eps;
    }
    bool at_period = c.snapshot_every > 0 && t % c.snapshot_every == 0;
    if (write_series && (at_period || t == c.steps))
      write_file(snapshot_name(t), render_snapshot(state, t));
  }
  result.final_flags = flags;
  result.final_h = height(state);
  if (write_series)
    write_file(dir / ("series_r" + std::to_string(replica) + ".csv"), csv.str());
  return result;
}

json chain_result_json(const ChainReplicaResult& r, int replica) {
  json j;
  j["replica"] = replica;
  j["hit_A"] = json{{"hit", r.hit}, {"t", r.hit_t}};
  j["final"] = json{{"h", r.final_h},
                    {"in_A", r.final_flags.in_A},
                    {"in_G", r.final_flags.in_G},
                    {"in_Gamma", r.final_flags.in_Gamma},
                    {"in_Omega", r.final_flags.in_Omega_eps}};
  if (r.counted_steps > 0) {
    j["occupancy"] = json{
        {"steps", r.counted_steps},
        {"in_A", static_cast<double>(r.in_counts[0]) / r.counted_steps},
        {"in_G", static_cast<double>(r.in_counts[1]) / r.counted_steps},
        {"in_Gamma", static_cast<double>(r.in_counts[2]) / r.counted_steps},
        {"in_Omega", static_cast<double>(r.in_counts[3]) / r.counted_steps}};
  }
  return j;
}

int run_chain_command(const RunConfig& c, bool write_series) {
  std::filesystem::create_directories(c.out_dir);
  std::vector<ChainReplicaResult> results(c.replicas);
  parallel_replicas(c.replicas, [&](int r) { results[r] = run_chain_replica(c, r, write_series); });

  json summary;
  summary["config"] = config_json(c);
  summary["replicas"] = json::array();
  int timeouts = 0;
  for (int r = 0; r < c.replicas; ++r) {
    summary["replicas"].push_back(chain_result_json(results[r], r));
    if (!results[r].hit) ++timeouts;
  }
  summary["timeouts"] = timeouts;
  write_file(std::filesystem::path(c.out_dir) / "summary.json", summary.dump(2) + "\n");
  return 2 * timeouts > c.replicas ? 3 : 0;
}

int run_drift(const RunConfig& c) {
  std::filesystem::create_directories(c.out_dir);
  RngSequence init_rng = RngStream{c.seed, 0}.walker(1);
  Coloring state = initial_state(c, init_rng);

  json summary;
  summary["config"] = config_json(c);
  if (c.exact) {
    DriftEstimate est = drift_exact(state);
    summary["drift"] = json{{"method", "exact"}, {"mean", est.mean}, {"stderr", 0.0}};
  } else {
    // Replicas split the sample budget and merge by sufficient statistics.
    std::vector<RunningStats> parts(c.replicas);
    long per = c.samples / c.replicas;
    long rem = c.samples % c.replicas;
    const long h0 = height_numerator(state);
    parallel_replicas(c.replicas, [&](int r) {
      RngSequence rng = RngStream{c.seed, static_cast<std::uint64_t>(r)}.walker(0);
      long count = per + (r < rem ? 1 : 0);
      Coloring work = state;
      for (long i = 0; i < count; ++i) {
        work = state;
        erosion_step_inplace(work, rng);
        parts[r].add(static_cast<double>(height_numerator(work) - h0) / c.n);
      }
    });
    RunningStats total;
    for (const auto& p : parts) total.merge(p);
    summary["drift"] = json{{"method", "monte_carlo"},
                            {"mean", total.mean()},
                            {"stderr", total.stderr_()},
                            {"samples", total.count}};
  }
  write_file(std::filesystem::path(c.out_dir) / "drift.json", summary.dump(2) + "\n");
  return 0;
}

int run_idla(const RunConfig& c) {
  std::filesystem::create_directories(c.out_dir);
  const double k = c.idla_k;
  const double eps = c.epsilon.value();
  const long lo_row = static_cast<long>(std::floor((1.0 - eps) * k * c.n));
  const long hi_row = static_cast<long>(std::floor((1.0 + eps) * k * c.n));

  json per_replica = json::array();
  std::vector<json> slots(c.replicas);
  int contained = 0;
  parallel_replicas(c.replicas, [&](int r) {
    RngSequence rng = RngStream{c.seed, static_cast<std::uint64_t>(r)}.walker(0);
    IdlaCluster cluster = idla_run(c.n, c.initial_rows, c.particles, rng, c.kill_row);
    std::string snap = render_cluster_snapshot(cluster, lo_row, hi_row);
    write_file(std::filesystem::path(c.out_dir) / ("cluster_r" + std::to_string(r) + ".txt"),
               snap);
    auto normalized = normalize_cluster(cluster);
    bool low = cluster_contains_rows(normalized, c.n, lo_row);
    bool high = cluster_max_row(normalized) <= hi_row;
    slots[r] = json{{"replica", r},
                    {"t", cluster.particles_placed()},
                    {"max_row", cluster.max_row()},
                    {"contained_low", low},
                    {"contained_high", high}};
  });
  for (int r = 0; r < c.replicas; ++r) {
    per_replica.push_back(slots[r]);
    if (slots[r]["contained_low"].get<bool>() && slots[r]["contained_high"].get<bool>())
      ++contained;
  }

  json summary;
  summary["config"] = config_json(c);
  summary["band"] = json{{"low_row", lo_row}, {"high_row", hi_row}};
  summary["replicas"] = per_replica;
  summary["containment_rate"] = static_cast<double>(contained) / c.replicas;
  write_file(std::filesystem::path(c.out_dir) / "summary.json", summary.dump(2) + "\n");
  return 0;
}

int run_sort(const RunConfig& c) {
  std::filesystem::create_directories(c.out_dir);
  std::vector<json> slots(c.replicas);
  parallel_replicas(c.replicas, [&](int r) {
    RngSequence rng = RngStream{c.seed, static_cast<std::uint64_t>(r)}.walker(0);
    Labeling lab = Labeling::sorted(c.n);
    std::ostringstream csv;
    csv << "t,deviation\n";
    long above = 0, counted = 0;
    csv << 0 << ',' << format_double(label_deviation(lab)) << '\n';
    for (long t = 1; t <= c.steps; ++t) {
      lab = sorting_step(lab, rng);
      double dev = label_deviation(lab);
      csv << t << ',' << format_double(dev) << '\n';
      if (t > c.burn_in) {
        ++counted;
        if (dev > c.epsilon.value()) ++above;
      }
    }
    write_file(std::filesystem::path(c.out_dir) / ("deviation_r" + std::to_string(r) + ".csv"),
               csv.str());
    std::ostringstream labels;
    labels << "col,row,label\n";
    for (int i = 0; i < lab.size(); ++i) {
      Site s = site_at(i, c.n);
      labels << s.col << ',' << s.row << ',' << lab.label(i) << '\n';
    }
    write_file(std::filesystem::path(c.out_dir) / ("labels_r" + std::to_string(r) + ".csv"),
               labels.str());
    slots[r] = json{{"replica", r},
                    {"final_deviation", label_deviation(lab)},
                    {"steps_counted", counted},
                    {"fraction_above_epsilon",
                     counted ? static_cast<double>(above) / counted : 0.0}};
  });

  json summary;
  summary["config"] = config_json(c);
  summary["replicas"] = slots;
  write_file(std::filesystem::path(c.out_dir) / "summary.json", summary.dump(2) + "\n");
  return 0;
}

int run_potential(const RunConfig& c) {
  if (c.region_path.empty()) throw usage_error("potential requires --region <file>");
  std::filesystem::create_directories(c.out_dir);
  auto [members, n] = parse_region_grid(read_file(c.region_path));
  Region a(n, members);

  PotentialField h = expected_exit_height(a, n);
  bool top_free = true;
  for (int col = 0; col < n; ++col)
    if (a.contains(Site{col, n})) top_free = false;

  std::ostringstream csv;
  csv << "col,row,in_A,H" << (top_free ? ",G\n" : "\n");
  PotentialField g;
  if (top_free) g = stopped_green(a, n);
  for (int i = 0; i < site_count(n); ++i) {
    Site s = site_at(i, n);
    csv << s.col << ',' << s.row << ',' << int(a.contains(i)) << ','
        << format_double(h.at(i));
    if (top_free) csv << ',' << format_double(g.at(i));
    csv << '\n';
  }
  write_file(std::filesystem::path(c.out_dir) / "fields.csv", csv.str());

  json summary;
  summary["config"] = config_json(c);
  summary["n"] = n;
  summary["region_sites"] = a.count();
  summary["residual_H"] = h.residual;
  double bottom_sum = 0.0;
  for (int col = 0; col < n; ++col) bottom_sum += h.at(Site{col, 0});
  summary["mean_bottom_exit_height"] = bottom_sum / n;
  if (top_free) {
    Flow f = gradient_flow(g);
    FlowMetrics metrics = flow_metrics(f);
    summary["gradient_flow_energy"] = metrics.energy;
    summary["residual_G"] = g.residual;
  }
  write_file(std::filesystem::path(c.out_dir) / "summary.json", summary.dump(2) + "\n");
  return 0;
}

int run_predict(const RunConfig& c) {
  std::filesystem::create_directories(c.out_dir);
  GeneralGraph graph = cylinder_general_graph(c.n);
  double residual = 0.0;
  auto g = solve_poisson(graph, uniform_row_distribution(0, c.n),
                         uniform_row_distribution(c.n, c.n), &residual);
  int k = c.level_k >= 0 ? c.level_k : static_cast<int>(c.alpha.floor_mul(site_count(c.n)));
  auto s1 = level_set_partition(g, k);

  Coloring predicted(c.n, c.alpha);
  for (int idx : s1) predicted.set_blue(idx, true);
  write_file(std::filesystem::path(c.out_dir) / "predicted.txt",
             render_snapshot(predicted, 0));

  std::ostringstream csv;
  csv << "col,row,g\n";
  for (int i = 0; i < site_count(c.n); ++i) {
    Site s = site_at(i, c.n);
    csv << s.col << ',' << s.row << ',' << format_double(g[i]) << '\n';
  }
  write_file(std::filesystem::path(c.out_dir) / "potential.csv", csv.str());

  json summary;
  summary["config"] = config_json(c);
  summary["k"] = k;
  summary["residual"] = residual;
  write_file(std::filesystem::path(c.out_dir) / "summary.json", summary.dump(2) + "\n");
  return 0;
}

}  // namespace

int thread_count() {
  const char* env = std::getenv("EROSION_LAB_THREADS");
  if (env) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw >= 1 ? static_cast<int>(hw) : 1;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig config;

  // The config file provides defaults; flags parsed afterwards override.
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw usage_error("--config needs a path");
      config.config_path = args[i + 1];
    }
  }
  if (!config.config_path.empty()) apply_config_file(config, config.config_path);

  CLI::App app{"competitive erosion on the cylinder: simulation and exact analysis"};
  app.require_subcommand(1);

  std::string alpha_text, epsilon_text;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "cylinder size (n >= 2)");
    sub->add_option("--alpha", alpha_text, "blue fraction, decimal or p/q");
    sub->add_option("--epsilon", epsilon_text, "band width, decimal or p/q");
    sub->add_option("--seed", config.seed, "master seed");
    sub->add_option("--replicas", config.replicas, "independent replicas");
    sub->add_option("--out", config.out_dir, "output directory");
    sub->add_option("--config", config.config_path, "JSON config file (defaults)");
  };

  CLI::App* erode = app.add_subcommand("erode", "run the competitive erosion chain");
  add_common(erode);
  erode->add_option("--steps", config.steps, "chain steps");
  erode->add_option("--burn-in", config.burn_in, "steps excluded from occupancy");
  std::string init_text;
  erode->add_option("--init", init_text, "slab|antislab|vertical|checkerboard|bernoulli");
  erode->add_option("--p", config.bernoulli_p, "bernoulli blue probability");
  erode->add_option("--snapshot-every", config.snapshot_every, "snapshot period (0: ends only)");
  erode->add_option("--start", config.start_path, "snapshot file to start from");

  CLI::App* stationary = app.add_subcommand("stationary", "occupancy of the good sets");
  add_common(stationary);
  stationary->add_option("--steps", config.steps, "chain steps after burn-in");
  stationary->add_option("--burn-in", config.burn_in, "burn-in steps");
  stationary->add_option("--init", init_text, "initial condition");
  stationary->add_option("--p", config.bernoulli_p, "bernoulli blue probability");
  stationary->add_option("--start", config.start_path, "snapshot file to start from");

  CLI::App* drift = app.add_subcommand("drift", "one-step height drift from a state");
  add_common(drift);
  drift->add_flag("--exact", config.exact, "exact drift (n <= 20)");
  drift->add_option("--samples", config.samples, "Monte Carlo samples");
  drift->add_option("--init", init_text, "initial condition");
  drift->add_option("--p", config.bernoulli_p, "bernoulli blue probability");
  drift->add_option("--start", config.start_path, "snapshot file to start from");

  CLI::App* idla = app.add_subcommand("idla", "internal DLA on the half-infinite cylinder");
  add_common(idla);
  idla->add_option("--particles", config.particles, "number of particles");
  idla->add_option("--k", config.idla_k, "band parameter k");
  long kill_row_value = -1;
  idla->add_option("--kill-row", kill_row_value, "discard walkers reaching this row");
  idla->add_option("--initial-rows", config.initial_rows, "initially occupied full rows");

  CLI::App* sort = app.add_subcommand("sort", "diffusive sorting chain");
  add_common(sort);
  sort->add_option("--steps", config.steps, "chain steps");
  sort->add_option("--burn-in", config.burn_in, "steps excluded from the deviation stats");

  CLI::App* potential = app.add_subcommand("potential", "exit heights and Green function of a region");
  add_common(potential);
  potential->add_option("--region", config.region_path, "region grid file (0/1)");

  CLI::App* predict = app.add_subcommand("predict", "level-set interface prediction");
  add_common(predict);
  predict->add_option("--level", config.level_k, "level-set size k (default floor(alpha*n(n+1)))");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream help;
    help << app.help();
    throw help_requested(help.str());
  } catch (const CLI::ParseError& e) {
    throw usage_error(e.what());
  }

  if (!alpha_text.empty()) {
    try {
      config.alpha = Rational::parse(alpha_text);
    } catch (const std::exception& e) {
      throw usage_error(std::string("bad --alpha: ") + e.what());
    }
  }
  if (!epsilon_text.empty()) {
    try {
      config.epsilon = Rational::parse(epsilon_text);
    } catch (const std::exception& e) {
      throw usage_error(std::string("bad --epsilon: ") + e.what());
    }
  }
  if (!init_text.empty()) {
    try {
      config.init = parse_init_kind(init_text);
    } catch (const std::exception& e) {
      throw usage_error(e.what());
    }
  }
  if (kill_row_value >= 0) config.kill_row = kill_row_value;

  for (CLI::App* sub : {erode, stationary, drift, idla, sort, potential, predict})
    if (sub->parsed()) config.subcommand = sub->get_name();
  validate_config(config);
  return config;
}

int run_config(const RunConfig& c) {
  try {
    if (c.subcommand == "erode") return run_chain_command(c, true);
    if (c.subcommand == "stationary") return run_chain_command(c, false);
    if (c.subcommand == "drift") return run_drift(c);
    if (c.subcommand == "idla") return run_idla(c);
    if (c.subcommand == "sort") return run_sort(c);
    if (c.subcommand == "potential") return run_potential(c);
    if (c.subcommand == "predict") return run_predict(c);
  } catch (const numeric_error& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 2;
  } catch (const walk_cap_error& e) {
    std::cerr << "walk cap exceeded: " << e.what() << "\n";
    return 2;
  }
  throw usage_error("unknown subcommand '" + c.subcommand + "'");
}

int cli_main(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    RunConfig config = parse_args(args);
    return run_config(config);
  } catch (const help_requested& h) {
    std::cout << h.what();
    return 0;
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace elab
