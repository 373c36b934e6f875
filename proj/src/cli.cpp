#include "wsn/cli.hpp"

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wsn/clustering.hpp"
#include "wsn/core.hpp"
#include "wsn/density.hpp"
#include "wsn/errors.hpp"
#include "wsn/io.hpp"
#include "wsn/metrics.hpp"
#include "wsn/protocol.hpp"

namespace wsn {

namespace {

namespace fs = std::filesystem;

NetworkConfig load_config(const std::string& path) {
  return path.empty() ? NetworkConfig{} : parse_config_file(path);
}

std::string join_path(const std::string& dir, const char* name) {
  return (fs::path(dir) / name).string();
}

std::vector<std::uint32_t> checkpoint_columns(const NetworkConfig& config) {
  std::vector<std::uint32_t> cps;
  cps.reserve(config.checkpoints.size());
  for (std::size_t cp : config.checkpoints) cps.push_back(static_cast<std::uint32_t>(cp));
  return cps;
}

// Decision-graph data for the layout a run deploys: per-node density, peak
// distance, their product, and which nodes the selection would pick.
void write_decision_graph(const std::string& out_dir, const std::vector<Point2D>& positions,
                          const NetworkConfig& config) {
  auto profile = density_profile(positions, config);
  auto selection = select_initial_centers(positions, config, config.forced_k);
  write_text_file(join_path(out_dir, "decision_graph.csv"),
                  format_decision_graph_csv(profile, selection.center_ids));
}

int run_simulate(const std::string& config_path, const std::string& protocol,
                 std::uint64_t seed, bool seed_given, const std::string& out_dir) {
  NetworkConfig config = load_config(config_path);
  if (seed_given) config.rng_seed = seed;
  config.validate();
  ProtocolKind kind = protocol_from_name(protocol);

  auto result = simulate(config, kind, config.rng_seed);
  for (const auto& warning : result.warnings) std::cerr << "warning: " << warning << "\n";

  fs::create_directories(out_dir);
  write_text_file(join_path(out_dir, "rounds.csv"), format_rounds_csv(result.logs));
  write_text_file(join_path(out_dir, "events.csv"), format_events_csv(result.logs));
  RunResult run;
  run.kind = kind;
  run.seed = config.rng_seed;
  run.metrics = result.metrics;
  run.ok = true;
  write_text_file(join_path(out_dir, "metrics.csv"),
                  format_metrics_csv({run}, checkpoint_columns(config)));

  std::vector<Point2D> positions;
  for (const auto& node : deploy_uniform(config, config.rng_seed))
    positions.push_back(node.position);
  write_decision_graph(out_dir, positions, config);

  const auto& m = result.metrics;
  std::cout << protocol_name(kind) << " seed=" << config.rng_seed << ": " << m.total_rounds
            << " rounds, fnd=" << m.fnd << (m.fnd_censored ? "*" : "") << " hnd=" << m.hnd
            << (m.hnd_censored ? "*" : "") << " lnd=" << m.lnd << (m.lnd_censored ? "*" : "")
            << " (* = censored at the last round); wrote " << out_dir << "\n";
  return 0;
}

int run_batch_cmd(const std::string& config_path, const std::vector<std::string>& protocols,
                  std::vector<std::uint64_t> seeds, const std::vector<std::uint64_t>& checkpoints,
                  const std::string& out_dir) {
  NetworkConfig config = load_config(config_path);
  if (!checkpoints.empty()) {
    config.checkpoints.clear();
    for (auto cp : checkpoints) config.checkpoints.push_back(static_cast<std::size_t>(cp));
  }
  config.validate();

  std::vector<ProtocolKind> kinds;
  for (const auto& name : protocols) kinds.push_back(protocol_from_name(name));
  if (seeds.empty())
    for (std::uint64_t s = 1; s <= 20; ++s) seeds.push_back(s);

  auto table = run_batch(config, kinds, seeds);
  for (const auto& run : table.results)
    if (!run.ok)
      std::cerr << "warning: " << protocol_name(run.kind) << " seed " << run.seed
                << " failed: " << run.error << "\n";

  fs::create_directories(out_dir);
  write_text_file(join_path(out_dir, "summary.csv"), format_summary_csv(table));
  write_text_file(join_path(out_dir, "metrics.csv"),
                  format_metrics_csv(table.results, table.checkpoints));

  for (const auto& agg : table.aggregates)
    std::cout << protocol_name(agg.kind) << ": runs=" << agg.runs
              << " fnd=" << format_double(agg.fnd_mean) << "+-" << format_double(agg.fnd_std)
              << " hnd=" << format_double(agg.hnd_mean) << "+-" << format_double(agg.hnd_std)
              << " lnd=" << format_double(agg.lnd_mean) << "+-" << format_double(agg.lnd_std)
              << "\n";
  std::cout << "wrote " << out_dir << "\n";
  return 0;
}

int run_cluster(const std::string& layout_path, const NetworkConfig& overrides,
                const std::string& out_dir) {
  auto positions = parse_layout_csv(read_text_file(layout_path));
  NetworkConfig config = overrides;
  config.n_nodes = positions.size();
  config.validate();

  auto selection = select_initial_centers(positions, config, config.forced_k);
  auto soft = soft_kmeans(positions, selection.centers, config.beta, config.convergence_eps,
                          config.r_max);
  auto assignment = form_clusters(soft.z, soft.centers);
  assignment = reassign_boundary(assignment, soft.z, config.reassign_threshold);

  fs::create_directories(out_dir);
  write_text_file(join_path(out_dir, "assignment.csv"), format_assignment_csv(assignment));
  write_decision_graph(out_dir, positions, config);

  std::cout << "clustered " << positions.size() << " nodes into " << assignment.k()
            << " clusters (k " << (config.forced_k == 0 ? "auto" : "forced") << "); wrote "
            << out_dir << "\n";
  return 0;
}

int run_validate(const std::string& config_path) {
  NetworkConfig config = load_config(config_path);
  config.validate();
  std::cout << "config ok: " << config.n_nodes << " nodes, " << format_double(config.area_width)
            << "x" << format_double(config.area_height) << " m, k="
            << (config.forced_k == 0 ? std::string("auto") : std::to_string(config.forced_k))
            << "\n";
  return 0;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"deterministic wireless-sensor-network clustering simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::string protocol = "iskmeans";
  std::uint64_t seed = 0;
  std::vector<std::string> protocols = {"iskmeans", "soft-kmeans", "hard-kmeans", "leach"};
  std::vector<std::uint64_t> seeds;
  std::vector<std::uint64_t> checkpoints;
  std::string layout_path;
  std::string bandwidth = "auto";
  std::string density = "kde";
  NetworkConfig cluster_cfg;

  auto* sim = app.add_subcommand("simulate", "run one simulation and write its logs");
  sim->add_option("--config", config_path, "config file (key = value lines)");
  sim->add_option("--protocol", protocol, "iskmeans | soft-kmeans | hard-kmeans | leach");
  auto* seed_opt = sim->add_option("--seed", seed, "layout/protocol seed (default: config rng_seed)");
  sim->add_option("--out-dir", out_dir, "output directory");

  auto* batch = app.add_subcommand("batch", "run a protocols x seeds grid and aggregate");
  batch->add_option("--config", config_path, "config file (key = value lines)");
  batch->add_option("--protocols", protocols, "protocols to compare")->expected(1, 4);
  batch->add_option("--seeds", seeds, "seeds to run (default: 1..20)")->expected(-1);
  batch->add_option("--checkpoints", checkpoints, "variance sampling rounds")->expected(-1);
  batch->add_option("--out-dir", out_dir, "output directory");

  auto* cluster = app.add_subcommand("cluster", "cluster a layout file without simulating");
  cluster->add_option("--layout", layout_path, "layout csv (node_id,x_m,y_m)")->required();
  cluster->add_option("--config", config_path, "config file (key = value lines)");
  cluster->add_option("--k", cluster_cfg.forced_k, "cluster count (0 = from the decision graph)");
  cluster->add_option("--density", density, "density estimator: kde | cutoff");
  cluster->add_option("--bandwidth", bandwidth, "kde bandwidth in meters, or 'auto'");
  cluster->add_option("--dc-fraction", cluster_cfg.dc_neighbor_fraction,
                      "target neighbor fraction for the cutoff radius");
  cluster->add_option("--beta", cluster_cfg.beta, "membership stiffness");
  cluster->add_option("--reassign-threshold", cluster_cfg.reassign_threshold,
                      "boundary reassignment margin");
  cluster->add_option("--eps", cluster_cfg.convergence_eps, "convergence tolerance");
  cluster->add_option("--max-iter", cluster_cfg.r_max, "iteration cap");
  cluster->add_option("--out-dir", out_dir, "output directory");

  auto* validate = app.add_subcommand("validate-config", "parse and range-check a config");
  validate->add_option("--config", config_path, "config file (key = value lines)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed())
      return run_simulate(config_path, protocol, seed, seed_opt->count() > 0, out_dir);
    if (batch->parsed()) return run_batch_cmd(config_path, protocols, seeds, checkpoints, out_dir);
    if (cluster->parsed()) {
      NetworkConfig base = load_config(config_path);
      // flags override whatever the config file set
      for (const auto* opt : cluster->get_options())
        if (opt->count() > 0) {
          const std::string& name = opt->get_name();
          if (name == "--k") base.forced_k = cluster_cfg.forced_k;
          else if (name == "--dc-fraction")
            base.dc_neighbor_fraction = cluster_cfg.dc_neighbor_fraction;
          else if (name == "--beta") base.beta = cluster_cfg.beta;
          else if (name == "--reassign-threshold")
            base.reassign_threshold = cluster_cfg.reassign_threshold;
          else if (name == "--eps") base.convergence_eps = cluster_cfg.convergence_eps;
          else if (name == "--max-iter") base.r_max = cluster_cfg.r_max;
          else if (name == "--density") {
            if (density == "kde") base.density_mode = DensityMode::Kde;
            else if (density == "cutoff") base.density_mode = DensityMode::Cutoff;
            else throw ConfigError("unknown density mode '" + density + "'");
          } else if (name == "--bandwidth") {
            if (bandwidth == "auto") {
              base.kde_bandwidth = 0.0;
            } else {
              try {
                std::size_t used = 0;
                base.kde_bandwidth = std::stod(bandwidth, &used);
                if (used != bandwidth.size()) throw std::invalid_argument(bandwidth);
              } catch (const std::exception&) {
                throw ConfigError("bad --bandwidth '" + bandwidth + "' (number or 'auto')");
              }
            }
          }
        }
      return run_cluster(layout_path, base, out_dir);
    }
    if (validate->parsed()) return run_validate(config_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace wsn
