// Command-line front end: run | sweep | compare | validate.
// Exit codes: 0 success, 1 bad configuration or usage, 2 runtime failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wsnsim/config.hpp"
#include "wsnsim/metrics.hpp"
#include "wsnsim/report.hpp"
#include "wsnsim/simulator.hpp"
#include "wsnsim/version.hpp"

namespace {

using namespace wsnsim;

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot write '" + path.string() + "'");
  }
  return file;
}

std::vector<std::uint64_t> seed_range(std::uint64_t base, int count) {
  if (count < 1) throw std::invalid_argument("--seeds: must be >= 1");
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(count));
  std::iota(seeds.begin(), seeds.end(), base);
  return seeds;
}

std::vector<Strategy> parse_strategies(const std::string& list) {
  std::vector<Strategy> out;
  std::stringstream stream(list);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.push_back(strategy_from_string(item));
  }
  if (out.empty()) {
    throw std::invalid_argument("--strategies: expected a comma-separated list");
  }
  return out;
}

int do_run(const SimConfig& config, const std::filesystem::path& out_dir,
           const std::vector<std::string>& overrides) {
  const SimResult result = run(config);
  std::filesystem::create_directories(out_dir);
  {
    std::ofstream f = open_out(out_dir / "timeseries.csv");
    write_timeseries_csv(f, result.rounds);
  }
  {
    std::ofstream f = open_out(out_dir / "summary.csv");
    write_summary_header(f);
    write_summary_row(f, config.strategy, config.seed, result.summary);
  }
  {
    std::ofstream f = open_out(out_dir / "metadata.txt");
    write_metadata(f, config, overrides, {config.seed});
  }
  std::cout << "rounds=" << result.summary.rounds_simulated
            << " first_death=" << result.summary.first_death_round
            << " last_death=" << result.summary.last_death_round
            << " packets_to_bs=" << result.summary.total_packets_to_bs << '\n';
  return 0;
}

int do_sweep(const SimConfig& config, const std::filesystem::path& out_dir,
             const std::vector<std::string>& overrides,
             const std::vector<std::uint64_t>& seeds) {
  const SweepResult result = sweep(config, seeds);
  std::filesystem::create_directories(out_dir);
  {
    std::ofstream f = open_out(out_dir / "summary.csv");
    write_summary_header(f);
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      write_summary_row(f, config.strategy, seeds[i], result.summaries[i]);
    }
  }
  {
    std::ofstream f = open_out(out_dir / "aggregate.csv");
    write_aggregate_csv(f, {result});
  }
  {
    std::ofstream f = open_out(out_dir / "metadata.txt");
    write_metadata(f, config, overrides, seeds);
  }
  std::cout << "seeds=" << seeds.size()
            << " first_death_median=" << format_g9(result.first_death.median)
            << " last_death_median=" << format_g9(result.last_death.median)
            << '\n';
  return 0;
}

int do_compare(const SimConfig& base, const std::filesystem::path& out_dir,
               const std::vector<std::string>& overrides,
               const std::vector<std::uint64_t>& seeds,
               const std::vector<Strategy>& strategies) {
  std::vector<SimConfig> configs;
  configs.reserve(strategies.size());
  for (Strategy s : strategies) {
    SimConfig c = base;
    c.strategy = s;
    configs.push_back(c);
  }
  const Comparison table = compare(configs, seeds);
  std::filesystem::create_directories(out_dir);
  {
    std::ofstream f = open_out(out_dir / "summary.csv");
    write_summary_header(f);
    for (const SweepResult& row : table.rows) {
      for (std::size_t i = 0; i < seeds.size(); ++i) {
        write_summary_row(f, row.strategy, seeds[i], row.summaries[i]);
      }
    }
  }
  {
    std::ofstream f = open_out(out_dir / "comparison.csv");
    write_comparison_csv(f, table);
  }
  {
    std::ofstream f = open_out(out_dir / "metadata.txt");
    write_metadata(f, base, overrides, seeds);
    std::string names;
    for (const SweepResult& row : table.rows) {
      if (!names.empty()) names += ',';
      names += to_string(row.strategy);
    }
    f << "strategies=" << names << '\n';
  }
  for (const SweepResult& row : table.rows) {
    std::cout << to_string(row.strategy)
              << " first_death_median=" << format_g9(row.first_death.median)
              << " last_death_median=" << format_g9(row.last_death.median)
              << " packets_to_bs_median=" << format_g9(row.packets_to_bs.median)
              << '\n';
  }
  return 0;
}

int do_validate(const SimConfig& config) {
  const ClassCounts counts = class_counts(config.n_nodes, config.het);
  const double e_total = total_energy(config.n_nodes, config.het);
  const double d0 = threshold_distance(config.radio);
  const double d_bs = avg_dist_to_bs(config.field_side);
  const int k = optimal_cluster_count(config.radio, config.n_nodes,
                                      config.field_side, d_bs);
  const double e_round =
      round_energy(config.radio, config.n_nodes, k, config.field_side);
  const std::int64_t horizon = lifetime_estimate(e_total, e_round);
  std::cout << "class_counts=" << counts.normal << ',' << counts.advanced
            << ',' << counts.super << ',' << counts.ultra << '\n'
            << "total_energy_j=" << format_exact(e_total) << '\n'
            << "threshold_distance_m=" << format_exact(d0) << '\n'
            << "avg_dist_to_bs_m=" << format_exact(d_bs) << '\n'
            << "optimal_clusters=" << k << '\n'
            << "round_energy_j=" << format_exact(e_round) << '\n'
            << "lifetime_estimate_rounds=" << horizon << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Round-based simulator for energy-aware cluster-head election "
               "in heterogeneous sensor networks"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::vector<std::string> overrides;
  std::uint64_t seed = 0;
  int seed_count = 30;
  std::uint64_t seed_base = 1;
  std::string strategies = "DEEC,EDEEC,BEENISH";

  auto add_config_opts = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path,
                    "key=value config file (defaults apply when omitted)");
    cmd->add_option("--set", overrides,
                    "key=value override, applied after the file (repeatable)");
  };

  CLI::App* cmd_run = app.add_subcommand(
      "run", "Simulate one seed; writes timeseries.csv, summary.csv, metadata.txt");
  add_config_opts(cmd_run);
  cmd_run->add_option("--out", out_dir, "output directory")->required();
  CLI::Option* seed_opt =
      cmd_run->add_option("--seed", seed, "RNG seed (overrides the config)");

  CLI::App* cmd_sweep = app.add_subcommand(
      "sweep", "Simulate many seeds; writes summary.csv, aggregate.csv, metadata.txt");
  add_config_opts(cmd_sweep);
  cmd_sweep->add_option("--out", out_dir, "output directory")->required();
  cmd_sweep->add_option("--seeds", seed_count, "number of consecutive seeds")
      ->check(CLI::PositiveNumber);
  cmd_sweep->add_option("--seed-base", seed_base, "first seed of the range");

  CLI::App* cmd_compare = app.add_subcommand(
      "compare",
      "Paired multi-strategy sweep; writes summary.csv, comparison.csv, metadata.txt");
  add_config_opts(cmd_compare);
  cmd_compare->add_option("--out", out_dir, "output directory")->required();
  cmd_compare->add_option("--seeds", seed_count, "number of consecutive seeds")
      ->check(CLI::PositiveNumber);
  cmd_compare->add_option("--seed-base", seed_base, "first seed of the range");
  cmd_compare->add_option("--strategies", strategies,
                          "comma-separated strategies to compare");

  CLI::App* cmd_validate = app.add_subcommand(
      "validate", "Parse the config and print derived quantities; no simulation");
  add_config_opts(cmd_validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message to stderr
    return 1;
  }

  try {
    SimConfig config = config_path.empty()
                           ? parse_config("", overrides)
                           : load_config(config_path, overrides);
    if (seed_opt->count() > 0) config.seed = seed;

    if (cmd_run->parsed()) {
      return do_run(config, out_dir, overrides);
    }
    if (cmd_sweep->parsed()) {
      return do_sweep(config, out_dir, overrides, seed_range(seed_base, seed_count));
    }
    if (cmd_compare->parsed()) {
      return do_compare(config, out_dir, overrides, seed_range(seed_base, seed_count),
                        parse_strategies(strategies));
    }
    return do_validate(config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
