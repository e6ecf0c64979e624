// SPDX-License-Identifier: Apache-2.0
//
// simulate: Monte Carlo sweep of baseline, JT and JT-DS over utilization.

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dtdd/errors.hpp"
#include "dtdd/harness.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Dynamic-TDD joint transmission simulator"};
  app.set_version_flag("--version", std::string(dtdd::kVersion));

  std::optional<std::string> config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir = "results";
  std::optional<std::size_t> workers;
  std::vector<std::string> schemes;
  std::vector<double> utilizations;
  std::optional<std::size_t> delta;
  std::optional<std::size_t> snapshots;

  app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "master seed");
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--workers", workers, "worker threads (0 = auto)");
  app.add_option("--scheme", schemes, "scheme to run: baseline, jt, jt-ds (repeatable)")
      ->check(CLI::IsMember({"baseline", "jt", "jt-ds", "jt_ds"}));
  app.add_option("--utilization", utilizations, "utilization K/N (repeatable)")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--delta", delta, "uplink BSs withheld from the JT-DS precoder");
  app.add_option("--snapshots", snapshots, "snapshots per utilization point");

  CLI11_PARSE(app, argc, argv);

  try {
    dtdd::SimulationConfig config =
        config_path ? dtdd::load_config(*config_path) : dtdd::SimulationConfig{};
    if (seed) config.master_seed = *seed;
    if (workers) config.worker_count = *workers;
    if (delta) config.delta = *delta;
    if (snapshots) config.snapshots_per_point = *snapshots;
    if (!utilizations.empty()) config.utilizations = utilizations;
    if (!schemes.empty()) {
      config.schemes.clear();
      for (const auto& name : schemes) {
        config.schemes.push_back(*dtdd::parse_scheme(name));
      }
    }

    const dtdd::RunResult result = dtdd::run_sweep(config);
    for (const auto& warning : result.warnings) {
      std::cerr << "warning: " << warning << '\n';
    }
    dtdd::write_results(result, out_dir);

    for (const auto& point : result.summaries) {
      std::cout << dtdd::to_string(point.scheme) << " u="
                << dtdd::format_number(point.utilization);
      if (point.summary) {
        std::cout << " mean=" << dtdd::format_number(point.summary->mean_sum_rate / 1e6)
                  << " Mbit/s dl="
                  << dtdd::format_number(point.summary->mean_dl_sum_rate / 1e6)
                  << " ul=" << dtdd::format_number(point.summary->mean_ul_sum_rate / 1e6)
                  << " p5/K="
                  << dtdd::format_number(point.summary->p5_sum_rate_per_ue / 1e6);
      } else {
        std::cout << " (all snapshots failed)";
      }
      std::cout << '\n';
    }
    std::cout << "results written to " << std::filesystem::absolute(out_dir).string()
              << '\n';
  } catch (const dtdd::ConfigurationError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
