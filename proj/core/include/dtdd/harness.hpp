// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dtdd/metrics.hpp"
#include "dtdd/propagation.hpp"
#include "dtdd/snapshot.hpp"

namespace dtdd {

/// Tag embedded in every output file.
inline constexpr std::string_view kVersion = "dtdd-sim 1.0.0";

struct TopologyParams {
  std::size_t n_bs = 16;
  double area_side = 40.0;  ///< m
};

/// {2/16, 4/16, ..., 16/16}. The single-UE point is left out because it
/// cannot carry mixed traffic.
std::vector<double> default_utilizations();

struct SimulationConfig {
  TopologyParams topology;
  RadioParams radio;
  /// `utilization` is overwritten by each entry of `utilizations`.
  TrafficConfig traffic{.utilization = 1.0, .dl_probability = 0.5,
                        .require_mixed_traffic = true};
  std::vector<Scheme> schemes{Scheme::baseline, Scheme::jt, Scheme::jt_ds};
  std::size_t delta = 0;
  std::vector<double> utilizations = default_utilizations();
  std::size_t snapshots_per_point = 10000;
  std::uint64_t master_seed = 1;
  std::size_t worker_count = 0;  ///< 0 picks std::thread::hardware_concurrency

  /// Throws ConfigurationError on an empty or out-of-range sweep, an empty or
  /// duplicated scheme list, or invalid radio/traffic/topology parameters.
  void validate() const;
};

struct SnapshotRecord {
  Scheme scheme = Scheme::baseline;
  std::size_t utilization_index = 0;
  double utilization = 0.0;
  std::size_t delta = 0;
  std::size_t snapshot = 0;
  std::size_t k_dl = 0;
  std::size_t k_ul = 0;
  std::size_t v_ul = 0;
  double dl_sum_rate = 0.0;
  double ul_sum_rate = 0.0;
  double sum_rate = 0.0;
  bool failed = false;
  std::uint64_t realization_hash = 0;  ///< not serialized
};

struct SweepPointResult {
  Scheme scheme = Scheme::baseline;
  double utilization = 0.0;
  std::size_t k = 0;
  std::size_t snapshots = 0;
  std::size_t failed = 0;
  std::optional<SweepPointSummary> summary;  ///< empty if every snapshot failed
};

struct RunResult {
  SimulationConfig config;
  std::string version{kVersion};
  /// Ordered by (scheme, utilization, snapshot), schemes in enum order.
  std::vector<SnapshotRecord> records;
  std::vector<SweepPointResult> summaries;
  std::vector<std::string> warnings;
};

/// Monte Carlo sweep. Each (utilization, snapshot) cell draws one snapshot
/// and one channel realization from derive_stream and shares them across
/// all schemes. Cells are spread over a worker pool; the result does not
/// depend on the worker count.
RunResult run_sweep(const SimulationConfig& config);

/// Writes records.csv, summary.json and config.json into `out_dir`
/// (created if missing).
void write_results(const RunResult& result, const std::filesystem::path& out_dir);

std::string records_csv(const RunResult& result);
std::string summary_json(const RunResult& result);

/// Parses a JSON config. Keys mirror SimulationConfig; anything missing keeps
/// its default and unknown keys throw ConfigurationError.
SimulationConfig parse_config(std::string_view text);
SimulationConfig load_config(const std::filesystem::path& path);
std::string config_json(const SimulationConfig& config);

/// printf("%.12g") rendering used for every number in the output files.
std::string format_number(double value);

}  // namespace dtdd
