// SPDX-License-Identifier: Apache-2.0
#include "dtdd/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "dtdd/channel.hpp"
#include "dtdd/errors.hpp"
#include "dtdd/pipeline.hpp"
#include "dtdd/random.hpp"
#include "dtdd/topology.hpp"

namespace dtdd {
namespace {

constexpr double kFailureWarningRate = 0.01;

std::vector<Scheme> canonical_schemes(const std::vector<Scheme>& requested) {
  std::vector<Scheme> schemes;
  for (const Scheme scheme : kAllSchemes) {
    if (std::find(requested.begin(), requested.end(), scheme) != requested.end()) {
      schemes.push_back(scheme);
    }
  }
  return schemes;
}

}  // namespace

std::vector<double> default_utilizations() {
  std::vector<double> grid;
  for (int k = 2; k <= 16; k += 2) {
    grid.push_back(k / 16.0);
  }
  return grid;
}

void SimulationConfig::validate() const {
  radio.validate();
  TrafficConfig probe = traffic;
  for (const double u : utilizations) {
    probe.utilization = u;
    probe.validate();
    const std::size_t k = ue_count(topology.n_bs, u);
    if (k == 0) {
      throw ConfigurationError("utilization " + format_number(u) + " yields no UEs");
    }
    if (traffic.require_mixed_traffic && k < 2) {
      throw ConfigurationError("utilization " + format_number(u) +
                               " yields a single UE; mixed traffic is impossible");
    }
  }
  if (utilizations.empty()) {
    throw ConfigurationError("at least one utilization is required");
  }
  if (schemes.empty()) {
    throw ConfigurationError("at least one scheme is required");
  }
  if (canonical_schemes(schemes).size() != schemes.size()) {
    throw ConfigurationError("schemes must not repeat");
  }
  if (snapshots_per_point == 0) {
    throw ConfigurationError("snapshots_per_point must be at least 1");
  }
  if (traffic.require_mixed_traffic &&
      (traffic.dl_probability <= 0.0 || traffic.dl_probability >= 1.0)) {
    throw ConfigurationError("mixed traffic needs 0 < dl_probability < 1");
  }
  build_grid(topology.n_bs, topology.area_side);
}

RunResult run_sweep(const SimulationConfig& config) {
  config.validate();
  const Topology topology = build_grid(config.topology.n_bs, config.topology.area_side);
  const std::vector<Scheme> schemes = canonical_schemes(config.schemes);
  const std::size_t points = config.utilizations.size();
  const std::size_t per_point = config.snapshots_per_point;
  const std::size_t cells = points * per_point;

  RunResult result;
  result.config = config;
  result.records.resize(schemes.size() * cells);

  const auto record_slot = [&](std::size_t scheme_pos, std::size_t u, std::size_t s) {
    return (scheme_pos * points + u) * per_point + s;
  };

  const auto run_cell = [&](std::size_t cell) {
    const std::size_t u = cell / per_point;
    const std::size_t s = cell % per_point;
    TrafficConfig traffic = config.traffic;
    traffic.utilization = config.utilizations[u];

    RandomStream rng = derive_stream(config.master_seed, u, s);
    const Snapshot snapshot = generate_snapshot(topology, traffic, rng);
    const ChannelRealization channel =
        build_channel_realization(snapshot, topology, config.radio, rng);
    const std::uint64_t hash = fingerprint(snapshot, channel);
    const SnapshotEvaluation evaluation =
        evaluate_snapshot(schemes, config.delta, snapshot, channel, config.radio);

    for (std::size_t pos = 0; pos < schemes.size(); ++pos) {
      const SnapshotMetrics& metrics = *evaluation.get(schemes[pos]);
      SnapshotRecord& record = result.records[record_slot(pos, u, s)];
      record.scheme = schemes[pos];
      record.utilization_index = u;
      record.utilization = config.utilizations[u];
      record.delta = config.delta;
      record.snapshot = s;
      record.k_dl = snapshot.k_dl();
      record.k_ul = snapshot.k_ul();
      record.v_ul = metrics.v_ul_used;
      record.dl_sum_rate = metrics.dl_sum_rate;
      record.ul_sum_rate = metrics.ul_sum_rate;
      record.sum_rate = metrics.sum_rate;
      record.failed = metrics.failed;
      record.realization_hash = hash;
    }
  };

  std::size_t workers = config.worker_count;
  if (workers == 0) {
    workers = std::max(1U, std::thread::hardware_concurrency());
  }
  workers = std::min(workers, std::max<std::size_t>(cells, 1));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t cell = next++; cell < cells && !abort; cell = next++) {
          try {
            run_cell(cell);
          } catch (...) {
            const std::lock_guard lock(error_mutex);
            if (!error) {
              error = std::current_exception();
            }
            abort = true;
          }
        }
      });
    }
  }
  if (error) {
    std::rethrow_exception(error);
  }

  std::size_t failed_total = 0;
  for (std::size_t pos = 0; pos < schemes.size(); ++pos) {
    for (std::size_t u = 0; u < points; ++u) {
      SweepPointResult point;
      point.scheme = schemes[pos];
      point.utilization = config.utilizations[u];
      point.k = ue_count(config.topology.n_bs, point.utilization);
      point.snapshots = per_point;
      std::vector<double> total, dl, ul;
      for (std::size_t s = 0; s < per_point; ++s) {
        const SnapshotRecord& record = result.records[record_slot(pos, u, s)];
        if (record.failed) {
          ++point.failed;
          continue;
        }
        total.push_back(record.sum_rate);
        dl.push_back(record.dl_sum_rate);
        ul.push_back(record.ul_sum_rate);
      }
      if (!total.empty()) {
        point.summary = summarize(total, dl, ul, point.k);
      }
      failed_total += point.failed;
      result.summaries.push_back(point);
    }
  }

  if (!result.records.empty()) {
    const double rate =
        static_cast<double>(failed_total) / static_cast<double>(result.records.size());
    if (rate > kFailureWarningRate) {
      result.warnings.push_back("singular-channel failure rate " + format_number(rate) +
                                " exceeds " + format_number(kFailureWarningRate));
    }
  }
  return result;
}

}  // namespace dtdd
