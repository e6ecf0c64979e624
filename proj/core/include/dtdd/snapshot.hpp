// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "dtdd/random.hpp"
#include "dtdd/topology.hpp"

namespace dtdd {

enum class Direction { downlink, uplink };

struct TrafficConfig {
  double utilization = 1.0;     ///< K / N
  double dl_probability = 0.5;  ///< per-UE probability of downlink traffic
  bool require_mixed_traffic = false;

  void validate() const;
};

/// One traffic realization.
///
/// UE ordering follows the downlink-first convention used by every matrix in
/// the simulator: position i < k_dl() refers to dl_ues[i], position
/// k_dl() + j refers to ul_ues[j]. n_ul_set is ordered the same way as
/// ul_ues (n_ul_set[j] = b(ul_ues[j])); n_dl_set is ascending.
struct Snapshot {
  UePlacement ue_placement;
  std::vector<Direction> directions;  ///< indexed by dropped-UE index
  std::vector<std::size_t> dl_ues;
  std::vector<std::size_t> ul_ues;
  std::vector<std::size_t> n_dl_set;
  std::vector<std::size_t> n_ul_set;

  std::size_t k() const noexcept { return ue_placement.size(); }
  std::size_t k_dl() const noexcept { return dl_ues.size(); }
  std::size_t k_ul() const noexcept { return ul_ues.size(); }
  std::size_t n_dl() const noexcept { return n_dl_set.size(); }
  std::size_t n_ul() const noexcept { return n_ul_set.size(); }

  /// Serving BS of the UE at downlink-first position `position`.
  std::size_t serving_bs_at(std::size_t position) const;
};

/// K = round(utilization * N).
std::size_t ue_count(std::size_t n_bs, double utilization);

/// Derives the UE orderings and BS partition from placement and directions.
/// Every BS that does not serve uplink traffic joins the downlink set,
/// including idle ones.
Snapshot make_snapshot(UePlacement placement, std::vector<Direction> directions,
                       std::size_t n_bs);

Snapshot generate_snapshot(const Topology& topology, const TrafficConfig& traffic,
                           RandomStream& rng);

}  // namespace dtdd
