// SPDX-License-Identifier: Apache-2.0
#include "dtdd/snapshot.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dtdd/errors.hpp"

namespace dtdd {

void TrafficConfig::validate() const {
  if (!(utilization > 0.0 && utilization <= 1.0)) {
    throw ConfigurationError("utilization must lie in (0, 1]");
  }
  if (!(dl_probability >= 0.0 && dl_probability <= 1.0)) {
    throw ConfigurationError("dl_probability must lie in [0, 1]");
  }
}

std::size_t Snapshot::serving_bs_at(std::size_t position) const {
  const std::size_t ue =
      position < k_dl() ? dl_ues.at(position) : ul_ues.at(position - k_dl());
  return ue_placement.serving_bs[ue];
}

std::size_t ue_count(std::size_t n_bs, double utilization) {
  return static_cast<std::size_t>(std::llround(utilization * static_cast<double>(n_bs)));
}

Snapshot make_snapshot(UePlacement placement, std::vector<Direction> directions,
                       std::size_t n_bs) {
  if (directions.size() != placement.size()) {
    throw PreconditionError("one direction per UE is required");
  }
  Snapshot snapshot;
  std::vector<bool> serves_uplink(n_bs, false);
  for (std::size_t ue = 0; ue < placement.size(); ++ue) {
    if (directions[ue] == Direction::downlink) {
      snapshot.dl_ues.push_back(ue);
    } else {
      snapshot.ul_ues.push_back(ue);
      const std::size_t bs = placement.serving_bs[ue];
      serves_uplink.at(bs) = true;
      snapshot.n_ul_set.push_back(bs);
    }
  }
  for (std::size_t bs = 0; bs < n_bs; ++bs) {
    if (!serves_uplink[bs]) {
      snapshot.n_dl_set.push_back(bs);
    }
  }
  snapshot.ue_placement = std::move(placement);
  snapshot.directions = std::move(directions);
  return snapshot;
}

Snapshot generate_snapshot(const Topology& topology, const TrafficConfig& traffic,
                           RandomStream& rng) {
  traffic.validate();
  const std::size_t k = ue_count(topology.n_bs(), traffic.utilization);
  if (k == 0) {
    throw ConfigurationError("utilization yields zero active UEs");
  }
  if (traffic.require_mixed_traffic && k < 2) {
    throw ConfigurationError("mixed uplink/downlink traffic needs at least two UEs");
  }
  if (traffic.require_mixed_traffic &&
      (traffic.dl_probability <= 0.0 || traffic.dl_probability >= 1.0)) {
    throw ConfigurationError("mixed traffic cannot be drawn with dl_probability " +
                             std::to_string(traffic.dl_probability));
  }

  UePlacement placement = drop_ues(topology, k, rng);

  std::vector<Direction> directions(k);
  for (;;) {
    std::size_t downlink = 0;
    for (auto& direction : directions) {
      direction = rng.bernoulli(traffic.dl_probability) ? Direction::downlink
                                                        : Direction::uplink;
      downlink += direction == Direction::downlink ? 1 : 0;
    }
    const bool mixed = downlink > 0 && downlink < k;
    if (!traffic.require_mixed_traffic || mixed) {
      break;
    }
  }
  return make_snapshot(std::move(placement), std::move(directions), topology.n_bs());
}

}  // namespace dtdd
