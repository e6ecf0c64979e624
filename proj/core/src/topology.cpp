// SPDX-License-Identifier: Apache-2.0
#include "dtdd/topology.hpp"

#include <cmath>
#include <string>

#include "dtdd/errors.hpp"
#include "dtdd/propagation.hpp"

namespace dtdd {

double distance(const Point& a, const Point& b) noexcept {
  return std::hypot(a.x - b.x, a.y - b.y);
}

Topology build_grid(std::size_t n_bs, double area_side) {
  if (!(area_side > 0.0)) {
    throw ConfigurationError("area side must be positive");
  }
  const auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n_bs))));
  if (n_bs == 0 || side * side != n_bs) {
    throw ConfigurationError("BS count " + std::to_string(n_bs) +
                             " is not a positive perfect square");
  }

  Topology topology;
  topology.area_side = area_side;
  topology.bs_positions.reserve(n_bs);
  const double spacing = area_side / static_cast<double>(side);
  for (std::size_t row = 0; row < side; ++row) {
    for (std::size_t col = 0; col < side; ++col) {
      topology.bs_positions.push_back({(static_cast<double>(col) + 0.5) * spacing,
                                       (static_cast<double>(row) + 0.5) * spacing});
    }
  }
  return topology;
}

std::size_t strongest_bs(const Topology& topology, const Point& position) {
  // Path loss is strictly increasing in the clamped distance, so comparing
  // clamped distances gives the same order (and the same ties).
  std::size_t best = 0;
  double best_distance = clamp_distance(distance(position, topology.bs_positions[0]));
  for (std::size_t n = 1; n < topology.n_bs(); ++n) {
    const double d = clamp_distance(distance(position, topology.bs_positions[n]));
    if (d < best_distance) {
      best = n;
      best_distance = d;
    }
  }
  return best;
}

UePlacement drop_ues(const Topology& topology, std::size_t k, RandomStream& rng) {
  if (k == 0 || k > topology.n_bs()) {
    throw ConfigurationError("cannot place " + std::to_string(k) + " UEs on " +
                             std::to_string(topology.n_bs()) +
                             " BSs with at most one UE per BS");
  }

  UePlacement placement;
  placement.positions.reserve(k);
  placement.serving_bs.reserve(k);
  std::vector<bool> taken(topology.n_bs(), false);
  for (std::size_t ue = 0; ue < k; ++ue) {
    for (;;) {
      const Point candidate{rng.uniform(0.0, topology.area_side),
                            rng.uniform(0.0, topology.area_side)};
      const std::size_t bs = strongest_bs(topology, candidate);
      if (!taken[bs]) {
        taken[bs] = true;
        placement.positions.push_back(candidate);
        placement.serving_bs.push_back(bs);
        break;
      }
    }
  }
  return placement;
}

}  // namespace dtdd
