// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "dtdd/random.hpp"

namespace dtdd {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

double distance(const Point& a, const Point& b) noexcept;

/// Square-grid BS deployment over a square area.
struct Topology {
  std::vector<Point> bs_positions;
  double area_side = 0.0;

  std::size_t n_bs() const noexcept { return bs_positions.size(); }
};

/// Dropped UEs and their serving BS, b(k) = serving_bs[k].
struct UePlacement {
  std::vector<Point> positions;
  std::vector<std::size_t> serving_bs;

  std::size_t size() const noexcept { return positions.size(); }
};

/// sqrt(n_bs) x sqrt(n_bs) grid with one BS at the centre of each cell,
/// row-major. Throws ConfigurationError for a non-square count.
Topology build_grid(std::size_t n_bs, double area_side);

/// Lowest-path-loss BS for a position; ties go to the lowest index.
std::size_t strongest_bs(const Topology& topology, const Point& position);

/// Drops k UEs uniformly over the area, each associated with its strongest
/// BS. A UE whose strongest BS is already taken is redrawn until it lands on
/// a free one, so at most one UE is served per BS.
UePlacement drop_ues(const Topology& topology, std::size_t k, RandomStream& rng);

}  // namespace dtdd
