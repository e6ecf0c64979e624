// SPDX-License-Identifier: Apache-2.0
#include "dtdd/propagation.hpp"

#include <algorithm>
#include <cmath>

#include "dtdd/errors.hpp"

namespace dtdd {

void RadioParams::validate() const {
  if (!(carrier_freq > 0.0) || !(bandwidth > 0.0) ||
      !(noise_figure > 0.0) || !(p_b_max > 0.0) || !(p_u_max > 0.0)) {
    throw ConfigurationError("radio parameters must all be strictly positive");
  }
}

double clamp_distance(double distance_m) noexcept {
  return std::clamp(distance_m, kMinModelDistance, kMaxModelDistance);
}

double path_loss_db(double distance_m, double freq_ghz) noexcept {
  const double d = clamp_distance(distance_m);
  return 18.7 * std::log10(d) + 46.8 + 20.0 * std::log10(freq_ghz / 5.0);
}

double noise_power(double bandwidth_hz, double noise_figure_db) noexcept {
  const double dbm =
      kThermalNoiseDbmPerHz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
  return db_to_linear(dbm - 30.0);
}

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

std::complex<double> draw_channel(double path_loss_db, RandomStream& rng) {
  return std::sqrt(db_to_linear(-path_loss_db)) * rng.complex_gaussian();
}

}  // namespace dtdd
