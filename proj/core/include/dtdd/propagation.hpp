// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

#include "dtdd/random.hpp"

namespace dtdd {

/// Radio parameters shared by every link in the network.
struct RadioParams {
  double carrier_freq = 2.0;  ///< GHz
  double bandwidth = 10e6;     ///< Hz
  double noise_figure = 9.0;   ///< dB
  double p_b_max = 0.1;        ///< W, per BS antenna
  double p_u_max = 0.1;        ///< W, per UE

  /// Throws ConfigurationError unless every field is strictly positive.
  void validate() const;
};

/// Validity range of the indoor A1 LOS model; distances are clamped to it.
inline constexpr double kMinModelDistance = 3.0;
inline constexpr double kMaxModelDistance = 100.0;

/// Thermal noise density at room temperature, dBm/Hz.
inline constexpr double kThermalNoiseDbmPerHz = -174.0;

double clamp_distance(double distance_m) noexcept;

/// Average path loss of WINNER II A1 (indoor office, LOS):
///   PL = 18.7 log10(d) + 46.8 + 20 log10(f / 5 GHz)
/// with d clamped to [3, 100] m. No wall loss, no shadowing.
double path_loss_db(double distance_m, double freq_ghz) noexcept;

/// Receiver noise power in watts for the given bandwidth and noise figure.
double noise_power(double bandwidth_hz, double noise_figure_db) noexcept;

double db_to_linear(double db) noexcept;

/// One Rayleigh-faded complex gain: sqrt(10^(-PL/10)) * z, z ~ CN(0, 1).
std::complex<double> draw_channel(double path_loss_db, RandomStream& rng);

}  // namespace dtdd
