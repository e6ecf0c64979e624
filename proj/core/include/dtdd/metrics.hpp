// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dtdd/channel.hpp"
#include "dtdd/power.hpp"
#include "dtdd/snapshot.hpp"

namespace dtdd {

enum class Scheme { baseline, jt, jt_ds };

inline constexpr Scheme kAllSchemes[] = {Scheme::baseline, Scheme::jt, Scheme::jt_ds};

std::string_view to_string(Scheme scheme) noexcept;

/// Accepts "baseline", "jt", "jt-ds" and "jt_ds".
std::optional<Scheme> parse_scheme(std::string_view name) noexcept;

/// Shannon rate B log2(1 + sinr) in bit/s.
double rate_bps(double sinr, double bandwidth_hz) noexcept;

/// Downlink SINR of downlink UE i under joint transmission, with the full
/// intra-precoder leakage and UE-to-UE interference from every uplink UE:
///
///   |h_i^H w_i|^2 p_i / (noise + sum_{k!=i} |h_i^H w_k|^2 p_k
///                              + sum_l |g_il|^2 p_u)
double sinr_downlink_jt(std::size_t i, const ChannelRealization& channel,
                        const CMatrix& w, std::span<const double> p, double p_u,
                        double noise);

/// Uplink SINR of uplink UE j (position within the uplink UEs) under joint
/// transmission:
///
///   |h_jb(j)|^2 p_u / (noise + sum_{l!=j} |h_lb(j)|^2 p_u
///                            + sum_k |f_b(j)^H w_k|^2 p_k)
double sinr_uplink_jt(std::size_t j, const ChannelRealization& channel,
                      const CMatrix& w, std::span<const double> p, double p_u,
                      double noise);

/// Per-UE SINRs (downlink UEs first) when every downlink BS and uplink UE
/// transmits independently at the given powers.
std::vector<double> baseline_sinrs(const Snapshot& snapshot,
                                   const ChannelRealization& channel,
                                   const BaselinePowers& powers, double noise);

struct SnapshotMetrics {
  Scheme scheme = Scheme::baseline;
  std::vector<double> per_ue_sinr;  ///< linear, downlink UEs first
  std::vector<double> per_ue_rate;  ///< bit/s
  double dl_sum_rate = 0.0;
  double ul_sum_rate = 0.0;
  double sum_rate = 0.0;
  std::size_t v_ul_used = 0;
  bool failed = false;

  friend bool operator==(const SnapshotMetrics&, const SnapshotMetrics&) = default;
};

/// Rates and sums from per-UE SINRs ordered downlink first.
SnapshotMetrics metrics_from_sinrs(Scheme scheme, std::size_t k_dl,
                                   std::vector<double> sinrs, double bandwidth_hz,
                                   std::size_t v_ul_used);

struct SweepPointSummary {
  std::size_t samples = 0;
  double mean_sum_rate = 0.0;
  double mean_dl_sum_rate = 0.0;
  double mean_ul_sum_rate = 0.0;
  double p5_sum_rate_per_ue = 0.0;  ///< 5th percentile of sum rate / K
};

/// Linear-interpolation percentile on the sorted sample: position
/// h = (n - 1) * fraction, value x[floor h] + (h - floor h)(x[floor h + 1] - x[floor h]).
double percentile(std::vector<double> values, double fraction);

SweepPointSummary summarize(std::span<const double> sum_rates,
                            std::span<const double> dl_sum_rates,
                            std::span<const double> ul_sum_rates, std::size_t k);

/// Summary over the non-failed snapshots of one sweep point. Throws
/// PreconditionError if nothing is left to aggregate or k is zero.
SweepPointSummary aggregate(std::span<const SnapshotMetrics> results, std::size_t k);

}  // namespace dtdd
