// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dtdd/channel.hpp"
#include "dtdd/metrics.hpp"
#include "dtdd/propagation.hpp"
#include "dtdd/snapshot.hpp"

namespace dtdd {

/// Uncoordinated operation: downlink BSs and uplink UEs at full power.
SnapshotMetrics evaluate_baseline(const Snapshot& snapshot,
                                  const ChannelRealization& channel,
                                  const RadioParams& radio);

/// Uplink BSs included in the JT-DS precoder: the serving BSs of the
/// V_ul(delta) uplink UEs with the lowest baseline SINR. `baseline` holds the
/// per-UE baseline SINRs, downlink first. Empty without downlink traffic.
std::vector<std::size_t> jt_ds_selection(const Snapshot& snapshot,
                                         std::span<const double> baseline,
                                         std::size_t delta);

/// Zero-forcing joint transmission over all downlink BSs with the given
/// uplink BSs nulled (empty for plain JT), LP power control, and the JT SINR
/// expressions. A rank-deficient compound channel yields a metrics object
/// with `failed` set and zero rates.
SnapshotMetrics evaluate_joint_transmission(Scheme scheme, const Snapshot& snapshot,
                                            const ChannelRealization& channel,
                                            const RadioParams& radio,
                                            std::vector<std::size_t> selected_ul_bs);

struct SnapshotEvaluation {
  std::optional<SnapshotMetrics> baseline;
  std::optional<SnapshotMetrics> jt;
  std::optional<SnapshotMetrics> jt_ds;

  const std::optional<SnapshotMetrics>& get(Scheme scheme) const;
};

/// Runs the requested schemes on one shared snapshot and channel.
SnapshotEvaluation evaluate_snapshot(std::span<const Scheme> schemes,
                                     std::size_t delta, const Snapshot& snapshot,
                                     const ChannelRealization& channel,
                                     const RadioParams& radio);

/// FNV-1a digest of UE positions, directions and every channel coefficient.
std::uint64_t fingerprint(const Snapshot& snapshot, const ChannelRealization& channel);

}  // namespace dtdd
