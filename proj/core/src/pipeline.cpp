// SPDX-License-Identifier: Apache-2.0
#include "dtdd/pipeline.hpp"

#include <algorithm>
#include <cstring>

#include "dtdd/errors.hpp"
#include "dtdd/power.hpp"
#include "dtdd/precoding.hpp"

namespace dtdd {
namespace {

class Fnv1a {
 public:
  void add(const void* data, std::size_t bytes) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < bytes; ++i) {
      state_ = (state_ ^ p[i]) * 0x100000001b3ULL;
    }
  }
  void add(const CMatrix& m) {
    const Eigen::Index dims[2] = {m.rows(), m.cols()};
    add(dims, sizeof(dims));
    add(m.data(), static_cast<std::size_t>(m.size()) * sizeof(CMatrix::Scalar));
  }
  std::uint64_t value() const { return state_; }

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

SnapshotMetrics failed_metrics(Scheme scheme, std::size_t k, std::size_t v_ul_used) {
  SnapshotMetrics metrics;
  metrics.scheme = scheme;
  metrics.per_ue_sinr.assign(k, 0.0);
  metrics.per_ue_rate.assign(k, 0.0);
  metrics.v_ul_used = v_ul_used;
  metrics.failed = true;
  return metrics;
}

}  // namespace

SnapshotMetrics evaluate_baseline(const Snapshot& snapshot,
                                  const ChannelRealization& channel,
                                  const RadioParams& radio) {
  const std::size_t n_bs = snapshot.n_dl() + snapshot.n_ul();
  const double noise = noise_power(radio.bandwidth, radio.noise_figure);
  return metrics_from_sinrs(Scheme::baseline, snapshot.k_dl(),
                            baseline_sinrs(snapshot, channel,
                                           baseline_powers(snapshot, n_bs, radio), noise),
                            radio.bandwidth, 0);
}

std::vector<std::size_t> jt_ds_selection(const Snapshot& snapshot,
                                         std::span<const double> baseline,
                                         std::size_t delta) {
  if (snapshot.k_dl() == 0) {
    return {};
  }
  const std::size_t count =
      v_ul(delta, v_ul_max(snapshot.n_ul(), snapshot.n_dl(), snapshot.k_dl()));
  std::vector<UplinkCandidate> candidates;
  candidates.reserve(snapshot.k_ul());
  for (std::size_t j = 0; j < snapshot.k_ul(); ++j) {
    candidates.push_back({snapshot.ul_ues[j], baseline[snapshot.k_dl() + j],
                          snapshot.n_ul_set[j]});
  }
  return select_uplink_bs(candidates, count);
}

SnapshotMetrics evaluate_joint_transmission(Scheme scheme, const Snapshot& snapshot,
                                            const ChannelRealization& channel,
                                            const RadioParams& radio,
                                            std::vector<std::size_t> selected_ul_bs) {
  const double noise = noise_power(radio.bandwidth, radio.noise_figure);
  const std::size_t k_dl = snapshot.k_dl();
  const std::size_t v_ul_used = selected_ul_bs.size();

  // Without downlink traffic nothing is precoded and the downlink BSs stay
  // silent; the network runs in plain uplink mode.
  CMatrix w(static_cast<Eigen::Index>(snapshot.n_dl()), 0);
  std::vector<double> p;
  if (k_dl > 0) {
    try {
      PrecoderResult precoder = build_precoder(channel, std::move(selected_ul_bs));
      p = solve_power_lp(precoder.w, radio.p_b_max, k_dl).p;
      w = std::move(precoder.w);
    } catch (const SingularChannelError&) {
      return failed_metrics(scheme, snapshot.k(), v_ul_used);
    }
  }

  std::vector<double> sinrs;
  sinrs.reserve(snapshot.k());
  for (std::size_t i = 0; i < k_dl; ++i) {
    sinrs.push_back(sinr_downlink_jt(i, channel, w, p, radio.p_u_max, noise));
  }
  for (std::size_t j = 0; j < snapshot.k_ul(); ++j) {
    sinrs.push_back(sinr_uplink_jt(j, channel, w, p, radio.p_u_max, noise));
  }
  return metrics_from_sinrs(scheme, k_dl, std::move(sinrs), radio.bandwidth, v_ul_used);
}

const std::optional<SnapshotMetrics>& SnapshotEvaluation::get(Scheme scheme) const {
  switch (scheme) {
    case Scheme::baseline:
      return baseline;
    case Scheme::jt:
      return jt;
    case Scheme::jt_ds:
      return jt_ds;
  }
  return baseline;
}

SnapshotEvaluation evaluate_snapshot(std::span<const Scheme> schemes,
                                     std::size_t delta, const Snapshot& snapshot,
                                     const ChannelRealization& channel,
                                     const RadioParams& radio) {
  const auto wants = [&](Scheme s) {
    return std::find(schemes.begin(), schemes.end(), s) != schemes.end();
  };

  SnapshotEvaluation evaluation;
  // JT-DS selects its uplink BSs from the baseline SINRs, so the baseline is
  // evaluated whenever either is requested.
  if (wants(Scheme::baseline) || wants(Scheme::jt_ds)) {
    SnapshotMetrics baseline = evaluate_baseline(snapshot, channel, radio);
    if (wants(Scheme::jt_ds)) {
      evaluation.jt_ds = evaluate_joint_transmission(
          Scheme::jt_ds, snapshot, channel, radio,
          jt_ds_selection(snapshot, baseline.per_ue_sinr, delta));
    }
    if (wants(Scheme::baseline)) {
      evaluation.baseline = std::move(baseline);
    }
  }
  if (wants(Scheme::jt)) {
    evaluation.jt = evaluate_joint_transmission(Scheme::jt, snapshot, channel, radio, {});
  }
  return evaluation;
}

std::uint64_t fingerprint(const Snapshot& snapshot, const ChannelRealization& channel) {
  Fnv1a hash;
  for (const auto& position : snapshot.ue_placement.positions) {
    hash.add(&position.x, sizeof(double));
    hash.add(&position.y, sizeof(double));
  }
  for (const auto direction : snapshot.directions) {
    const auto tag = static_cast<unsigned char>(direction);
    hash.add(&tag, 1);
  }
  hash.add(channel.h_dl);
  hash.add(channel.f_bs);
  hash.add(channel.g_ue);
  hash.add(channel.h_ul);
  return hash.value();
}

}  // namespace dtdd
