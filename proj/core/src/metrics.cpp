// SPDX-License-Identifier: Apache-2.0
#include "dtdd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "dtdd/errors.hpp"

namespace dtdd {
namespace {

double mean(std::span<const double> values) {
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

std::size_t column_of(const std::vector<std::size_t>& ascending_bs, std::size_t bs) {
  const auto it = std::lower_bound(ascending_bs.begin(), ascending_bs.end(), bs);
  if (it == ascending_bs.end() || *it != bs) {
    throw PreconditionError("BS is not part of the downlink set");
  }
  return static_cast<std::size_t>(it - ascending_bs.begin());
}

}  // namespace

std::string_view to_string(Scheme scheme) noexcept {
  switch (scheme) {
    case Scheme::baseline:
      return "baseline";
    case Scheme::jt:
      return "jt";
    case Scheme::jt_ds:
      return "jt-ds";
  }
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) noexcept {
  if (name == "baseline") return Scheme::baseline;
  if (name == "jt") return Scheme::jt;
  if (name == "jt-ds" || name == "jt_ds") return Scheme::jt_ds;
  return std::nullopt;
}

double rate_bps(double sinr, double bandwidth_hz) noexcept {
  return bandwidth_hz * std::log2(1.0 + sinr);
}

double sinr_downlink_jt(std::size_t i, const ChannelRealization& channel,
                        const CMatrix& w, std::span<const double> p, double p_u,
                        double noise) {
  const auto row = static_cast<Eigen::Index>(i);
  const Eigen::RowVectorXcd received = channel.h_dl.row(row) * w;
  double leakage = 0.0;
  for (Eigen::Index k = 0; k < received.size(); ++k) {
    if (k != row) {
      leakage += std::norm(received(k)) * p[static_cast<std::size_t>(k)];
    }
  }
  const double ue_interference = channel.g_ue.row(row).cwiseAbs2().sum() * p_u;
  return std::norm(received(row)) * p[i] / (noise + leakage + ue_interference);
}

double sinr_uplink_jt(std::size_t j, const ChannelRealization& channel,
                      const CMatrix& w, std::span<const double> p, double p_u,
                      double noise) {
  const auto col = static_cast<Eigen::Index>(j);
  const double own = std::norm(channel.h_ul(col, col)) * p_u;
  double ue_interference = 0.0;
  for (Eigen::Index l = 0; l < channel.h_ul.rows(); ++l) {
    if (l != col) {
      ue_interference += std::norm(channel.h_ul(l, col)) * p_u;
    }
  }
  double bs_interference = 0.0;
  if (w.cols() > 0) {
    const Eigen::RowVectorXcd received = channel.f_bs.row(col) * w;
    for (Eigen::Index k = 0; k < received.size(); ++k) {
      bs_interference += std::norm(received(k)) * p[static_cast<std::size_t>(k)];
    }
  }
  return own / (noise + ue_interference + bs_interference);
}

std::vector<double> baseline_sinrs(const Snapshot& snapshot,
                                   const ChannelRealization& channel,
                                   const BaselinePowers& powers, double noise) {
  std::vector<double> sinrs;
  sinrs.reserve(snapshot.k());

  for (std::size_t i = 0; i < snapshot.k_dl(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    const std::size_t serving = snapshot.ue_placement.serving_bs[snapshot.dl_ues[i]];
    const std::size_t own_col = column_of(channel.dl_bs, serving);
    double signal = 0.0;
    double interference = 0.0;
    for (std::size_t c = 0; c < channel.dl_bs.size(); ++c) {
      const double rx = std::norm(channel.h_dl(row, static_cast<Eigen::Index>(c))) *
                        powers.bs_power_w[channel.dl_bs[c]];
      (c == own_col ? signal : interference) += rx;
    }
    for (std::size_t l = 0; l < snapshot.k_ul(); ++l) {
      interference += std::norm(channel.g_ue(row, static_cast<Eigen::Index>(l))) *
                      powers.ue_power_w[snapshot.ul_ues[l]];
    }
    sinrs.push_back(signal / (noise + interference));
  }

  for (std::size_t j = 0; j < snapshot.k_ul(); ++j) {
    const auto col = static_cast<Eigen::Index>(j);
    double signal = 0.0;
    double interference = 0.0;
    for (std::size_t l = 0; l < snapshot.k_ul(); ++l) {
      const double rx = std::norm(channel.h_ul(static_cast<Eigen::Index>(l), col)) *
                        powers.ue_power_w[snapshot.ul_ues[l]];
      (l == j ? signal : interference) += rx;
    }
    for (std::size_t c = 0; c < channel.dl_bs.size(); ++c) {
      interference += std::norm(channel.f_bs(col, static_cast<Eigen::Index>(c))) *
                      powers.bs_power_w[channel.dl_bs[c]];
    }
    sinrs.push_back(signal / (noise + interference));
  }
  return sinrs;
}

SnapshotMetrics metrics_from_sinrs(Scheme scheme, std::size_t k_dl,
                                   std::vector<double> sinrs, double bandwidth_hz,
                                   std::size_t v_ul_used) {
  SnapshotMetrics metrics;
  metrics.scheme = scheme;
  metrics.v_ul_used = v_ul_used;
  metrics.per_ue_rate.reserve(sinrs.size());
  for (std::size_t k = 0; k < sinrs.size(); ++k) {
    const double rate = rate_bps(sinrs[k], bandwidth_hz);
    metrics.per_ue_rate.push_back(rate);
    (k < k_dl ? metrics.dl_sum_rate : metrics.ul_sum_rate) += rate;
  }
  metrics.sum_rate = metrics.dl_sum_rate + metrics.ul_sum_rate;
  metrics.per_ue_sinr = std::move(sinrs);
  return metrics;
}

double percentile(std::vector<double> values, double fraction) {
  if (values.empty()) {
    throw PreconditionError("percentile of an empty sample");
  }
  std::sort(values.begin(), values.end());
  const double position = fraction * static_cast<double>(values.size() - 1);
  const auto lower = static_cast<std::size_t>(std::floor(position));
  const std::size_t upper = std::min(lower + 1, values.size() - 1);
  const double weight = position - static_cast<double>(lower);
  return values[lower] + weight * (values[upper] - values[lower]);
}

SweepPointSummary summarize(std::span<const double> sum_rates,
                            std::span<const double> dl_sum_rates,
                            std::span<const double> ul_sum_rates, std::size_t k) {
  if (sum_rates.empty()) {
    throw PreconditionError("no snapshots to aggregate");
  }
  if (k == 0) {
    throw PreconditionError("traffic load K must be positive");
  }
  SweepPointSummary summary;
  summary.samples = sum_rates.size();
  summary.mean_sum_rate = mean(sum_rates);
  summary.mean_dl_sum_rate = mean(dl_sum_rates);
  summary.mean_ul_sum_rate = mean(ul_sum_rates);
  summary.p5_sum_rate_per_ue =
      percentile({sum_rates.begin(), sum_rates.end()}, 0.05) / static_cast<double>(k);
  return summary;
}

SweepPointSummary aggregate(std::span<const SnapshotMetrics> results, std::size_t k) {
  std::vector<double> total, dl, ul;
  for (const auto& metrics : results) {
    if (!metrics.failed) {
      total.push_back(metrics.sum_rate);
      dl.push_back(metrics.dl_sum_rate);
      ul.push_back(metrics.ul_sum_rate);
    }
  }
  return summarize(total, dl, ul, k);
}

}  // namespace dtdd
