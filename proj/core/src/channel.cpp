// SPDX-License-Identifier: Apache-2.0
#include "dtdd/channel.hpp"

#include <algorithm>
#include <string>

#include "dtdd/errors.hpp"

namespace dtdd {

std::size_t ChannelRealization::ul_row_of(std::size_t bs) const {
  const auto it = std::find(ul_bs.begin(), ul_bs.end(), bs);
  if (it == ul_bs.end()) {
    throw PreconditionError("BS " + std::to_string(bs) + " is not an uplink BS");
  }
  return static_cast<std::size_t>(it - ul_bs.begin());
}

ChannelRealization build_channel_realization(const Snapshot& snapshot,
                                             const Topology& topology,
                                             const RadioParams& params,
                                             RandomStream& rng) {
  const auto& ues = snapshot.ue_placement.positions;
  const auto& bss = topology.bs_positions;
  const std::size_t k = ues.size();
  const std::size_t n = bss.size();
  const double freq = params.carrier_freq;

  // ue_bs(u, b): link between UE u and BS b in whichever direction the UE uses.
  CMatrix ue_bs(k, n);
  for (std::size_t u = 0; u < k; ++u) {
    for (std::size_t b = 0; b < n; ++b) {
      ue_bs(u, b) = draw_channel(path_loss_db(distance(ues[u], bss[b]), freq), rng);
    }
  }
  // bs_bs(rx, tx) and ue_ue(rx, tx); the diagonal is never used.
  CMatrix bs_bs = CMatrix::Zero(n, n);
  for (std::size_t rx = 0; rx < n; ++rx) {
    for (std::size_t tx = 0; tx < n; ++tx) {
      if (rx != tx) {
        bs_bs(rx, tx) = draw_channel(path_loss_db(distance(bss[rx], bss[tx]), freq), rng);
      }
    }
  }
  CMatrix ue_ue = CMatrix::Zero(k, k);
  for (std::size_t rx = 0; rx < k; ++rx) {
    for (std::size_t tx = 0; tx < k; ++tx) {
      if (rx != tx) {
        ue_ue(rx, tx) = draw_channel(path_loss_db(distance(ues[rx], ues[tx]), freq), rng);
      }
    }
  }

  ChannelRealization channel;
  channel.dl_bs = snapshot.n_dl_set;
  channel.ul_bs = snapshot.n_ul_set;
  const auto& dl_ues = snapshot.dl_ues;
  const auto& ul_ues = snapshot.ul_ues;
  const auto& dl_bs = channel.dl_bs;
  const auto& ul_bs = channel.ul_bs;

  channel.h_dl.resize(static_cast<Eigen::Index>(dl_ues.size()),
                      static_cast<Eigen::Index>(dl_bs.size()));
  for (std::size_t i = 0; i < dl_ues.size(); ++i) {
    for (std::size_t c = 0; c < dl_bs.size(); ++c) {
      channel.h_dl(i, c) = ue_bs(dl_ues[i], dl_bs[c]);
    }
  }
  channel.f_bs.resize(static_cast<Eigen::Index>(ul_bs.size()),
                      static_cast<Eigen::Index>(dl_bs.size()));
  for (std::size_t j = 0; j < ul_bs.size(); ++j) {
    for (std::size_t c = 0; c < dl_bs.size(); ++c) {
      channel.f_bs(j, c) = bs_bs(ul_bs[j], dl_bs[c]);
    }
  }
  channel.g_ue.resize(static_cast<Eigen::Index>(dl_ues.size()),
                      static_cast<Eigen::Index>(ul_ues.size()));
  for (std::size_t i = 0; i < dl_ues.size(); ++i) {
    for (std::size_t l = 0; l < ul_ues.size(); ++l) {
      channel.g_ue(i, l) = ue_ue(dl_ues[i], ul_ues[l]);
    }
  }
  channel.h_ul.resize(static_cast<Eigen::Index>(ul_ues.size()),
                      static_cast<Eigen::Index>(ul_bs.size()));
  for (std::size_t l = 0; l < ul_ues.size(); ++l) {
    for (std::size_t j = 0; j < ul_bs.size(); ++j) {
      channel.h_ul(l, j) = ue_bs(ul_ues[l], ul_bs[j]);
    }
  }
  return channel;
}

}  // namespace dtdd
