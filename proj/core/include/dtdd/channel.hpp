// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "dtdd/propagation.hpp"
#include "dtdd/random.hpp"
#include "dtdd/snapshot.hpp"
#include "dtdd/topology.hpp"

namespace dtdd {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// All complex gains of one snapshot. Every entry c maps a transmitted
/// sample x to c * x at the receiver, so row i of h_dl is h_i^H and the
/// received downlink signal is h_dl.row(i) * x.
///
///  h_dl : K_dl x N_dl   downlink BS  -> downlink UE
///  f_bs : N_ul x N_dl   downlink BS  -> uplink BS      (rows follow ul_bs)
///  g_ue : K_dl x K_ul   uplink UE    -> downlink UE
///  h_ul : K_ul x N_ul   uplink UE    -> uplink BS      (columns follow ul_bs)
struct ChannelRealization {
  CMatrix h_dl;
  CMatrix f_bs;
  CMatrix g_ue;
  CMatrix h_ul;
  std::vector<std::size_t> dl_bs;  ///< BS index of each h_dl / f_bs column
  std::vector<std::size_t> ul_bs;  ///< BS index of each f_bs row / h_ul column

  /// Row of f_bs for uplink BS `bs`; throws PreconditionError if `bs` is not
  /// an uplink BS.
  std::size_t ul_row_of(std::size_t bs) const;
};

/// Draws one independent Rayleigh fading coefficient per physical
/// (transmitter, receiver) pair: UE-BS, BS-BS (ordered) and UE-UE (ordered).
/// Draws are made for every pair in a fixed order regardless of traffic
/// directions and then sliced into the four matrices.
ChannelRealization build_channel_realization(const Snapshot& snapshot,
                                             const Topology& topology,
                                             const RadioParams& params,
                                             RandomStream& rng);

}  // namespace dtdd
