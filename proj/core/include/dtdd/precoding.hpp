// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dtdd/channel.hpp"

namespace dtdd {

/// Relative smallest-singular-value threshold below which the compound
/// channel is treated as rank deficient.
inline constexpr double kRankTolerance = 1e-12;

/// Largest number of uplink BSs that fit in the precoder next to the
/// downlink UEs: min(n_ul, n_dl - k_dl).
std::size_t v_ul_max(std::size_t n_ul, std::size_t n_dl, std::size_t k_dl);

/// Number of participating uplink BSs for design parameter delta:
/// max(0, v_ul_max - delta).
std::size_t v_ul(std::size_t delta, std::size_t v_ul_max);

struct UplinkCandidate {
  std::size_t ue = 0;  ///< UE index (tie-break key)
  double sinr = 0.0;   ///< baseline SINR, linear
  std::size_t serving_bs = 0;
};

/// Serving BSs of the `v_ul` uplink UEs with the lowest baseline SINR,
/// ordered by ascending SINR then ascending UE index.
std::vector<std::size_t> select_uplink_bs(std::span<const UplinkCandidate> candidates,
                                          std::size_t v_ul);

/// Compound channel M: the K_dl rows h_i^H followed by f_b^H for each
/// selected uplink BS, in selection order. Requires K_dl >= 1 and
/// K_dl + |selected| <= N_dl.
CMatrix assemble_m(const ChannelRealization& channel,
                   std::span<const std::size_t> selected_ul_bs);

struct ZeroForcingPrecoder {
  CMatrix w;                           ///< N_dl x rows(M), unit-norm columns
  std::vector<double> effective_gains; ///< (M W)_kk = 1 / ||unnormalized w_k||
  double condition_number = 0.0;       ///< 2-norm condition number of M
};

/// Right pseudo-inverse W = M^H (M M^H)^{-1}, computed from a Householder QR
/// of M^H as W = Q R^{-H}, then column-normalized. Throws
/// SingularChannelError if M is numerically rank deficient.
ZeroForcingPrecoder zf_precoder(const CMatrix& m);

struct PrecoderResult {
  CMatrix w;
  std::vector<std::size_t> selected_ul_bs;
  std::size_t v_ul = 0;
  std::vector<double> effective_gains;
  double condition_number = 0.0;
};

/// assemble_m followed by zf_precoder.
PrecoderResult build_precoder(const ChannelRealization& channel,
                              std::vector<std::size_t> selected_ul_bs);

}  // namespace dtdd
