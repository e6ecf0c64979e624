// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dtdd/channel.hpp"
#include "dtdd/propagation.hpp"
#include "dtdd/snapshot.hpp"

namespace dtdd {

/// Per-stream downlink powers p_1..p_{K_dl+V_ul} in watts. Dummy streams
/// (positions >= K_dl) are always zero.
struct PowerAllocation {
  std::vector<double> p;
};

/// |w_nk|^2 for the first k_dl columns: row n is the load that each data
/// stream puts on antenna n per watt.
Eigen::MatrixXd antenna_load(const CMatrix& w, std::size_t k_dl);

/// Largest per-antenna transmit power sum_k |w_nk|^2 p_k.
double max_antenna_power(const CMatrix& w, std::span<const double> p);

/// sum_{k < k_dl} p_k
double linear_objective(std::span<const double> p, std::size_t k_dl);

/// sum_{k < k_dl} log2(1 + p_k)
double log_objective(std::span<const double> p, std::size_t k_dl);

/// Downlink power control used by JT and JT-DS: maximize sum_{k<K_dl} p_k
/// subject to the per-antenna constraints sum_k |w_nk|^2 p_k <= p_b and
/// p >= 0, with dummy streams pinned at zero. Solved exactly by the dense
/// simplex. Throws PreconditionError if k_dl is zero or exceeds the column
/// count, or a column of w is not unit norm.
PowerAllocation solve_power_lp(const CMatrix& w, double p_b, std::size_t k_dl);

/// Reference optimum of the same LP by enumerating every basic solution
/// (all k_dl-subsets of the active constraints). Limited to k_dl <= 3 and
/// N_dl <= 6; larger instances throw PreconditionError.
PowerAllocation power_lp_oracle(const CMatrix& w, double p_b, std::size_t k_dl);

/// Maximizer of sum log2(1 + p_k) over the same feasible set, via a
/// log-barrier Newton method. Same dimension limits as power_lp_oracle.
PowerAllocation log_objective_oracle(const CMatrix& w, double p_b, std::size_t k_dl);

/// Uncoordinated transmit powers: every BS serving a downlink UE at P_b,
/// every uplink UE at P_u, everything else silent.
struct BaselinePowers {
  std::vector<double> bs_power_w;  ///< indexed by BS
  std::vector<double> ue_power_w;  ///< indexed by dropped-UE index
};

BaselinePowers baseline_powers(const Snapshot& snapshot, std::size_t n_bs,
                               const RadioParams& params);

}  // namespace dtdd
