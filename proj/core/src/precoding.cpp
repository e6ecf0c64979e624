// SPDX-License-Identifier: Apache-2.0
#include "dtdd/precoding.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dtdd/errors.hpp"

namespace dtdd {

std::size_t v_ul_max(std::size_t n_ul, std::size_t n_dl, std::size_t k_dl) {
  if (k_dl > n_dl) {
    throw PreconditionError("more downlink UEs than downlink antennas");
  }
  return std::min(n_ul, n_dl - k_dl);
}

std::size_t v_ul(std::size_t delta, std::size_t v_ul_max) {
  return delta >= v_ul_max ? 0 : v_ul_max - delta;
}

std::vector<std::size_t> select_uplink_bs(std::span<const UplinkCandidate> candidates,
                                          std::size_t v_ul) {
  if (v_ul > candidates.size()) {
    throw PreconditionError("cannot select more uplink BSs than uplink UEs");
  }
  std::vector<UplinkCandidate> sorted(candidates.begin(), candidates.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.sinr != b.sinr ? a.sinr < b.sinr : a.ue < b.ue;
  });
  std::vector<std::size_t> selected;
  selected.reserve(v_ul);
  for (std::size_t j = 0; j < v_ul; ++j) {
    selected.push_back(sorted[j].serving_bs);
  }
  return selected;
}

CMatrix assemble_m(const ChannelRealization& channel,
                   std::span<const std::size_t> selected_ul_bs) {
  const auto k_dl = channel.h_dl.rows();
  const auto n_dl = channel.h_dl.cols();
  const auto rows = k_dl + static_cast<Eigen::Index>(selected_ul_bs.size());
  if (k_dl < 1) {
    throw PreconditionError("precoding requires at least one downlink UE");
  }
  if (rows > n_dl) {
    throw PreconditionError("K_dl + V_ul = " + std::to_string(rows) +
                            " exceeds N_dl = " + std::to_string(n_dl));
  }
  CMatrix m(rows, n_dl);
  m.topRows(k_dl) = channel.h_dl;
  for (std::size_t v = 0; v < selected_ul_bs.size(); ++v) {
    const auto row = static_cast<Eigen::Index>(channel.ul_row_of(selected_ul_bs[v]));
    m.row(k_dl + static_cast<Eigen::Index>(v)) = channel.f_bs.row(row);
  }
  return m;
}

ZeroForcingPrecoder zf_precoder(const CMatrix& m) {
  const auto rows = m.rows();
  const auto cols = m.cols();
  if (rows < 1 || rows > cols) {
    throw PreconditionError("zero forcing needs 1 <= rows(M) <= cols(M)");
  }

  const Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& sv = svd.singularValues();
  const double largest = sv(0);
  const double smallest = sv(rows - 1);
  if (!(largest > 0.0) || smallest <= kRankTolerance * largest) {
    throw SingularChannelError("compound channel matrix is rank deficient");
  }

  const Eigen::HouseholderQR<CMatrix> qr(m.adjoint());
  const CMatrix q = qr.householderQ() * CMatrix::Identity(cols, rows);
  const CMatrix r = qr.matrixQR().topLeftCorner(rows, rows).triangularView<Eigen::Upper>();
  const CMatrix r_inv_adjoint =
      r.adjoint().triangularView<Eigen::Lower>().solve(CMatrix::Identity(rows, rows));

  ZeroForcingPrecoder result;
  result.w = q * r_inv_adjoint;
  result.condition_number = largest / smallest;
  result.effective_gains.resize(static_cast<std::size_t>(rows));
  for (Eigen::Index k = 0; k < rows; ++k) {
    const double norm = result.w.col(k).norm();
    result.w.col(k) /= norm;
    result.effective_gains[static_cast<std::size_t>(k)] = 1.0 / norm;
  }
  return result;
}

PrecoderResult build_precoder(const ChannelRealization& channel,
                              std::vector<std::size_t> selected_ul_bs) {
  ZeroForcingPrecoder zf = zf_precoder(assemble_m(channel, selected_ul_bs));
  PrecoderResult result;
  result.w = std::move(zf.w);
  result.v_ul = selected_ul_bs.size();
  result.selected_ul_bs = std::move(selected_ul_bs);
  result.effective_gains = std::move(zf.effective_gains);
  result.condition_number = zf.condition_number;
  return result;
}

}  // namespace dtdd
