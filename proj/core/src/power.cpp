// SPDX-License-Identifier: Apache-2.0
#include "dtdd/power.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dtdd/errors.hpp"
#include "dtdd/simplex.hpp"

namespace dtdd {
namespace {

constexpr double kUnitNormTolerance = 1e-9;
constexpr std::size_t kOracleMaxStreams = 3;
constexpr std::size_t kOracleMaxAntennas = 6;

void check_precoder(const CMatrix& w, double p_b, std::size_t k_dl) {
  if (k_dl == 0 || k_dl > static_cast<std::size_t>(w.cols())) {
    throw PreconditionError("power control needs 1 <= K_dl <= columns(W)");
  }
  if (!(p_b > 0.0)) {
    throw PreconditionError("BS power limit must be positive");
  }
  for (Eigen::Index k = 0; k < w.cols(); ++k) {
    if (std::abs(w.col(k).norm() - 1.0) > kUnitNormTolerance) {
      throw PreconditionError("precoder column " + std::to_string(k) +
                              " is not unit norm");
    }
  }
}

void check_oracle_size(const CMatrix& w, std::size_t k_dl) {
  if (k_dl > kOracleMaxStreams || static_cast<std::size_t>(w.rows()) > kOracleMaxAntennas) {
    throw PreconditionError("oracle is limited to K_dl <= 3 and N_dl <= 6");
  }
}

PowerAllocation pad_with_dummies(const Eigen::VectorXd& data, const CMatrix& w) {
  PowerAllocation allocation;
  allocation.p.assign(static_cast<std::size_t>(w.cols()), 0.0);
  for (Eigen::Index k = 0; k < data.size(); ++k) {
    allocation.p[static_cast<std::size_t>(k)] = std::max(0.0, data(k));
  }
  return allocation;
}

// Strictly interior start: every antenna at half its limit or less.
Eigen::VectorXd interior_point(const Eigen::MatrixXd& load, double p_b) {
  const double heaviest = load.rowwise().sum().maxCoeff();
  return Eigen::VectorXd::Constant(load.cols(), 0.5 * p_b / heaviest);
}

}  // namespace

Eigen::MatrixXd antenna_load(const CMatrix& w, std::size_t k_dl) {
  return w.leftCols(static_cast<Eigen::Index>(k_dl)).cwiseAbs2();
}

double max_antenna_power(const CMatrix& w, std::span<const double> p) {
  double worst = 0.0;
  for (Eigen::Index n = 0; n < w.rows(); ++n) {
    double total = 0.0;
    for (Eigen::Index k = 0; k < w.cols(); ++k) {
      total += std::norm(w(n, k)) * p[static_cast<std::size_t>(k)];
    }
    worst = std::max(worst, total);
  }
  return worst;
}

double linear_objective(std::span<const double> p, std::size_t k_dl) {
  double total = 0.0;
  for (std::size_t k = 0; k < k_dl; ++k) {
    total += p[k];
  }
  return total;
}

double log_objective(std::span<const double> p, std::size_t k_dl) {
  double total = 0.0;
  for (std::size_t k = 0; k < k_dl; ++k) {
    total += std::log2(1.0 + p[k]);
  }
  return total;
}

PowerAllocation solve_power_lp(const CMatrix& w, double p_b, std::size_t k_dl) {
  check_precoder(w, p_b, k_dl);
  const Eigen::MatrixXd load = antenna_load(w, k_dl);
  const lp::Solution solution =
      lp::maximize(Eigen::VectorXd::Ones(load.cols()), load,
                   Eigen::VectorXd::Constant(load.rows(), p_b));
  return pad_with_dummies(solution.x, w);
}

PowerAllocation power_lp_oracle(const CMatrix& w, double p_b, std::size_t k_dl) {
  check_precoder(w, p_b, k_dl);
  check_oracle_size(w, k_dl);

  const Eigen::MatrixXd load = antenna_load(w, k_dl);
  const auto n_dl = load.rows();
  const auto dims = static_cast<Eigen::Index>(k_dl);

  // Constraint rows: antenna limits, then -p_k <= 0.
  const Eigen::Index total = n_dl + dims;
  Eigen::MatrixXd g(total, dims);
  Eigen::VectorXd h(total);
  g.topRows(n_dl) = load;
  h.head(n_dl).setConstant(p_b);
  g.bottomRows(dims) = -Eigen::MatrixXd::Identity(dims, dims);
  h.tail(dims).setZero();

  const double slack = 1e-12 * p_b;
  double best_value = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd best;

  // Walk every subset of `dims` constraints via a selection mask.
  std::vector<bool> mask(static_cast<std::size_t>(total), false);
  std::fill(mask.begin(), mask.begin() + dims, true);
  do {
    Eigen::MatrixXd sub(dims, dims);
    Eigen::VectorXd rhs(dims);
    Eigen::Index row = 0;
    for (Eigen::Index r = 0; r < total; ++r) {
      if (mask[static_cast<std::size_t>(r)]) {
        sub.row(row) = g.row(r);
        rhs(row) = h(r);
        ++row;
      }
    }
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(sub);
    if (lu.rank() < dims) {
      continue;
    }
    const Eigen::VectorXd vertex = lu.solve(rhs);
    if (((g * vertex - h).array() > slack).any()) {
      continue;
    }
    const double value = vertex.sum();
    if (value > best_value) {
      best_value = value;
      best = vertex;
    }
  } while (std::prev_permutation(mask.begin(), mask.end()));

  if (best.size() == 0) {
    throw SolverError("vertex enumeration found no feasible basic solution");
  }
  return pad_with_dummies(best, w);
}

PowerAllocation log_objective_oracle(const CMatrix& w, double p_b, std::size_t k_dl) {
  check_precoder(w, p_b, k_dl);
  check_oracle_size(w, k_dl);

  const Eigen::MatrixXd load = antenna_load(w, k_dl);
  const auto n_dl = load.rows();
  const auto dims = load.cols();
  const double inv_ln2 = 1.0 / std::numbers::ln2;
  const double constraints = static_cast<double>(n_dl + dims);

  // Minimize  -t * sum log2(1 + p)  - sum log(p_b - load p) - sum log(p).
  auto barrier = [&](const Eigen::VectorXd& p, double t) {
    const Eigen::VectorXd slack = Eigen::VectorXd::Constant(n_dl, p_b) - load * p;
    if ((p.array() <= 0.0).any() || (slack.array() <= 0.0).any()) {
      return std::numeric_limits<double>::infinity();
    }
    return -t * (1.0 + p.array()).log().sum() * inv_ln2 - slack.array().log().sum() -
           p.array().log().sum();
  };

  Eigen::VectorXd p = interior_point(load, p_b);
  for (double t = 1.0; constraints / t > 1e-11; t *= 10.0) {
    for (int step = 0; step < 200; ++step) {
      const Eigen::VectorXd slack = Eigen::VectorXd::Constant(n_dl, p_b) - load * p;
      const Eigen::ArrayXd one_plus = 1.0 + p.array();
      const Eigen::VectorXd inv_slack = slack.cwiseInverse();

      Eigen::VectorXd gradient = (-t * inv_ln2 / one_plus).matrix() +
                                 load.transpose() * inv_slack - p.cwiseInverse();
      Eigen::MatrixXd hessian =
          load.transpose() * inv_slack.cwiseAbs2().asDiagonal() * load;
      hessian.diagonal().array() +=
          t * inv_ln2 / one_plus.square() + p.array().square().inverse();

      const Eigen::VectorXd direction = -hessian.ldlt().solve(gradient);
      const double decrement = -gradient.dot(direction);
      if (decrement < 1e-20) {
        break;
      }
      double alpha = 1.0;
      const double current = barrier(p, t);
      while (barrier(p + alpha * direction, t) > current - 0.25 * alpha * decrement) {
        alpha *= 0.5;
        if (alpha < 1e-16) {
          break;
        }
      }
      if (alpha < 1e-16) {
        break;
      }
      p += alpha * direction;
    }
  }
  return pad_with_dummies(p, w);
}

BaselinePowers baseline_powers(const Snapshot& snapshot, std::size_t n_bs,
                               const RadioParams& params) {
  BaselinePowers powers;
  powers.bs_power_w.assign(n_bs, 0.0);
  powers.ue_power_w.assign(snapshot.k(), 0.0);
  for (const std::size_t ue : snapshot.dl_ues) {
    powers.bs_power_w.at(snapshot.ue_placement.serving_bs[ue]) = params.p_b_max;
  }
  for (const std::size_t ue : snapshot.ul_ues) {
    powers.ue_power_w[ue] = params.p_u_max;
  }
  return powers;
}

}  // namespace dtdd
