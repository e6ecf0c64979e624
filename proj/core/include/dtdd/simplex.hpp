// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include <Eigen/Dense>

namespace dtdd::lp {

struct Solution {
  Eigen::VectorXd x;
  double objective = 0.0;
  std::size_t iterations = 0;
};

/// Dense tableau simplex for
///
///   maximize c^T x  subject to  A x <= b,  x >= 0,
///
/// with b >= 0, so the all-slack basis is a feasible start and no phase one
/// is needed. Bland's rule guarantees termination on degenerate vertices.
/// Throws SolverError on unboundedness or if the iteration cap is hit, and
/// PreconditionError on mismatched shapes or negative b.
Solution maximize(const Eigen::VectorXd& c, const Eigen::MatrixXd& a,
                  const Eigen::VectorXd& b);

}  // namespace dtdd::lp
