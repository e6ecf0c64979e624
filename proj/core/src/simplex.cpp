// SPDX-License-Identifier: Apache-2.0
#include "dtdd/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "dtdd/errors.hpp"

namespace dtdd::lp {

Solution maximize(const Eigen::VectorXd& c, const Eigen::MatrixXd& a,
                  const Eigen::VectorXd& b) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  if (c.size() != n || b.size() != m) {
    throw PreconditionError("LP dimensions do not match");
  }
  if (m > 0 && b.minCoeff() < 0.0) {
    throw PreconditionError("LP right-hand side must be nonnegative");
  }

  const double scale = std::max({1.0, a.size() ? a.cwiseAbs().maxCoeff() : 0.0,
                                 c.size() ? c.cwiseAbs().maxCoeff() : 0.0});
  const double eps = 1e-12 * scale;

  // Columns: n structural, m slack, then the right-hand side.
  const Eigen::Index rhs = n + m;
  Eigen::MatrixXd tableau = Eigen::MatrixXd::Zero(m, n + m + 1);
  tableau.leftCols(n) = a;
  tableau.middleCols(n, m).setIdentity();
  tableau.col(rhs) = b;

  // reduced(j) = c_j - c_B^T B^{-1} A_j
  Eigen::VectorXd reduced = Eigen::VectorXd::Zero(n + m);
  reduced.head(n) = c;

  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    basis[static_cast<std::size_t>(i)] = n + i;
  }

  const std::size_t max_iterations = 50 * static_cast<std::size_t>(n + m + 1);
  std::size_t iterations = 0;
  for (;; ++iterations) {
    if (iterations >= max_iterations) {
      throw SolverError("simplex iteration limit reached");
    }

    Eigen::Index entering = -1;
    for (Eigen::Index j = 0; j < n + m; ++j) {
      if (reduced(j) > eps) {
        entering = j;
        break;
      }
    }
    if (entering < 0) {
      break;
    }

    Eigen::Index leaving = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m; ++i) {
      const double coeff = tableau(i, entering);
      if (coeff <= eps) {
        continue;
      }
      const double ratio = tableau(i, rhs) / coeff;
      if (ratio < best_ratio ||
          (ratio == best_ratio && basis[static_cast<std::size_t>(i)] <
                                      basis[static_cast<std::size_t>(leaving)])) {
        best_ratio = ratio;
        leaving = i;
      }
    }
    if (leaving < 0) {
      throw SolverError("linear program is unbounded");
    }

    tableau.row(leaving) /= tableau(leaving, entering);
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i != leaving) {
        const double factor = tableau(i, entering);
        if (factor != 0.0) {
          tableau.row(i) -= factor * tableau.row(leaving);
        }
      }
    }
    const double factor = reduced(entering);
    reduced -= factor * tableau.row(leaving).head(n + m).transpose();
    basis[static_cast<std::size_t>(leaving)] = entering;
  }

  Solution solution;
  solution.x = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Eigen::Index var = basis[static_cast<std::size_t>(i)];
    if (var < n) {
      solution.x(var) = std::max(0.0, tableau(i, rhs));
    }
  }
  solution.objective = c.dot(solution.x);
  solution.iterations = iterations;
  return solution;
}

}  // namespace dtdd::lp
