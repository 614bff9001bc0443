#pragma once

#include <Eigen/Dense>
#include <vector>

#include "h2leader/errors.hpp"
#include "h2leader/system.hpp"

namespace h2leader {

/// A point of the matrix subspace whose columns at `zero_columns` (0-based
/// positions) are pinned to zero. The factory projects any matrix onto the
/// subspace by zeroing those columns.
struct SubspacePoint {
  Eigen::MatrixXd matrix;
  std::vector<int> zero_columns;
};

SubspacePoint subspace_point(Eigen::MatrixXd matrix,
                             std::vector<int> zero_columns);

/// Objective tr((M - X)^T Wo (M - X)) over the pinned-column subspace.
double relaxed_objective(const Eigen::MatrixXd& Wo, const Eigen::MatrixXd& M,
                         const SubspacePoint& X);

/// Gradient of the objective, projected onto the subspace: -2 Wo (M - X)
/// with the pinned columns zeroed.
Eigen::MatrixXd relaxed_gradient(const Eigen::MatrixXd& Wo,
                                 const Eigen::MatrixXd& M,
                                 const SubspacePoint& X);

/// Action of the (constant) Hessian on a direction within the subspace:
/// 2 Wo * direction with the pinned columns zeroed.
Eigen::MatrixXd hessian_apply(const Eigen::MatrixXd& Wo,
                              const SubspacePoint& X,
                              const Eigen::MatrixXd& direction);

struct DescentOptions {
  double step = 0.9;      ///< fixed step size, must satisfy 0 < step <= 1
  double tol = 1e-9;      ///< stop when the gradient Frobenius norm drops below
  int max_iter = 10000;
  bool record_trace = true;
};

struct DescentStep {
  int iteration;
  double objective;
  double grad_norm;
};

struct DescentTrace {
  std::vector<DescentStep> steps;
  SubspacePoint final_point;
  bool converged = false;
  int iterations = 0;
};

/// Fixed-step gradient descent on the relaxed objective, started from x0.
/// The objective's gradient is 1-Lipschitz, so any step in (0, 1] descends
/// monotonically; larger steps raise StepTooLarge.
DescentTrace solve_relaxed(const Eigen::MatrixXd& Wo, const Eigen::MatrixXd& M,
                           SubspacePoint x0, const DescentOptions& options = {});

}  // namespace h2leader
