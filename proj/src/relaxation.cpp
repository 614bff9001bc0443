#include "h2leader/relaxation.hpp"

#include <algorithm>
#include <string>

namespace h2leader {

namespace {

void zero_pinned_columns(Eigen::MatrixXd& X, const std::vector<int>& cols) {
  for (int j : cols) X.col(j).setZero();
}

void check_shapes(const Eigen::MatrixXd& Wo, const Eigen::MatrixXd& M,
                  const SubspacePoint& X) {
  if (Wo.rows() != Wo.cols() || Wo.rows() != M.rows() ||
      M.rows() != X.matrix.rows() || M.cols() != X.matrix.cols()) {
    throw Error(ErrorCode::ShapeMismatch,
                "gramian/input/iterate dimensions disagree");
  }
}

}  // namespace

SubspacePoint subspace_point(Eigen::MatrixXd matrix,
                             std::vector<int> zero_columns) {
  std::sort(zero_columns.begin(), zero_columns.end());
  zero_columns.erase(
      std::unique(zero_columns.begin(), zero_columns.end()),
      zero_columns.end());
  for (int j : zero_columns) {
    if (j < 0 || j >= matrix.cols()) {
      throw Error(ErrorCode::InvalidArgument,
                  "pinned column index out of range", std::to_string(j));
    }
  }
  zero_pinned_columns(matrix, zero_columns);
  return {std::move(matrix), std::move(zero_columns)};
}

double relaxed_objective(const Eigen::MatrixXd& Wo, const Eigen::MatrixXd& M,
                         const SubspacePoint& X) {
  check_shapes(Wo, M, X);
  const Eigen::MatrixXd D = M - X.matrix;
  return (D.transpose() * Wo * D).trace();
}

Eigen::MatrixXd relaxed_gradient(const Eigen::MatrixXd& Wo,
                                 const Eigen::MatrixXd& M,
                                 const SubspacePoint& X) {
  check_shapes(Wo, M, X);
  Eigen::MatrixXd grad = -2.0 * (Wo * (M - X.matrix));
  zero_pinned_columns(grad, X.zero_columns);
  return grad;
}

Eigen::MatrixXd hessian_apply(const Eigen::MatrixXd& Wo,
                              const SubspacePoint& X,
                              const Eigen::MatrixXd& direction) {
  if (Wo.rows() != direction.rows()) {
    throw Error(ErrorCode::ShapeMismatch,
                "gramian/direction dimensions disagree");
  }
  Eigen::MatrixXd out = 2.0 * (Wo * direction);
  zero_pinned_columns(out, X.zero_columns);
  return out;
}

DescentTrace solve_relaxed(const Eigen::MatrixXd& Wo, const Eigen::MatrixXd& M,
                           SubspacePoint x0, const DescentOptions& options) {
  check_shapes(Wo, M, x0);
  if (!(options.step > 0.0) || options.step > 1.0) {
    throw Error(ErrorCode::StepTooLarge,
                "step size must lie in (0, 1] for guaranteed descent",
                std::to_string(options.step));
  }
  if (options.max_iter < 0) {
    throw Error(ErrorCode::InvalidArgument, "max_iter must be nonnegative");
  }

  DescentTrace trace;
  trace.final_point = std::move(x0);
  for (int it = 0; it <= options.max_iter; ++it) {
    const Eigen::MatrixXd grad = relaxed_gradient(Wo, M, trace.final_point);
    const double gnorm = grad.norm();
    if (options.record_trace) {
      trace.steps.push_back(
          {it, relaxed_objective(Wo, M, trace.final_point), gnorm});
    }
    trace.iterations = it;
    if (gnorm < options.tol) {
      trace.converged = true;
      return trace;
    }
    if (it == options.max_iter) break;
    trace.final_point.matrix -= options.step * grad;
    zero_pinned_columns(trace.final_point.matrix,
                        trace.final_point.zero_columns);
  }
  trace.converged = false;
  return trace;
}

}  // namespace h2leader
