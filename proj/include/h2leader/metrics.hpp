#pragma once

#include <Eigen/Dense>

#include "h2leader/graph.hpp"
#include "h2leader/system.hpp"

namespace h2leader {

/// Squared H2 error between the transfer matrices induced by M and Mt,
/// as the trace tr((M - Mt)^T Wo (M - Mt)). Throws ShapeMismatch.
double h2_error_sq(const Eigen::MatrixXd& Wo, const Eigen::MatrixXd& M,
                   const Eigen::MatrixXd& Mt);

/// Same value, specialized to the consensus Gramian (1/2)I - (1/2n)11^T:
/// (1/2)|X|_F^2 - (1/2n)|X^T 1|^2 with X = M - Mt. O(nm), no Gramian
/// materialized; this is the form the enumeration hot loop uses.
double h2_error_sq_consensus(const Eigen::MatrixXd& M,
                             const Eigen::MatrixXd& Mt);

/// Squared H2 norm of the original system, tr(M^T Wo M). Equals
/// (m/2)(1 - 1/n) for every valid leader placement.
double h2_norm_sq(const Eigen::MatrixXd& Wo, const Eigen::MatrixXd& M);

/// sqrt(f / g_norm_sq). Throws ZeroNorm when g_norm_sq <= 0.
double relative_error(double f_value, double g_norm_sq);

/// Derived cost formula (r/2)(1 - 1/n) + d, where d counts surviving leader
/// columns whose replacement differs from the original. Validated
/// exhaustively against the trace form before the table suites rely on it.
double structural_h2_formula(int n, int r, int d);

/// Number of mismatched surviving columns of an assignment (the d above).
int mismatch_count(const LeaderAssignment& a);

struct H2Report {
  double f_value = 0.0;
  double g_norm_sq = 0.0;
  double rel_error = 0.0;
};

H2Report make_h2_report(const Eigen::MatrixXd& Wo, const Eigen::MatrixXd& M,
                        const Eigen::MatrixXd& Mt);

/// Frequency-domain cross-check of the trace form. Integrates
/// |G(iw) - Gt(iw)|_F^2 / pi over [0, omega_max] by composite Simpson
/// (integrand is even) and bounds the tail analytically by
/// tr(X^T L X) / (pi * omega_max). Never touches the Gramian.
struct QuadratureResult {
  double estimate = 0.0;
  double tail_bound = 0.0;
  double quadrature_error_estimate = 0.0;
  /// tail_bound + quadrature_error_estimate; the certified agreement radius.
  double tolerance = 0.0;
};

QuadratureResult h2_error_quadrature_oracle(const GraphMatrices& gm,
                                            const Eigen::MatrixXd& M,
                                            const Eigen::MatrixXd& Mt,
                                            double omega_max, int n_points);

}  // namespace h2leader
