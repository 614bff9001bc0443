#include "h2leader/metrics.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace h2leader {

namespace {

void require_same_shape(const Eigen::MatrixXd& M, const Eigen::MatrixXd& Mt) {
  if (M.rows() != Mt.rows() || M.cols() != Mt.cols()) {
    throw Error(ErrorCode::ShapeMismatch,
                "input matrices must have identical shape",
                std::to_string(M.rows()) + "x" + std::to_string(M.cols()) +
                    " vs " + std::to_string(Mt.rows()) + "x" +
                    std::to_string(Mt.cols()));
  }
}

/// Compensated (Kahan) accumulator; keeps quadrature sums deterministic and
/// tight regardless of point count.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double value) {
    const double y = value - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

double h2_error_sq(const Eigen::MatrixXd& Wo, const Eigen::MatrixXd& M,
                   const Eigen::MatrixXd& Mt) {
  require_same_shape(M, Mt);
  if (Wo.rows() != M.rows() || Wo.cols() != M.rows()) {
    throw Error(ErrorCode::ShapeMismatch,
                "Gramian must be n x n for n-row input matrices");
  }
  const Eigen::MatrixXd X = M - Mt;
  return (X.transpose() * Wo * X).trace();
}

double h2_error_sq_consensus(const Eigen::MatrixXd& M,
                             const Eigen::MatrixXd& Mt) {
  require_same_shape(M, Mt);
  const Eigen::MatrixXd X = M - Mt;
  const double n = static_cast<double>(M.rows());
  return 0.5 * X.squaredNorm() -
         (0.5 / n) * X.colwise().sum().squaredNorm();
}

double h2_norm_sq(const Eigen::MatrixXd& Wo, const Eigen::MatrixXd& M) {
  return (M.transpose() * Wo * M).trace();
}

double relative_error(double f_value, double g_norm_sq) {
  if (!(g_norm_sq > 0.0)) {
    throw Error(ErrorCode::ZeroNorm,
                "relative error undefined for zero system norm",
                std::to_string(g_norm_sq));
  }
  return std::sqrt(std::max(f_value, 0.0) / g_norm_sq);
}

double structural_h2_formula(int n, int r, int d) {
  return 0.5 * static_cast<double>(r) * (1.0 - 1.0 / static_cast<double>(n)) +
         static_cast<double>(d);
}

int mismatch_count(const LeaderAssignment& a) {
  int d = 0;
  for (int pos = 0; pos < a.m(); ++pos) {
    const int v = a.new_leaders[static_cast<std::size_t>(pos)];
    if (v != kDemotedSlot && v != a.leaders[static_cast<std::size_t>(pos)]) {
      ++d;
    }
  }
  return d;
}

H2Report make_h2_report(const Eigen::MatrixXd& Wo, const Eigen::MatrixXd& M,
                        const Eigen::MatrixXd& Mt) {
  H2Report report;
  report.f_value = h2_error_sq(Wo, M, Mt);
  report.g_norm_sq = h2_norm_sq(Wo, M);
  report.rel_error = relative_error(report.f_value, report.g_norm_sq);
  return report;
}

QuadratureResult h2_error_quadrature_oracle(const GraphMatrices& gm,
                                            const Eigen::MatrixXd& M,
                                            const Eigen::MatrixXd& Mt,
                                            double omega_max, int n_points) {
  require_same_shape(M, Mt);
  if (!(omega_max > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "omega_max must be > 0");
  }
  if (n_points < 100) {
    throw Error(ErrorCode::InvalidArgument, "need at least 100 points",
                std::to_string(n_points));
  }

  const Eigen::MatrixXd X = M - Mt;
  const SpectralDecomposition sd = decompose_laplacian(gm.laplacian);
  const Eigen::MatrixXd C = gm.output_map();

  // (G - Gt)(iw) = sum_i (iw + lambda_i)^{-1} b_i z_i^T over nonzero modes,
  // with b_i = C q_i and z_i = X^T q_i. The squared Frobenius norm expands
  // bilinearly through the Gram matrix P_ij = (b_i . b_j)(z_i . z_j); all
  // cross terms are kept.
  std::vector<double> lambdas;
  std::vector<Eigen::VectorXd> bs;
  std::vector<Eigen::VectorXd> zs;
  for (int i = 0; i < sd.n(); ++i) {
    if (i == sd.kernel_index) continue;
    lambdas.push_back(sd.eigenvalues(i));
    const Eigen::VectorXd q = sd.eigenvectors.col(i);
    bs.push_back(C * q);
    zs.push_back(X.transpose() * q);
  }
  const int modes = static_cast<int>(lambdas.size());
  Eigen::MatrixXd gram(modes, modes);
  for (int i = 0; i < modes; ++i) {
    for (int j = 0; j < modes; ++j) {
      gram(i, j) = bs[static_cast<std::size_t>(i)].dot(
                       bs[static_cast<std::size_t>(j)]) *
                   zs[static_cast<std::size_t>(i)].dot(
                       zs[static_cast<std::size_t>(j)]);
    }
  }

  const auto integrand = [&](double omega) {
    std::vector<std::complex<double>> alpha(static_cast<std::size_t>(modes));
    for (int i = 0; i < modes; ++i) {
      alpha[static_cast<std::size_t>(i)] =
          1.0 / std::complex<double>(lambdas[static_cast<std::size_t>(i)],
                                     omega);
    }
    double value = 0.0;
    for (int i = 0; i < modes; ++i) {
      value += std::norm(alpha[static_cast<std::size_t>(i)]) * gram(i, i);
      for (int j = i + 1; j < modes; ++j) {
        value += 2.0 *
                 (std::conj(alpha[static_cast<std::size_t>(i)]) *
                  alpha[static_cast<std::size_t>(j)])
                     .real() *
                 gram(i, j);
      }
    }
    return value;
  };

  // Composite Simpson over [0, omega_max]; interval count divisible by 4 so
  // the half-resolution rule reuses the same grid for the error estimate.
  int intervals = std::max(n_points - 1, 100);
  intervals += (4 - intervals % 4) % 4;
  const double h = omega_max / static_cast<double>(intervals);
  std::vector<double> values(static_cast<std::size_t>(intervals) + 1);
  for (int i = 0; i <= intervals; ++i) {
    values[static_cast<std::size_t>(i)] =
        integrand(h * static_cast<double>(i));
  }
  const auto simpson = [&](int stride) {
    KahanSum acc;
    acc.add(values.front());
    acc.add(values.back());
    for (int i = stride; i < intervals; i += stride) {
      const double weight = (i / stride) % 2 == 1 ? 4.0 : 2.0;
      acc.add(weight * values[static_cast<std::size_t>(i)]);
    }
    return acc.sum * (h * static_cast<double>(stride)) / 3.0;
  };
  const double integral_full = simpson(1);
  const double integral_half = simpson(2);

  QuadratureResult result;
  result.estimate = integral_full / std::numbers::pi;
  // |(G - Gt)(iw)|_F^2 <= tr(X^T L X) / w^2 gives the tail over
  // |w| > omega_max once folded into the (1/2pi) normalization.
  const double c = (X.transpose() * gm.laplacian * X).trace();
  result.tail_bound = c / (std::numbers::pi * omega_max);
  result.quadrature_error_estimate =
      std::abs(integral_full - integral_half) / std::numbers::pi;
  result.tolerance = result.tail_bound + result.quadrature_error_estimate;
  return result;
}

}  // namespace h2leader
