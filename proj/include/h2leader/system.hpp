#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

#include "h2leader/errors.hpp"
#include "h2leader/graph.hpp"

namespace h2leader {

/// Sentinel stored in LeaderAssignment::new_leaders at demoted positions.
/// Vertex ids are 1-based, so 0 is free.
inline constexpr int kDemotedSlot = 0;

/// Leader configuration for the original and the reassigned system.
///
/// `leaders` is the original tuple (v_1,...,v_m), ascending. `demoted` is the
/// subset turned into followers; its positions inside `leaders` form the
/// zero-column index set. `new_leaders` is the relabeled tuple: kDemotedSlot
/// at demoted positions, and the surviving column positions (taken in
/// ascending order) hold the chosen replacement vertices in ascending order.
/// That pairing convention is what ties a replacement *set* to matrix
/// columns; all reported tables depend on it.
struct LeaderAssignment {
  std::vector<int> leaders;
  std::vector<int> demoted;
  std::vector<int> new_leaders;

  int m() const { return static_cast<int>(leaders.size()); }
  int r() const { return static_cast<int>(demoted.size()); }

  /// 0-based positions of the demoted leaders inside `leaders`.
  std::vector<int> demoted_positions() const;

  /// The replacement vertex set (non-sentinel entries of new_leaders), sorted.
  std::vector<int> new_leader_set() const;
};

/// Builds the assignment from plain sets under the ascending order-preserving
/// pairing convention. Throws NotASubset (demoted not within leaders),
/// DemotedReselected (a new leader is demoted), SizeMismatch
/// (|new_set| != m - r), InvalidArgument (duplicates, non-positive ids).
LeaderAssignment assignment_from_sets(std::vector<int> leaders,
                                      std::vector<int> demoted,
                                      std::vector<int> new_set);

enum class InputMatrixKind { Original, New };

/// n x m 0/1 input matrix: column l has a single 1 at the leader vertex, or
/// is all zero for demoted columns when kind == New.
Eigen::MatrixXd build_input_matrix(int n, const LeaderAssignment& a,
                                   InputMatrixKind kind);

/// Column-structure predicates used by property tests.
bool is_original_input_matrix(const Eigen::MatrixXd& M);
bool is_demoted_input_matrix(const Eigen::MatrixXd& M,
                             std::span<const int> zero_columns);

/// Closed-form observability Gramian of the consensus output system:
/// (1/2) I_n - (1/2n) 1 1^T.
Eigen::MatrixXd observability_gramian(int n);

/// Eigendecomposition of a Laplacian with its kernel identified. Exactly one
/// eigenvalue below 1e-9 * max(1, lambda_max) is required; otherwise
/// MultipleZeroEigenvalues is thrown.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns
  int kernel_index = 0;
  double zero_tolerance = 0.0;

  int n() const { return static_cast<int>(eigenvalues.size()); }
  double lambda_max() const { return eigenvalues(n() - 1); }
  /// Smallest nonzero eigenvalue (algebraic connectivity).
  double lambda2() const;
};

SpectralDecomposition decompose_laplacian(const Eigen::MatrixXd& laplacian);

/// Gramian via the mode-by-mode value of the integral
/// int_0^inf exp(-Lt) L exp(-Lt) dt: each nonzero eigenpair contributes
/// (1/2) q q^T. Serves as the independent cross-check of the closed form.
Eigen::MatrixXd gramian_spectral_oracle(const Eigen::MatrixXd& laplacian);

/// Transfer matrix W^{1/2} R^T (s I + L)^{-1} Min evaluated through the
/// spectral sum over nonzero eigenvalues; the kernel mode drops out because
/// R^T 1 = 0, so s = 0 and s = i*omega are fine. Throws PoleEvaluation when
/// s hits -lambda_i for a nonzero eigenvalue.
Eigen::MatrixXcd transfer_eval(const GraphMatrices& gm,
                               const SpectralDecomposition& sd,
                               const Eigen::MatrixXd& Min,
                               std::complex<double> s);

/// Convenience overload: decomposes the Laplacian internally.
Eigen::MatrixXcd transfer_eval(const GraphMatrices& gm,
                               const Eigen::MatrixXd& Min,
                               std::complex<double> s);

}  // namespace h2leader
