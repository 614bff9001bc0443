#pragma once

#include <Eigen/Dense>
#include <vector>

#include "h2leader/errors.hpp"
#include "h2leader/graph.hpp"
#include "h2leader/system.hpp"

namespace h2leader {

enum class SignalKind { ExpDecay, Pulse, Zero };

/// A square-integrable input: per-channel amplitudes shaped by a scalar
/// envelope. exp_decay is alpha_l * e^(-beta t); pulse is alpha_l on
/// [0, width]; zero is identically zero.
struct InputSignal {
  SignalKind kind = SignalKind::Zero;
  Eigen::VectorXd amplitudes;
  double decay = 1.0;
  double pulse_width = 1.0;

  int channels() const { return static_cast<int>(amplitudes.size()); }
  Eigen::VectorXd value(double t) const;
  /// Analytic squared L2 norm over [0, inf).
  double l2_norm_sq() const;
};

InputSignal exp_decay_signal(Eigen::VectorXd amplitudes, double decay);
InputSignal pulse_signal(Eigen::VectorXd amplitudes, double width);
InputSignal zero_signal(int channels);

struct Trajectory {
  std::vector<double> t;
  std::vector<Eigen::VectorXd> x;
};

/// Classic fixed-step fourth-order Runge-Kutta on dx/dt = -L x + Min u(t)
/// over the uniform grid t_i = i*dt covering [0, T]. The step must satisfy
/// dt * lambda_max(L) < 2.5 or StepTooLarge is raised (reporting the
/// product).
Trajectory integrate(const GraphMatrices& gm, const Eigen::MatrixXd& Min,
                     const InputSignal& u, const Eigen::VectorXd& x0,
                     double dt, double T);

/// x^T L x, the squared output norm (equivalently half the weighted sum of
/// squared endpoint differences over the edges).
double group_disagreement(const GraphMatrices& gm, const Eigen::VectorXd& x);

/// Horizon long enough for both the input envelope and the slowest
/// non-consensus mode (rate lambda2) to decay far below their initial scale.
double auto_horizon(const InputSignal& u, double lambda2);

struct SimulationOptions {
  double dt = 0.0;       ///< 0 picks min(0.02, 2/lambda_max)
  double horizon = 0.0;  ///< 0 picks auto_horizon
  bool store_trajectory = true;
  int stride = 1;  ///< keep every stride-th grid point when storing
};

struct SimulationTrace {
  std::vector<double> t;
  std::vector<Eigen::VectorXd> x, x_tilde;
  std::vector<Eigen::VectorXd> y, y_tilde;
  std::vector<double> gap;  ///< ||y - y_tilde|| at the stored grid points
  double linf_output_gap = 0.0;  ///< grid max over ALL steps, not just stored
  double bound_rhs = 0.0;        ///< sqrt(f) * ||u||_{L2}
  double h2_error = 0.0;         ///< sqrt(f)
  double u_l2_norm = 0.0;
  double slack_ratio = 0.0;  ///< linf_output_gap / bound_rhs (0 when 0/0)
  bool bound_holds = false;
  double dt = 0.0;
  double horizon = 0.0;
};

/// Simulates the original and the re-selected system side by side from rest
/// with the same input, and checks the worst output gap against the product
/// of the H2 error and the input's L2 norm.
SimulationTrace verify_lemma1(const GraphMatrices& gm,
                              const LeaderAssignment& assignment,
                              const InputSignal& u,
                              const SimulationOptions& options = {});

}  // namespace h2leader
