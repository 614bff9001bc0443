#include "h2leader/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "h2leader/metrics.hpp"

namespace h2leader {

namespace {

constexpr double kStabilityLimit = 2.5;
constexpr double kSlackAllowance = 5e-3;

void check_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " must be positive and finite",
                std::to_string(v));
  }
}

int step_count(double dt, double T) {
  return std::max(1, static_cast<int>(std::ceil(T / dt - 1e-9)));
}

}  // namespace

Eigen::VectorXd InputSignal::value(double t) const {
  switch (kind) {
    case SignalKind::ExpDecay:
      return amplitudes * std::exp(-decay * t);
    case SignalKind::Pulse:
      if (t >= 0.0 && t <= pulse_width) return amplitudes;
      return Eigen::VectorXd::Zero(amplitudes.size());
    case SignalKind::Zero:
      return Eigen::VectorXd::Zero(amplitudes.size());
  }
  return Eigen::VectorXd::Zero(amplitudes.size());
}

double InputSignal::l2_norm_sq() const {
  switch (kind) {
    case SignalKind::ExpDecay:
      return amplitudes.squaredNorm() / (2.0 * decay);
    case SignalKind::Pulse:
      return amplitudes.squaredNorm() * pulse_width;
    case SignalKind::Zero:
      return 0.0;
  }
  return 0.0;
}

InputSignal exp_decay_signal(Eigen::VectorXd amplitudes, double decay) {
  check_positive(decay, "decay rate");
  return {SignalKind::ExpDecay, std::move(amplitudes), decay, 1.0};
}

InputSignal pulse_signal(Eigen::VectorXd amplitudes, double width) {
  check_positive(width, "pulse width");
  return {SignalKind::Pulse, std::move(amplitudes), 1.0, width};
}

InputSignal zero_signal(int channels) {
  if (channels < 0) {
    throw Error(ErrorCode::InvalidArgument, "channel count must be >= 0",
                std::to_string(channels));
  }
  return {SignalKind::Zero, Eigen::VectorXd::Zero(channels), 1.0, 1.0};
}

Trajectory integrate(const GraphMatrices& gm, const Eigen::MatrixXd& Min,
                     const InputSignal& u, const Eigen::VectorXd& x0,
                     double dt, double T) {
  const int n = gm.n();
  if (Min.rows() != n || Min.cols() != u.channels() || x0.size() != n) {
    throw Error(ErrorCode::ShapeMismatch,
                "state/input/signal dimensions disagree");
  }
  check_positive(dt, "dt");
  if (!(T >= dt)) {
    throw Error(ErrorCode::InvalidArgument, "horizon must be at least one step",
                "T=" + std::to_string(T) + " dt=" + std::to_string(dt));
  }
  const double lambda_max =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(gm.laplacian,
                                                     Eigen::EigenvaluesOnly)
          .eigenvalues()
          .maxCoeff();
  if (dt * lambda_max >= kStabilityLimit) {
    throw Error(ErrorCode::StepTooLarge,
                "dt * lambda_max exceeds the explicit-scheme stability margin",
                "dt*lambda_max=" + std::to_string(dt * lambda_max));
  }

  const auto deriv = [&](double t, const Eigen::VectorXd& x) -> Eigen::VectorXd {
    return -(gm.laplacian * x) + Min * u.value(t);
  };

  const int steps = step_count(dt, T);
  Trajectory traj;
  traj.t.reserve(static_cast<std::size_t>(steps) + 1);
  traj.x.reserve(static_cast<std::size_t>(steps) + 1);
  Eigen::VectorXd x = x0;
  traj.t.push_back(0.0);
  traj.x.push_back(x);
  for (int i = 0; i < steps; ++i) {
    const double t = i * dt;
    const Eigen::VectorXd k1 = deriv(t, x);
    const Eigen::VectorXd k2 = deriv(t + 0.5 * dt, x + (0.5 * dt) * k1);
    const Eigen::VectorXd k3 = deriv(t + 0.5 * dt, x + (0.5 * dt) * k2);
    const Eigen::VectorXd k4 = deriv(t + dt, x + dt * k3);
    x += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    traj.t.push_back((i + 1) * dt);
    traj.x.push_back(x);
  }
  return traj;
}

double group_disagreement(const GraphMatrices& gm, const Eigen::VectorXd& x) {
  if (x.size() != gm.n()) {
    throw Error(ErrorCode::ShapeMismatch, "state dimension disagrees with graph");
  }
  return x.dot(gm.laplacian * x);
}

double auto_horizon(const InputSignal& u, double lambda2) {
  check_positive(lambda2, "lambda2");
  const double settle = 10.0 / lambda2;
  switch (u.kind) {
    case SignalKind::ExpDecay:
      return std::max(10.0 / u.decay, settle);
    case SignalKind::Pulse:
      return u.pulse_width + settle;
    case SignalKind::Zero:
      return settle;
  }
  return settle;
}

SimulationTrace verify_lemma1(const GraphMatrices& gm,
                              const LeaderAssignment& assignment,
                              const InputSignal& u,
                              const SimulationOptions& options) {
  const int n = gm.n();
  if (u.channels() != assignment.m()) {
    throw Error(ErrorCode::ShapeMismatch,
                "signal channel count disagrees with leader count");
  }
  if (options.stride < 1) {
    throw Error(ErrorCode::InvalidArgument, "stride must be >= 1",
                std::to_string(options.stride));
  }

  const Eigen::MatrixXd M =
      build_input_matrix(n, assignment, InputMatrixKind::Original);
  const Eigen::MatrixXd Mt =
      build_input_matrix(n, assignment, InputMatrixKind::New);
  const double f = h2_error_sq_consensus(M, Mt);

  const SpectralDecomposition sd = decompose_laplacian(gm.laplacian);
  const double dt =
      options.dt > 0.0 ? options.dt : std::min(0.02, 2.0 / sd.lambda_max());
  const double T =
      options.horizon > 0.0 ? options.horizon : auto_horizon(u, sd.lambda2());

  const Eigen::VectorXd x0 = Eigen::VectorXd::Zero(n);
  const Trajectory a = integrate(gm, M, u, x0, dt, T);
  const Trajectory b = integrate(gm, Mt, u, x0, dt, T);

  const Eigen::MatrixXd C = gm.output_map();
  SimulationTrace trace;
  trace.dt = dt;
  trace.horizon = T;
  trace.h2_error = std::sqrt(f);
  trace.u_l2_norm = std::sqrt(u.l2_norm_sq());
  trace.bound_rhs = trace.h2_error * trace.u_l2_norm;

  for (std::size_t i = 0; i < a.t.size(); ++i) {
    const double gap = (C * (a.x[i] - b.x[i])).norm();
    trace.linf_output_gap = std::max(trace.linf_output_gap, gap);
    if (options.store_trajectory &&
        (i % static_cast<std::size_t>(options.stride) == 0 ||
         i + 1 == a.t.size())) {
      trace.t.push_back(a.t[i]);
      trace.x.push_back(a.x[i]);
      trace.x_tilde.push_back(b.x[i]);
      trace.y.push_back(C * a.x[i]);
      trace.y_tilde.push_back(C * b.x[i]);
      trace.gap.push_back(gap);
    }
  }

  if (trace.bound_rhs > 0.0) {
    trace.slack_ratio = trace.linf_output_gap / trace.bound_rhs;
  } else {
    trace.slack_ratio = trace.linf_output_gap <= 1e-12 ? 0.0 : HUGE_VAL;
  }
  trace.bound_holds = trace.linf_output_gap <=
                      trace.bound_rhs * (1.0 + kSlackAllowance) + 1e-12;
  return trace;
}

}  // namespace h2leader
