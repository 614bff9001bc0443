#include "h2leader/system.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace h2leader {

namespace {

std::string list_label(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << "}";
  return os.str();
}

void require_distinct_positive(const std::vector<int>& v, const char* what) {
  std::set<int> seen;
  for (int id : v) {
    if (id < 1) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string(what) + " contains a non-positive vertex id",
                  std::to_string(id));
    }
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string(what) + " contains a duplicate vertex id",
                  std::to_string(id));
    }
  }
}

}  // namespace

std::vector<int> LeaderAssignment::demoted_positions() const {
  std::vector<int> positions;
  positions.reserve(demoted.size());
  for (int pos = 0; pos < m(); ++pos) {
    if (std::binary_search(demoted.begin(), demoted.end(), leaders[pos])) {
      positions.push_back(pos);
    }
  }
  return positions;
}

std::vector<int> LeaderAssignment::new_leader_set() const {
  std::vector<int> out;
  for (int v : new_leaders) {
    if (v != kDemotedSlot) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LeaderAssignment assignment_from_sets(std::vector<int> leaders,
                                      std::vector<int> demoted,
                                      std::vector<int> new_set) {
  std::sort(leaders.begin(), leaders.end());
  std::sort(demoted.begin(), demoted.end());
  std::sort(new_set.begin(), new_set.end());
  require_distinct_positive(leaders, "leaders");
  require_distinct_positive(demoted, "demoted");
  require_distinct_positive(new_set, "new leader set");
  if (leaders.empty()) {
    throw Error(ErrorCode::InvalidArgument, "leader set is empty");
  }
  if (!std::includes(leaders.begin(), leaders.end(), demoted.begin(),
                     demoted.end())) {
    throw Error(ErrorCode::NotASubset,
                "demoted set is not a subset of the leader set",
                list_label(demoted));
  }
  for (int v : new_set) {
    if (std::binary_search(demoted.begin(), demoted.end(), v)) {
      throw Error(ErrorCode::DemotedReselected,
                  "a demoted vertex reappears among the new leaders",
                  std::to_string(v));
    }
  }
  const int m = static_cast<int>(leaders.size());
  const int r = static_cast<int>(demoted.size());
  if (static_cast<int>(new_set.size()) != m - r) {
    throw Error(ErrorCode::SizeMismatch,
                "new leader set must have exactly m - r elements",
                "expected " + std::to_string(m - r) + ", got " +
                    std::to_string(new_set.size()));
  }

  LeaderAssignment a;
  a.leaders = std::move(leaders);
  a.demoted = std::move(demoted);
  a.new_leaders.assign(static_cast<std::size_t>(m), kDemotedSlot);
  std::size_t next = 0;
  for (int pos = 0; pos < m; ++pos) {
    if (std::binary_search(a.demoted.begin(), a.demoted.end(),
                           a.leaders[static_cast<std::size_t>(pos)])) {
      continue;
    }
    a.new_leaders[static_cast<std::size_t>(pos)] = new_set[next++];
  }
  return a;
}

Eigen::MatrixXd build_input_matrix(int n, const LeaderAssignment& a,
                                   InputMatrixKind kind) {
  const std::vector<int>& column_vertices =
      kind == InputMatrixKind::Original ? a.leaders : a.new_leaders;
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, a.m());
  for (int l = 0; l < a.m(); ++l) {
    const int v = column_vertices[static_cast<std::size_t>(l)];
    if (v == kDemotedSlot) continue;
    if (v < 1 || v > n) {
      throw Error(ErrorCode::InvalidArgument, "vertex id out of range 1..n",
                  std::to_string(v));
    }
    M(v - 1, l) = 1.0;
  }
  return M;
}

bool is_original_input_matrix(const Eigen::MatrixXd& M) {
  std::set<int> rows;
  for (int l = 0; l < M.cols(); ++l) {
    int hit = -1;
    for (int i = 0; i < M.rows(); ++i) {
      const double v = M(i, l);
      if (v == 1.0) {
        if (hit >= 0) return false;
        hit = i;
      } else if (v != 0.0) {
        return false;
      }
    }
    if (hit < 0 || !rows.insert(hit).second) return false;
  }
  return true;
}

bool is_demoted_input_matrix(const Eigen::MatrixXd& M,
                             std::span<const int> zero_columns) {
  std::set<int> zeroed(zero_columns.begin(), zero_columns.end());
  std::set<int> rows;
  for (int l = 0; l < M.cols(); ++l) {
    if (zeroed.count(l)) {
      if (!M.col(l).isZero(0.0)) return false;
      continue;
    }
    int hit = -1;
    for (int i = 0; i < M.rows(); ++i) {
      const double v = M(i, l);
      if (v == 1.0) {
        if (hit >= 0) return false;
        hit = i;
      } else if (v != 0.0) {
        return false;
      }
    }
    if (hit < 0 || !rows.insert(hit).second) return false;
  }
  return true;
}

Eigen::MatrixXd observability_gramian(int n) {
  if (n < 2) {
    throw Error(ErrorCode::InvalidArgument, "gramian needs n >= 2",
                std::to_string(n));
  }
  const double nn = static_cast<double>(n);
  return 0.5 * Eigen::MatrixXd::Identity(n, n) -
         Eigen::MatrixXd::Constant(n, n, 1.0 / (2.0 * nn));
}

double SpectralDecomposition::lambda2() const {
  double best = eigenvalues(n() - 1);
  for (int i = 0; i < n(); ++i) {
    if (i == kernel_index) continue;
    best = std::min(best, eigenvalues(i));
  }
  return best;
}

SpectralDecomposition decompose_laplacian(const Eigen::MatrixXd& laplacian) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::InvalidArgument, "eigendecomposition failed");
  }
  SpectralDecomposition sd;
  sd.eigenvalues = solver.eigenvalues();
  sd.eigenvectors = solver.eigenvectors();
  const double lambda_max = sd.eigenvalues(sd.n() - 1);
  sd.zero_tolerance = 1e-9 * std::max(1.0, lambda_max);
  int below = 0;
  for (int i = 0; i < sd.n(); ++i) {
    if (sd.eigenvalues(i) < sd.zero_tolerance) {
      sd.kernel_index = i;
      ++below;
    }
  }
  if (below != 1) {
    throw Error(ErrorCode::MultipleZeroEigenvalues,
                "expected exactly one kernel eigenvalue",
                std::to_string(below) + " eigenvalues below tolerance");
  }
  return sd;
}

Eigen::MatrixXd gramian_spectral_oracle(const Eigen::MatrixXd& laplacian) {
  const SpectralDecomposition sd = decompose_laplacian(laplacian);
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(sd.n(), sd.n());
  for (int i = 0; i < sd.n(); ++i) {
    if (i == sd.kernel_index) continue;
    const Eigen::VectorXd q = sd.eigenvectors.col(i);
    gram += 0.5 * q * q.transpose();
  }
  return gram;
}

Eigen::MatrixXcd transfer_eval(const GraphMatrices& gm,
                               const SpectralDecomposition& sd,
                               const Eigen::MatrixXd& Min,
                               std::complex<double> s) {
  if (Min.rows() != gm.laplacian.rows()) {
    throw Error(ErrorCode::ShapeMismatch,
                "input matrix row count must equal the vertex count");
  }
  const Eigen::MatrixXd C = gm.output_map();
  Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(C.rows(), Min.cols());
  for (int i = 0; i < sd.n(); ++i) {
    if (i == sd.kernel_index) continue;
    const double lambda = sd.eigenvalues(i);
    const std::complex<double> denom = s + lambda;
    if (std::abs(denom) <= 1e-12 * std::max(1.0, lambda)) {
      throw Error(ErrorCode::PoleEvaluation,
                  "s coincides with a system pole",
                  "lambda=" + std::to_string(lambda));
    }
    const Eigen::VectorXd q = sd.eigenvectors.col(i);
    G += ((C * q) * (q.transpose() * Min)).cast<std::complex<double>>() /
         denom;
  }
  return G;
}

Eigen::MatrixXcd transfer_eval(const GraphMatrices& gm,
                               const Eigen::MatrixXd& Min,
                               std::complex<double> s) {
  return transfer_eval(gm, decompose_laplacian(gm.laplacian), Min, s);
}

}  // namespace h2leader
