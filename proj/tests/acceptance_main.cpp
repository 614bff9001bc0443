// Acceptance gate: one self-contained check per shipped guarantee, each
// printing a single PASS/FAIL line with its key statistics and elapsed
// time. The structural-formula gate runs first because the table and
// corpus checks lean on the per-column cost decomposition it certifies.
// Exit status is 0 only when every check passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "h2leader/cli.hpp"
#include "h2leader/graph.hpp"
#include "h2leader/graph_io.hpp"
#include "h2leader/metrics.hpp"
#include "h2leader/random.hpp"
#include "h2leader/relaxation.hpp"
#include "h2leader/selection.hpp"
#include "h2leader/simulate.hpp"
#include "h2leader/system.hpp"
#include "testutil.hpp"

using namespace h2leader;

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int index, const char* name, bool pass, const std::string& stats,
            double elapsed) {
  std::printf("%s  [%d] %-24s %s  (%.2f s)\n", pass ? "PASS" : "FAIL", index,
              name, stats.c_str(), elapsed);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// [9] structural-formula gate: the squared error of every assignment equals
// (r/2)(1 - 1/n) + d, exhaustively over all assignments and all connected
// unit-weight graphs with n <= 6. Runs first; the table and corpus checks
// below rely on this decomposition.
// ---------------------------------------------------------------------------

struct AssignmentCase {
  std::vector<int> leaders, demoted, new_set;  // 1-based vertex sets
  std::vector<int> demoted_vertices;           // originals of zeroed columns
  std::vector<std::pair<int, int>> mismatches;  // (original, replacement)
  double structural = 0.0;
};

std::vector<AssignmentCase> enumerate_assignments(int n) {
  std::vector<AssignmentCase> cases;
  const auto bits_to_set = [](int mask) {
    std::vector<int> out;
    for (int v = 0; mask; ++v, mask >>= 1) {
      if (mask & 1) out.push_back(v + 1);
    }
    return out;
  };
  for (int smask = 1; smask < (1 << n); ++smask) {
    const std::vector<int> leaders = bits_to_set(smask);
    const int m = static_cast<int>(leaders.size());
    for (int dmask = smask;; dmask = (dmask - 1) & smask) {
      const std::vector<int> demoted = bits_to_set(dmask);
      const int r = static_cast<int>(demoted.size());
      const int choose = m - r;
      std::vector<int> pool;
      for (int v = 1; v <= n; ++v) {
        if (!(dmask >> (v - 1) & 1)) pool.push_back(v);
      }
      // every (m - r)-subset of the non-demoted vertices
      std::vector<int> idx(static_cast<std::size_t>(choose));
      std::iota(idx.begin(), idx.end(), 0);
      const int p = static_cast<int>(pool.size());
      bool more = choose <= p;
      while (more) {
        AssignmentCase c;
        c.leaders = leaders;
        c.demoted = demoted;
        for (int i : idx) c.new_set.push_back(pool[static_cast<std::size_t>(i)]);
        const LeaderAssignment a =
            assignment_from_sets(c.leaders, c.demoted, c.new_set);
        for (int pos = 0; pos < a.m(); ++pos) {
          const int orig = a.leaders[static_cast<std::size_t>(pos)];
          const int now = a.new_leaders[static_cast<std::size_t>(pos)];
          if (now == kDemotedSlot) {
            c.demoted_vertices.push_back(orig);
          } else if (now != orig) {
            c.mismatches.emplace_back(orig, now);
          }
        }
        c.structural = structural_h2_formula(
            n, a.r(), static_cast<int>(c.mismatches.size()));
        cases.push_back(std::move(c));
        if (choose == 0) break;
        int i = choose - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == p - choose + i) --i;
        if (i < 0) {
          more = false;
        } else {
          ++idx[static_cast<std::size_t>(i)];
          for (int j = i + 1; j < choose; ++j) {
            idx[static_cast<std::size_t>(j)] =
                idx[static_cast<std::size_t>(j - 1)] + 1;
          }
        }
      }
      if (dmask == 0) break;
    }
  }
  return cases;
}

/// All connected labeled unit-weight graphs on n vertices, as edge lists.
std::vector<std::vector<Edge>> connected_graphs(int n) {
  std::vector<std::pair<int, int>> all_edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) all_edges.emplace_back(i, j);
  }
  const int E = static_cast<int>(all_edges.size());
  std::vector<std::vector<Edge>> graphs;
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  const auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      v = parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    }
    return v;
  };
  for (std::uint32_t mask = 1; mask < (1u << E); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    int components = n;
    for (int e = 0; e < E; ++e) {
      if (!(mask >> e & 1)) continue;
      const int a = find(all_edges[static_cast<std::size_t>(e)].first);
      const int b = find(all_edges[static_cast<std::size_t>(e)].second);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --components;
      }
    }
    if (components != 1) continue;
    std::vector<Edge> edges;
    for (int e = 0; e < E; ++e) {
      if (mask >> e & 1) {
        edges.push_back({all_edges[static_cast<std::size_t>(e)].first,
                         all_edges[static_cast<std::size_t>(e)].second, 1.0});
      }
    }
    graphs.push_back(std::move(edges));
  }
  return graphs;
}

void check_structural_gate() {
  const auto start = Clock::now();
  const std::vector<std::uint64_t> expected_counts = {1, 4, 38, 728, 26704};
  double worst_closed = 0.0;   // closed-form route vs structural value
  double worst_cross = 0.0;    // trace form vs consensus fast path
  double worst_spectral = 0.0;  // per-graph spectral route vs structural
  double worst_sampled = 0.0;  // lookup expansion vs full trace, sampled
  std::uint64_t assignments_total = 0;
  std::uint64_t evaluations = 0;
  bool counts_ok = true;
  std::string count_text;

  for (int n = 2; n <= 6; ++n) {
    const std::vector<AssignmentCase> cases = enumerate_assignments(n);
    assignments_total += cases.size();
    const Eigen::MatrixXd Wo = observability_gramian(n);

    // Route one: graph-free evaluation through the closed-form Gramian.
    for (const AssignmentCase& c : cases) {
      const LeaderAssignment a =
          assignment_from_sets(c.leaders, c.demoted, c.new_set);
      const Eigen::MatrixXd M =
          build_input_matrix(n, a, InputMatrixKind::Original);
      const Eigen::MatrixXd Mt =
          build_input_matrix(n, a, InputMatrixKind::New);
      const double f = h2_error_sq(Wo, M, Mt);
      const double fc = h2_error_sq_consensus(M, Mt);
      worst_closed = std::max(worst_closed, std::abs(f - c.structural));
      worst_cross = std::max(worst_cross, std::abs(f - fc));
    }

    // Route two: every connected unit-weight graph, Gramian rebuilt from the
    // Laplacian spectrum, costs assembled from its entries column by column.
    const auto graphs = connected_graphs(n);
    counts_ok = counts_ok &&
                graphs.size() == expected_counts[static_cast<std::size_t>(n - 2)];
    count_text += (n > 2 ? "/" : "") + std::to_string(graphs.size());
    for (const auto& edges : graphs) {
      const GraphMatrices gm = derive_matrices(build_graph(n, edges));
      const Eigen::MatrixXd Ws = gramian_spectral_oracle(gm.laplacian);
      for (const AssignmentCase& c : cases) {
        double f = 0.0;
        for (int v : c.demoted_vertices) f += Ws(v - 1, v - 1);
        for (const auto& [orig, now] : c.mismatches) {
          f += Ws(orig - 1, orig - 1) - 2.0 * Ws(orig - 1, now - 1) +
               Ws(now - 1, now - 1);
        }
        worst_spectral = std::max(worst_spectral, std::abs(f - c.structural));
        if (++evaluations % 997 == 0) {
          const LeaderAssignment a =
              assignment_from_sets(c.leaders, c.demoted, c.new_set);
          const double full = h2_error_sq(
              Ws, build_input_matrix(n, a, InputMatrixKind::Original),
              build_input_matrix(n, a, InputMatrixKind::New));
          worst_sampled = std::max(worst_sampled, std::abs(f - full));
        }
      }
    }
  }

  const bool pass = counts_ok && worst_closed <= 1e-12 &&
                    worst_cross <= 1e-13 && worst_spectral <= 1e-12 &&
                    worst_sampled <= 1e-13;
  report(9, "structural-formula-gate", pass,
         "graphs " + count_text + ", assignments " +
             std::to_string(assignments_total) + ", worst gap closed " +
             fmt(worst_closed) + " spectral " + fmt(worst_spectral),
         seconds_since(start));
}

// ---------------------------------------------------------------------------
// [1] table reproduction on the worked 5-vertex example.
// ---------------------------------------------------------------------------

void check_tables() {
  const auto path =
      std::filesystem::temp_directory_path() / "h2l_accept_example5.json";
  {
    std::ofstream f(path);
    f << graph_to_json(testutil::example5_graph());
  }
  const std::vector<std::pair<std::string, std::string>> golden = {
      {"1",
       "new_leaders,f\n\"{2,3}\",0.4000\n\"{2,4}\",1.4000\n\"{2,5}\",1.4000\n"
       "\"{3,4}\",2.4000\n\"{3,5}\",2.4000\n\"{4,5}\",2.4000\n"},
      {"2",
       "new_leaders,f\n\"{1,3}\",0.4000\n\"{1,4}\",1.4000\n\"{1,5}\",1.4000\n"
       "\"{3,4}\",2.4000\n\"{3,5}\",2.4000\n\"{4,5}\",2.4000\n"},
      {"3",
       "new_leaders,f\n\"{1,2}\",0.4000\n\"{1,4}\",1.4000\n\"{1,5}\",1.4000\n"
       "\"{2,4}\",2.4000\n\"{2,5}\",2.4000\n\"{4,5}\",2.4000\n"},
  };
  const std::vector<double> values = {0.4, 1.4, 1.4, 2.4, 2.4, 2.4};

  const auto start = Clock::now();
  bool pass = true;
  double worst = 0.0;
  for (const auto& [demoted, want] : golden) {
    std::ostringstream out, err;
    const int code = cli::run({"table", "--graph", path.string(), "--leaders",
                               "1,2,3", "--demote", demoted},
                              out, err);
    pass = pass && code == 0 && out.str() == want;
    // raw values before rounding
    const SelectionReport rep = solve_problem1_bruteforce(
        testutil::example5_graph(), {1, 2, 3}, {std::stoi(demoted)});
    pass = pass && rep.candidates.size() == values.size();
    for (std::size_t i = 0; i < rep.candidates.size(); ++i) {
      worst = std::max(worst,
                       std::abs(rep.candidates[i].f_value - values[i]));
    }
  }
  const double elapsed = seconds_since(start);
  pass = pass && worst <= 1e-10 && elapsed < 1.0;
  report(1, "table-reproduction", pass,
         "3 tables byte-exact, worst value gap " + fmt(worst), elapsed);
}

// ---------------------------------------------------------------------------
// [2]-[5] corpus sweeps (shared 500-instance corpus).
// ---------------------------------------------------------------------------

void check_closed_form_argmin(const std::vector<testutil::CorpusInstance>& corpus) {
  const auto start = Clock::now();
  bool pass = true;
  double worst = 0.0;
  for (const auto& inst : corpus) {
    const SelectionReport rep =
        solve_problem1_bruteforce(inst.graph, inst.leaders, inst.demoted);
    const std::vector<int> closed =
        solve_problem1_closed_form(inst.leaders, inst.demoted);
    const bool member = std::find(rep.minimizers.begin(), rep.minimizers.end(),
                                  closed) != rep.minimizers.end();
    const double target =
        0.5 * static_cast<double>(inst.demoted.size()) *
        (1.0 - 1.0 / inst.graph.n);
    worst = std::max(worst, std::abs(rep.min_f - target));
    pass = pass && rep.exhaustive && member;
  }
  const double elapsed = seconds_since(start);
  pass = pass && worst <= 1e-10 && elapsed < 60.0;
  report(2, "closed-form-argmin", pass,
         std::to_string(corpus.size()) + " graphs, worst min gap " +
             fmt(worst),
         elapsed);
}

void check_demotion_invariance(const std::vector<testutil::CorpusInstance>& corpus) {
  const auto start = Clock::now();
  bool pass = true;
  double worst = 0.0;
  int scored = 0;
  for (const auto& inst : corpus) {
    const int r = static_cast<int>(inst.demoted.size());
    if (r == 0) continue;  // no demotion sets of size zero to score
    ++scored;
    const DemotionReport rep = solve_problem2(inst.graph, inst.leaders, r);
    const double target = 0.5 * r * (1.0 - 1.0 / inst.graph.n);
    for (const auto& [set, value] : rep.table) {
      worst = std::max(worst, std::abs(value - target));
    }
    pass = pass && !rep.table.empty();
  }
  const double elapsed = seconds_since(start);
  pass = pass && worst <= 1e-10 && scored > 0;
  report(3, "demotion-invariance", pass,
         std::to_string(scored) + " instances scored, worst value gap " +
             fmt(worst),
         elapsed);
}

void check_relative_error_law(const std::vector<testutil::CorpusInstance>& corpus) {
  const auto start = Clock::now();
  double worst = 0.0;
  for (const auto& inst : corpus) {
    const std::vector<int> closed =
        solve_problem1_closed_form(inst.leaders, inst.demoted);
    const LeaderAssignment a =
        assignment_from_sets(inst.leaders, inst.demoted, closed);
    const H2Report rep = make_h2_report(
        observability_gramian(inst.graph.n),
        build_input_matrix(inst.graph.n, a, InputMatrixKind::Original),
        build_input_matrix(inst.graph.n, a, InputMatrixKind::New));
    const double law =
        std::sqrt(static_cast<double>(a.r()) / static_cast<double>(a.m()));
    worst = std::max(worst, std::abs(rep.rel_error - law));
  }
  const double elapsed = seconds_since(start);
  report(4, "relative-error-law", worst <= 1e-10,
         std::to_string(corpus.size()) + " instances, worst ratio gap " +
             fmt(worst),
         elapsed);
}

void check_gramian_agreement(const std::vector<testutil::CorpusInstance>& corpus) {
  const auto start = Clock::now();
  double worst_agree = 0.0;
  double worst_spectrum = 0.0;
  for (const auto& inst : corpus) {
    const GraphMatrices gm = derive_matrices(inst.graph);
    const Eigen::MatrixXd Wo = observability_gramian(gm.n());
    worst_agree = std::max(
        worst_agree, (Wo - gramian_spectral_oracle(gm.laplacian))
                         .lpNorm<Eigen::Infinity>());
    const Eigen::VectorXd ev =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(Wo,
                                                       Eigen::EigenvaluesOnly)
            .eigenvalues();
    worst_spectrum = std::max(worst_spectrum, std::abs(ev(0)));
    for (int i = 1; i < gm.n(); ++i) {
      worst_spectrum = std::max(worst_spectrum, std::abs(ev(i) - 0.5));
    }
  }
  const double elapsed = seconds_since(start);
  report(5, "gramian-agreement", worst_agree <= 1e-8 && worst_spectrum <= 1e-9,
         "worst oracle gap " + fmt(worst_agree) + ", worst eigenvalue gap " +
             fmt(worst_spectrum),
         elapsed);
}

// ---------------------------------------------------------------------------
// [6] frequency-quadrature certification of the trace form.
// ---------------------------------------------------------------------------

void check_quadrature(const std::vector<testutil::CorpusInstance>& corpus) {
  const auto start = Clock::now();
  const double omega = 1e3;
  bool pass = true;
  int tested = 0;
  double worst_margin = 0.0;  // |estimate - f| / certified tolerance
  for (const auto& inst : corpus) {
    if (inst.demoted.empty()) continue;  // identical systems certify trivially
    const GraphMatrices gm = derive_matrices(inst.graph);
    const std::vector<int> closed =
        solve_problem1_closed_form(inst.leaders, inst.demoted);
    const LeaderAssignment a =
        assignment_from_sets(inst.leaders, inst.demoted, closed);
    const Eigen::MatrixXd M =
        build_input_matrix(gm.n(), a, InputMatrixKind::Original);
    const Eigen::MatrixXd Mt =
        build_input_matrix(gm.n(), a, InputMatrixKind::New);
    const double f = h2_error_sq_consensus(M, Mt);
    // Enough points that the grid resolves the narrowest spectral peak;
    // never fewer than 1e5.
    const double lambda2 = decompose_laplacian(gm.laplacian).lambda2();
    const int points = static_cast<int>(std::max(
        100001.0, std::min(4000001.0, std::ceil(10.0 * omega / lambda2))));
    const QuadratureResult q =
        h2_error_quadrature_oracle(gm, M, Mt, omega, points);
    const double gap = std::abs(q.estimate - f);
    pass = pass && gap <= q.tolerance && q.tolerance > 0.0;
    worst_margin = std::max(worst_margin, gap / q.tolerance);
    if (++tested == 20) break;
  }
  const double elapsed = seconds_since(start);
  pass = pass && tested == 20 && elapsed < 30.0;
  char margin[64];
  std::snprintf(margin, sizeof margin, "%.8f", worst_margin);
  report(6, "quadrature-certification", pass,
         std::to_string(tested) + " instances, worst gap/tolerance " + margin,
         elapsed);
}

// ---------------------------------------------------------------------------
// [7] relaxation calculus: gradient, quadratic exactness, descent.
// ---------------------------------------------------------------------------

void check_relaxation(const std::vector<testutil::CorpusInstance>& corpus) {
  const auto start = Clock::now();
  std::mt19937_64 rng(20260816);
  bool pass = true;
  double worst_fd = 0.0;
  double worst_quad = 0.0;
  double worst_obj = 0.0;
  for (const auto& inst : corpus) {
    const int n = inst.graph.n;
    const std::vector<int> closed =
        solve_problem1_closed_form(inst.leaders, inst.demoted);
    const LeaderAssignment a =
        assignment_from_sets(inst.leaders, inst.demoted, closed);
    const Eigen::MatrixXd Wo = observability_gramian(n);
    const Eigen::MatrixXd M =
        build_input_matrix(n, a, InputMatrixKind::Original);
    const std::vector<int> J = a.demoted_positions();
    const double target = 0.5 * a.r() * (1.0 - 1.0 / n);

    for (int trial = 0; trial < 2; ++trial) {
      const SubspacePoint X = subspace_point(
          testutil::random_matrix(rng, n, a.m(), -10.0, 10.0), J);
      const Eigen::MatrixXd grad = relaxed_gradient(Wo, M, X);
      worst_fd = std::max(worst_fd, (grad - testutil::fd_gradient(Wo, M, X))
                                        .lpNorm<Eigen::Infinity>());

      const Eigen::MatrixXd D_raw =
          testutil::random_matrix(rng, n, a.m(), -3.0, 3.0);
      const SubspacePoint XD = subspace_point(X.matrix + D_raw, J);
      const Eigen::MatrixXd D = XD.matrix - X.matrix;
      const double model = relaxed_objective(Wo, M, X) +
                           (grad.array() * D.array()).sum() +
                           0.5 * (D.array() *
                                  hessian_apply(Wo, X, D).array())
                                     .sum();
      worst_quad = std::max(
          worst_quad, std::abs(relaxed_objective(Wo, M, XD) - model));
    }

    DescentOptions options;
    options.record_trace = false;
    const DescentTrace from_zero = solve_relaxed(
        Wo, M, subspace_point(Eigen::MatrixXd::Zero(n, a.m()), J), options);
    const DescentTrace from_random = solve_relaxed(
        Wo, M,
        subspace_point(testutil::random_matrix(rng, n, a.m(), -10.0, 10.0),
                       J),
        options);
    pass = pass && from_zero.converged && from_random.converged &&
           from_zero.iterations <= 10000 && from_random.iterations <= 10000;
    worst_obj = std::max(
        worst_obj,
        std::abs(relaxed_objective(Wo, M, from_zero.final_point) - target));
    worst_obj = std::max(
        worst_obj,
        std::abs(relaxed_objective(Wo, M, from_random.final_point) - target));
  }
  const double elapsed = seconds_since(start);
  pass = pass && worst_fd <= 1e-5 && worst_quad <= 1e-10 &&
         worst_obj <= 1e-8;
  report(7, "relaxation-calculus", pass,
         "worst fd gap " + fmt(worst_fd) + ", quad residual " +
             fmt(worst_quad) + ", objective gap " + fmt(worst_obj),
         elapsed);
}

// ---------------------------------------------------------------------------
// [8] time-domain output-gap bound.
// ---------------------------------------------------------------------------

void check_output_gap_bound() {
  const auto start = Clock::now();
  const auto corpus = testutil::random_corpus(200, 777, 1);
  std::mt19937_64 rng(424242);
  bool pass = true;
  double worst_slack = 0.0;
  for (const auto& inst : corpus) {
    const std::vector<int> closed =
        solve_problem1_closed_form(inst.leaders, inst.demoted);
    const LeaderAssignment a =
        assignment_from_sets(inst.leaders, inst.demoted, closed);
    const GraphMatrices gm = derive_matrices(inst.graph);
    Eigen::VectorXd amp(a.m());
    for (int l = 0; l < a.m(); ++l) {
      const double mag = uniform_real(rng, 0.5, 2.0);
      amp(l) = uniform_unit(rng) < 0.5 ? -mag : mag;
    }
    const InputSignal u =
        exp_decay_signal(amp, uniform_real(rng, 0.25, 2.0));
    const double lambda_max =
        decompose_laplacian(gm.laplacian).lambda_max();
    SimulationOptions options;
    options.store_trajectory = false;
    options.dt = std::min(0.02, 0.5 / lambda_max);
    const SimulationTrace trace = verify_lemma1(gm, a, u, options);
    pass = pass && trace.bound_holds && trace.slack_ratio <= 1.005;
    worst_slack = std::max(worst_slack, trace.slack_ratio);
  }

  // Step-halving stability of the recorded gap: the worked example plus the
  // first few corpus cases, each over a fixed window at dt and dt/2.
  double worst_halving = 0.0;
  {
    std::vector<testutil::CorpusInstance> cases;
    cases.push_back({testutil::example5_graph(), {1, 2, 3}, {1}});
    for (std::size_t i = 0; i < 5; ++i) cases.push_back(corpus[i]);
    for (const auto& inst : cases) {
      const std::vector<int> closed =
          solve_problem1_closed_form(inst.leaders, inst.demoted);
      const LeaderAssignment a =
          assignment_from_sets(inst.leaders, inst.demoted, closed);
      const GraphMatrices gm = derive_matrices(inst.graph);
      const InputSignal u =
          exp_decay_signal(Eigen::VectorXd::Ones(a.m()), 1.0);
      const double lambda_max =
          decompose_laplacian(gm.laplacian).lambda_max();
      SimulationOptions options;
      options.store_trajectory = false;
      options.horizon = 20.0;
      options.dt = std::min(1e-3, 0.05 / lambda_max);
      const SimulationTrace coarse = verify_lemma1(gm, a, u, options);
      options.dt *= 0.5;
      const SimulationTrace fine = verify_lemma1(gm, a, u, options);
      worst_halving = std::max(
          worst_halving,
          std::abs(coarse.linf_output_gap - fine.linf_output_gap));
    }
  }

  const double elapsed = seconds_since(start);
  pass = pass && worst_halving <= 1e-6;
  report(8, "output-gap-bound", pass,
         std::to_string(corpus.size()) + " cases, max slack " +
             fmt(worst_slack) + ", halving shift " + fmt(worst_halving),
         elapsed);
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  check_structural_gate();
  check_tables();
  const auto corpus = testutil::random_corpus(500, 20240816);
  check_closed_form_argmin(corpus);
  check_demotion_invariance(corpus);
  check_relative_error_law(corpus);
  check_gramian_agreement(corpus);
  check_quadrature(corpus);
  check_relaxation(corpus);
  check_output_gap_bound();
  if (g_failures == 0) {
    std::printf("all checks passed\n");
    return 0;
  }
  std::printf("%d check(s) failed\n", g_failures);
  return 1;
}
