#include "h2leader/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "h2leader/graph.hpp"
#include "h2leader/graph_io.hpp"
#include "h2leader/metrics.hpp"
#include "h2leader/random.hpp"
#include "h2leader/relaxation.hpp"
#include "h2leader/simulate.hpp"
#include "h2leader/system.hpp"

namespace h2leader::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct CommandConfig {
  std::string graph_path;
  std::vector<int> leaders;
  std::vector<int> demoted;
  std::vector<int> new_leaders;
  std::uint64_t cap = 10'000'000;
  std::uint64_t sample = 0;  // 0 = exhaustive only
  std::uint64_t seed = 0;
  int r = 1;
  double dt = 0.0;  // 0 = auto
  std::string horizon = "auto";
  double step = 0.9;
  double tol = 1e-9;
  int max_iter = 10000;
  int decimals = 4;
  int stride = 1;
  std::string out_path;
  std::string format = "json";
  bool brute_force = false;
  bool with_oracle = false;
  double omega_max = 1e3;
  int points = 100000;
  std::string input_spec = "exp:alpha=1,beta=1";
  std::string x0 = "zero";
  std::string kind;
  int n = 0;
  double edge_prob = 0.5;
  std::vector<double> weight_range;
};

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string full_precision(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_set(const std::vector<int>& s) {
  std::string text = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) text += ',';
    text += std::to_string(s[i]);
  }
  return text + "}";
}

void write_artifact(const std::string& out_path, const std::string& text,
                    std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) {
    throw Error(ErrorCode::ParseError, "cannot open output file", out_path);
  }
  file << text;
}

std::vector<double> split_doubles(const std::string& text, char sep) {
  std::vector<double> values;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    try {
      std::size_t pos = 0;
      values.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::UsageError, "bad numeric value '" + item + "'");
    }
  }
  return values;
}

/// --input grammar: kind[:key=value,...]; kinds exp (alpha, beta), pulse
/// (alpha, width), zero. alpha accepts a ;-separated per-channel list or a
/// single value broadcast to every channel.
InputSignal parse_input_spec(const std::string& spec, int channels) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  std::vector<double> alpha{1.0};
  double beta = 1.0;
  double width = 1.0;
  if (colon != std::string::npos) {
    std::istringstream params(spec.substr(colon + 1));
    std::string kv;
    while (std::getline(params, kv, ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) {
        throw Error(ErrorCode::UsageError,
                    "input parameters look like key=value, got '" + kv + "'");
      }
      const std::string key = kv.substr(0, eq);
      const std::string value = kv.substr(eq + 1);
      if (key == "alpha") {
        alpha = split_doubles(value, ';');
      } else if (key == "beta") {
        beta = split_doubles(value, ';').at(0);
      } else if (key == "width") {
        width = split_doubles(value, ';').at(0);
      } else {
        throw Error(ErrorCode::UsageError, "unknown input parameter '" + key + "'");
      }
    }
  }
  Eigen::VectorXd amplitudes(channels);
  if (alpha.size() == 1) {
    amplitudes.setConstant(alpha[0]);
  } else if (static_cast<int>(alpha.size()) == channels) {
    for (int l = 0; l < channels; ++l) amplitudes(l) = alpha[static_cast<std::size_t>(l)];
  } else {
    throw Error(ErrorCode::UsageError,
                "alpha list length must be 1 or the channel count " +
                    std::to_string(channels));
  }
  if (kind == "exp") return exp_decay_signal(std::move(amplitudes), beta);
  if (kind == "pulse") return pulse_signal(std::move(amplitudes), width);
  if (kind == "zero") return zero_signal(channels);
  throw Error(ErrorCode::UsageError, "unknown input kind '" + kind +
                                         "' (expected exp, pulse, or zero)");
}

/// The replacement set: explicit --new when given, otherwise the surviving
/// original leaders.
std::vector<int> choose_new_set(const CommandConfig& cfg) {
  if (!cfg.new_leaders.empty()) return cfg.new_leaders;
  return solve_problem1_closed_form(cfg.leaders, cfg.demoted);
}

int cmd_validate(const CommandConfig& cfg, std::ostream& out) {
  const WeightedGraph g = read_graph_file(cfg.graph_path);
  const GraphMatrices gm = derive_matrices(g);
  const SpectralDecomposition sd = decompose_laplacian(gm.laplacian);
  const double residual =
      (gm.laplacian -
       gm.incidence * gm.weight_matrix() * gm.incidence.transpose())
          .norm();
  ordered_json j;
  j["n"] = g.n;
  j["k"] = g.edge_count();
  j["connected"] = true;
  j["lambda2"] = sd.lambda2();
  j["lambda_max"] = sd.lambda_max();
  j["factorization_residual"] = residual;
  j["consensus_residual"] =
      (gm.laplacian * Eigen::VectorXd::Ones(g.n)).norm();
  write_artifact(cfg.out_path, j.dump(2) + "\n", out);
  return 0;
}

int cmd_gen(const CommandConfig& cfg, std::ostream& out) {
  WeightedGraph g =
      generate_graph(parse_graph_kind(cfg.kind), cfg.n, cfg.seed, cfg.edge_prob);
  if (!cfg.weight_range.empty()) {
    if (cfg.weight_range.size() != 2 ||
        !(cfg.weight_range[0] > 0.0) ||
        !(cfg.weight_range[0] <= cfg.weight_range[1])) {
      throw Error(ErrorCode::UsageError,
                  "--weights needs wmin,wmax with 0 < wmin <= wmax");
    }
    g = with_log_uniform_weights(g, cfg.seed, cfg.weight_range[0],
                                 cfg.weight_range[1]);
  }
  const bool csv = cfg.out_path.size() > 4 &&
                   cfg.out_path.rfind(".csv") == cfg.out_path.size() - 4;
  write_artifact(cfg.out_path, csv ? graph_to_csv(g) : graph_to_json(g), out);
  return 0;
}

int cmd_h2norm(const CommandConfig& cfg, std::ostream& out) {
  const WeightedGraph g = read_graph_file(cfg.graph_path);
  const LeaderAssignment a =
      assignment_from_sets(cfg.leaders, cfg.demoted, choose_new_set(cfg));
  const Eigen::MatrixXd M =
      build_input_matrix(g.n, a, InputMatrixKind::Original);
  const Eigen::MatrixXd Mt = build_input_matrix(g.n, a, InputMatrixKind::New);
  const H2Report rep = make_h2_report(observability_gramian(g.n), M, Mt);
  ordered_json j;
  j["f"] = rep.f_value;
  j["g_norm_sq"] = rep.g_norm_sq;
  j["rel_error"] = rep.rel_error;
  if (cfg.with_oracle) {
    const QuadratureResult q = h2_error_quadrature_oracle(
        derive_matrices(g), M, Mt, cfg.omega_max, cfg.points);
    j["oracle"] = {{"estimate", q.estimate},
                   {"tail_bound", q.tail_bound},
                   {"quadrature_error_estimate", q.quadrature_error_estimate},
                   {"tolerance", q.tolerance}};
  }
  write_artifact(cfg.out_path, j.dump(2) + "\n", out);
  return 0;
}

ordered_json selection_report_json(const SelectionReport& report) {
  ordered_json j;
  j["exhaustive"] = report.exhaustive;
  j["min_f"] = report.min_f;
  j["minimizers"] = report.minimizers;
  j["candidates"] = ordered_json::array();
  for (const Candidate& c : report.candidates) {
    j["candidates"].push_back({{"set", c.new_leader_set}, {"f", c.f_value}});
  }
  return j;
}

std::string selection_report_csv(const SelectionReport& report) {
  std::string text = "new_leaders,f\n";
  for (const Candidate& c : report.candidates) {
    if (c.new_leader_set.empty()) continue;
    text += '"' + format_set(c.new_leader_set) + "\"," +
            full_precision(c.f_value) + "\n";
  }
  return text;
}

int cmd_select(const CommandConfig& cfg, std::ostream& out) {
  const WeightedGraph g = read_graph_file(cfg.graph_path);
  const std::vector<int> closed =
      solve_problem1_closed_form(cfg.leaders, cfg.demoted);
  const LeaderAssignment a =
      assignment_from_sets(cfg.leaders, cfg.demoted, closed);
  const double f = h2_error_sq_consensus(
      build_input_matrix(g.n, a, InputMatrixKind::Original),
      build_input_matrix(g.n, a, InputMatrixKind::New));

  EnumerationOptions options;
  options.cap = cfg.cap;
  options.seed = cfg.seed;
  if (cfg.sample > 0) options.sample_count = cfg.sample;

  if (cfg.format == "csv") {
    if (!cfg.brute_force) {
      throw Error(ErrorCode::UsageError, "--format csv requires --brute-force");
    }
    const SelectionReport report =
        solve_problem1_bruteforce(g, cfg.leaders, cfg.demoted, options);
    write_artifact(cfg.out_path, selection_report_csv(report), out);
    return 0;
  }

  ordered_json j;
  j["closed_form"] = closed;
  j["f"] = f;
  if (cfg.brute_force) {
    j["brute_force"] = selection_report_json(
        solve_problem1_bruteforce(g, cfg.leaders, cfg.demoted, options));
  }
  write_artifact(cfg.out_path, j.dump(2) + "\n", out);
  return 0;
}

int cmd_demote(const CommandConfig& cfg, std::ostream& out) {
  const WeightedGraph g = read_graph_file(cfg.graph_path);
  const DemotionReport report = solve_problem2(g, cfg.leaders, cfg.r, cfg.cap);
  if (cfg.format == "csv") {
    std::string text = "demoted,g\n";
    for (const auto& [set, value] : report.table) {
      text += '"' + format_set(set) + "\"," + full_precision(value) + "\n";
    }
    write_artifact(cfg.out_path, text, out);
    return 0;
  }
  ordered_json j;
  j["r"] = cfg.r;
  j["constant"] = report.constant;
  j["max_deviation"] = report.max_deviation;
  j["table"] = ordered_json::array();
  for (const auto& [set, value] : report.table) {
    j["table"].push_back({{"demoted", set}, {"g", value}});
  }
  write_artifact(cfg.out_path, j.dump(2) + "\n", out);
  return 0;
}

int cmd_table(const CommandConfig& cfg, std::ostream& out) {
  const WeightedGraph g = read_graph_file(cfg.graph_path);
  EnumerationOptions options;
  options.cap = cfg.cap;
  const SelectionReport report =
      solve_problem1_bruteforce(g, cfg.leaders, cfg.demoted, options);
  write_artifact(cfg.out_path, format_table(report, cfg.decimals), out);
  return 0;
}

int cmd_relax(const CommandConfig& cfg, std::ostream& out) {
  const WeightedGraph g = read_graph_file(cfg.graph_path);
  const LeaderAssignment a = assignment_from_sets(
      cfg.leaders, cfg.demoted,
      solve_problem1_closed_form(cfg.leaders, cfg.demoted));
  const Eigen::MatrixXd Wo = observability_gramian(g.n);
  const Eigen::MatrixXd M =
      build_input_matrix(g.n, a, InputMatrixKind::Original);

  Eigen::MatrixXd X0 = Eigen::MatrixXd::Zero(g.n, a.m());
  if (cfg.x0 == "random") {
    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < X0.rows(); ++i) {
      for (int j = 0; j < X0.cols(); ++j) {
        X0(i, j) = uniform_real(rng, -10.0, 10.0);
      }
    }
  } else if (cfg.x0 != "zero") {
    throw Error(ErrorCode::UsageError, "--x0 must be zero or random");
  }

  DescentOptions options;
  options.step = cfg.step;
  options.tol = cfg.tol;
  options.max_iter = cfg.max_iter;
  const DescentTrace trace = solve_relaxed(
      Wo, M, subspace_point(std::move(X0), a.demoted_positions()), options);

  if (!cfg.out_path.empty()) {
    std::string csv = "iter,h,grad_norm\n";
    for (const DescentStep& s : trace.steps) {
      csv += std::to_string(s.iteration) + ',' + full_precision(s.objective) +
             ',' + full_precision(s.grad_norm) + '\n';
    }
    write_artifact(cfg.out_path, csv, out);
  }

  ordered_json j;
  j["converged"] = trace.converged;
  j["iterations"] = trace.iterations;
  j["objective"] = trace.steps.empty()
                       ? relaxed_objective(Wo, M, trace.final_point)
                       : trace.steps.back().objective;
  j["grad_norm"] =
      trace.steps.empty()
          ? relaxed_gradient(Wo, M, trace.final_point).norm()
          : trace.steps.back().grad_norm;
  j["target"] = structural_h2_formula(g.n, a.r(), 0);
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_simulate(const CommandConfig& cfg, std::ostream& out) {
  const WeightedGraph g = read_graph_file(cfg.graph_path);
  const GraphMatrices gm = derive_matrices(g);
  const LeaderAssignment a =
      assignment_from_sets(cfg.leaders, cfg.demoted, choose_new_set(cfg));
  const InputSignal u = parse_input_spec(cfg.input_spec, a.m());

  SimulationOptions options;
  options.dt = cfg.dt;
  options.stride = cfg.stride;
  options.store_trajectory = !cfg.out_path.empty();
  if (cfg.horizon != "auto") {
    try {
      options.horizon = std::stod(cfg.horizon);
    } catch (const std::exception&) {
      throw Error(ErrorCode::UsageError, "-T expects auto or a number");
    }
  }
  const SimulationTrace trace = verify_lemma1(gm, a, u, options);

  if (!cfg.out_path.empty()) {
    std::ostringstream csv;
    csv << "t";
    for (int i = 1; i <= g.n; ++i) csv << ",x_" << i;
    for (int i = 1; i <= g.n; ++i) csv << ",xt_" << i;
    csv << ",gap\n";
    for (std::size_t row = 0; row < trace.t.size(); ++row) {
      csv << full_precision(trace.t[row]);
      for (int i = 0; i < g.n; ++i) csv << ',' << full_precision(trace.x[row](i));
      for (int i = 0; i < g.n; ++i) {
        csv << ',' << full_precision(trace.x_tilde[row](i));
      }
      csv << ',' << full_precision(trace.gap[row]) << '\n';
    }
    write_artifact(cfg.out_path, csv.str(), out);
  }

  ordered_json j;
  j["linf_output_gap"] = trace.linf_output_gap;
  j["bound_rhs"] = trace.bound_rhs;
  j["h2_error"] = trace.h2_error;
  j["u_l2_norm"] = trace.u_l2_norm;
  j["slack_ratio"] = trace.slack_ratio;
  j["bound_holds"] = trace.bound_holds;
  j["dt"] = trace.dt;
  j["horizon"] = trace.horizon;
  out << j.dump(2) << "\n";
  return 0;
}

/// Central finite differences of the relaxed objective, free entries only.
Eigen::MatrixXd fd_gradient(const Eigen::MatrixXd& Wo, const Eigen::MatrixXd& M,
                            const SubspacePoint& X, double spacing) {
  Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(X.matrix.rows(), X.matrix.cols());
  SubspacePoint probe = X;
  for (int j = 0; j < X.matrix.cols(); ++j) {
    if (std::binary_search(X.zero_columns.begin(), X.zero_columns.end(), j)) {
      continue;
    }
    for (int i = 0; i < X.matrix.rows(); ++i) {
      probe.matrix(i, j) = X.matrix(i, j) + spacing;
      const double up = relaxed_objective(Wo, M, probe);
      probe.matrix(i, j) = X.matrix(i, j) - spacing;
      const double down = relaxed_objective(Wo, M, probe);
      probe.matrix(i, j) = X.matrix(i, j);
      grad(i, j) = (up - down) / (2.0 * spacing);
    }
  }
  return grad;
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out) {
  const WeightedGraph g = read_graph_file(cfg.graph_path);
  const GraphMatrices gm = derive_matrices(g);
  std::vector<int> demoted = cfg.demoted;
  if (demoted.empty()) {
    demoted = {*std::min_element(cfg.leaders.begin(), cfg.leaders.end())};
  }
  const int m = static_cast<int>(cfg.leaders.size());
  const int r = static_cast<int>(demoted.size());
  const double target = structural_h2_formula(g.n, r, 0);

  const auto check = [&](const char* id, bool pass, const std::string& detail) {
    if (!pass) {
      throw Error(ErrorCode::VerificationFailed,
                  std::string("check ") + id + " failed", detail);
    }
    out << "ok " << id << "\n";
  };

  // graph-invariants: factorization, consensus kernel, column structure.
  {
    const double scale = 1e-12 * (1.0 + gm.laplacian.norm());
    const double fact =
        (gm.laplacian -
         gm.incidence * gm.weight_matrix() * gm.incidence.transpose())
            .norm();
    const double ker = (gm.laplacian * Eigen::VectorXd::Ones(g.n)).norm();
    bool columns_ok = true;
    for (int e = 0; e < gm.k(); ++e) {
      const Eigen::VectorXd col = gm.incidence.col(e);
      columns_ok = columns_ok && col.maxCoeff() == 1.0 &&
                   col.minCoeff() == -1.0 && col.cwiseAbs().sum() == 2.0;
    }
    decompose_laplacian(gm.laplacian);  // throws unless exactly one kernel mode
    check("graph-invariants", fact <= scale && ker <= scale && columns_ok,
          "factorization residual " + full_precision(fact));
  }

  // gramian-agreement: closed form vs the spectral construction + spectrum.
  {
    const Eigen::MatrixXd Wo = observability_gramian(g.n);
    const double gap = (Wo - gramian_spectral_oracle(gm.laplacian)).norm();
    Eigen::VectorXd ev =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(Wo, Eigen::EigenvaluesOnly)
            .eigenvalues();
    bool spectrum_ok = std::abs(ev(0)) <= 1e-9;
    for (int i = 1; i < g.n; ++i) {
      spectrum_ok = spectrum_ok && std::abs(ev(i) - 0.5) <= 1e-9;
    }
    check("gramian-agreement", gap <= 1e-8 && spectrum_ok,
          "difference norm " + full_precision(gap));
  }

  // theorem1: the surviving originals are among the brute-force minimizers.
  const std::vector<int> survivors =
      solve_problem1_closed_form(cfg.leaders, demoted);
  {
    EnumerationOptions options;
    options.cap = cfg.cap;
    const SelectionReport report =
        solve_problem1_bruteforce(g, cfg.leaders, demoted, options);
    const bool member =
        std::find(report.minimizers.begin(), report.minimizers.end(),
                  survivors) != report.minimizers.end();
    check("theorem1", member && std::abs(report.min_f - target) <= 1e-10,
          "min_f " + full_precision(report.min_f) + " target " +
              full_precision(target));
  }

  // theorem2: every demotion set of size r costs the same.
  {
    const DemotionReport report = solve_problem2(g, cfg.leaders, r, cfg.cap);
    check("theorem2",
          report.max_deviation <= 1e-12 &&
              std::abs(report.constant - target) <= 1e-12,
          "max deviation " + full_precision(report.max_deviation));
  }

  // corollary1: relative error at the optimum is sqrt(r/m).
  {
    const LeaderAssignment a =
        assignment_from_sets(cfg.leaders, demoted, survivors);
    const H2Report rep = make_h2_report(
        observability_gramian(g.n),
        build_input_matrix(g.n, a, InputMatrixKind::Original),
        build_input_matrix(g.n, a, InputMatrixKind::New));
    check("corollary1",
          std::abs(rep.rel_error - std::sqrt(static_cast<double>(r) / m)) <=
              1e-10,
          "rel_error " + full_precision(rep.rel_error));
  }

  const LeaderAssignment a =
      assignment_from_sets(cfg.leaders, demoted, survivors);
  const Eigen::MatrixXd Wo = observability_gramian(g.n);
  const Eigen::MatrixXd M =
      build_input_matrix(g.n, a, InputMatrixKind::Original);
  const std::vector<int> J = a.demoted_positions();

  // gradient-fd: analytic gradient vs central differences at random points.
  {
    std::mt19937_64 rng(cfg.seed);
    double worst = 0.0;
    bool pass = true;
    for (int trial = 0; trial < 20; ++trial) {
      Eigen::MatrixXd X(g.n, m);
      for (int i = 0; i < g.n; ++i) {
        for (int j = 0; j < m; ++j) X(i, j) = uniform_real(rng, -10.0, 10.0);
      }
      const SubspacePoint p = subspace_point(std::move(X), J);
      const Eigen::MatrixXd grad = relaxed_gradient(Wo, M, p);
      const double gap =
          (grad - fd_gradient(Wo, M, p, 1e-4)).cwiseAbs().maxCoeff();
      worst = std::max(worst, gap);
      pass = pass && gap <= 1e-5 * (1.0 + grad.norm());
    }
    check("gradient-fd", pass, "worst entrywise gap " + full_precision(worst));
  }

  // descent: fixed-step iteration reaches the known optimal value.
  {
    DescentOptions options;
    options.record_trace = false;
    const DescentTrace trace = solve_relaxed(
        Wo, M, subspace_point(Eigen::MatrixXd::Zero(g.n, m), J), options);
    const double value = relaxed_objective(Wo, M, trace.final_point);
    check("descent", trace.converged && std::abs(value - target) <= 1e-8,
          "objective " + full_precision(value));
  }

  // lemma1-bound: worst output gap against the product bound.
  {
    const InputSignal u =
        exp_decay_signal(Eigen::VectorXd::Ones(m), 1.0);
    SimulationOptions options;
    options.store_trajectory = false;
    const SimulationTrace trace = verify_lemma1(gm, a, u, options);
    check("lemma1-bound", trace.bound_holds,
          "slack ratio " + full_precision(trace.slack_ratio));
  }

  return 0;
}

}  // namespace

std::string format_table(const SelectionReport& report, int decimals) {
  if (decimals < 1) {
    throw Error(ErrorCode::InvalidArgument, "decimals must be >= 1",
                std::to_string(decimals));
  }
  std::string text = "new_leaders,f\n";
  for (const Candidate& c : report.candidates) {
    if (c.new_leader_set.empty()) continue;
    text += '"' + format_set(c.new_leader_set) + "\"," +
            fixed(c.f_value, decimals) + "\n";
  }
  return text;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Leader selection and demotion on weighted consensus networks"};
  app.require_subcommand(1);
  CommandConfig cfg;

  const auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", cfg.graph_path, "graph file (JSON or CSV)")
        ->required();
  };
  const auto add_leaders = [&](CLI::App* sub) {
    sub->add_option("--leaders", cfg.leaders, "leader vertex ids")
        ->required()
        ->delimiter(',');
  };
  const auto add_demote = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--demote", cfg.demoted,
                                "leaders to turn into followers")
                    ->delimiter(',');
    if (required) opt->required();
  };
  const auto add_out = [&](CLI::App* sub, const char* what) {
    sub->add_option("--out", cfg.out_path, what);
  };
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* validate = app.add_subcommand("validate", "check a graph file and report its basic spectral facts");
  add_graph(validate);
  add_out(validate, "write the report here instead of stdout");

  auto* gen = app.add_subcommand("gen", "generate a graph (path, ring, complete, or random)");
  gen->add_option("--kind", cfg.kind, "path|ring|complete|random")->required();
  gen->add_option("-n,--vertices", cfg.n, "vertex count")->required();
  gen->add_option("--seed", cfg.seed, "generator seed");
  gen->add_option("--p", cfg.edge_prob, "edge probability (random kind)");
  gen->add_option("--weights", cfg.weight_range,
                  "wmin,wmax: redraw weights log-uniformly")
      ->delimiter(',');
  add_out(gen, "write the graph here instead of stdout");

  auto* h2norm = app.add_subcommand("h2norm", "H2 norm and error report for a leader configuration");
  add_graph(h2norm);
  add_leaders(h2norm);
  add_demote(h2norm, false);
  h2norm->add_option("--new", cfg.new_leaders, "replacement leaders (default: surviving originals)")
      ->delimiter(',');
  h2norm->add_flag("--oracle", cfg.with_oracle,
                   "cross-check with frequency quadrature");
  h2norm->add_option("--omega-max", cfg.omega_max, "quadrature frequency cutoff");
  h2norm->add_option("--points", cfg.points, "quadrature point count");
  add_out(h2norm, "write the report here instead of stdout");

  auto* select = app.add_subcommand("select", "optimal replacement leaders after demotion");
  add_graph(select);
  add_leaders(select);
  add_demote(select, true);
  select->add_flag("--brute-force", cfg.brute_force,
                   "enumerate and score every candidate set");
  select->add_option("--cap", cfg.cap, "enumeration cap");
  select->add_option("--sample", cfg.sample,
                     "sample this many subsets when the cap is exceeded");
  select->add_option("--seed", cfg.seed, "sampling seed");
  add_format(select);
  add_out(select, "write the report here instead of stdout");

  auto* demote = app.add_subcommand("demote", "score every demotion set of a given size");
  add_graph(demote);
  add_leaders(demote);
  demote->add_option("-r,--count", cfg.r, "how many leaders to demote")
      ->required();
  demote->add_option("--cap", cfg.cap, "enumeration cap");
  add_format(demote);
  add_out(demote, "write the report here instead of stdout");

  auto* table = app.add_subcommand("table", "candidate table as fixed-decimal CSV");
  add_graph(table);
  add_leaders(table);
  add_demote(table, true);
  table->add_option("--decimals", cfg.decimals, "fixed decimal places")
      ->check(CLI::PositiveNumber);
  table->add_option("--cap", cfg.cap, "enumeration cap");
  add_out(table, "write the CSV here instead of stdout");

  auto* relax = app.add_subcommand("relax", "gradient descent on the relaxed objective");
  add_graph(relax);
  add_leaders(relax);
  add_demote(relax, true);
  relax->add_option("--x0", cfg.x0, "start point: zero|random");
  relax->add_option("--seed", cfg.seed, "random start seed");
  relax->add_option("--step", cfg.step, "step size in (0, 1]");
  relax->add_option("--tol", cfg.tol, "gradient-norm stopping tolerance");
  relax->add_option("--max-iter", cfg.max_iter, "iteration budget");
  add_out(relax, "write the iteration trace CSV here");

  auto* simulate = app.add_subcommand("simulate", "integrate both systems and check the output-gap bound");
  add_graph(simulate);
  add_leaders(simulate);
  add_demote(simulate, false);
  simulate->add_option("--new", cfg.new_leaders,
                       "replacement leaders (default: surviving originals)")
      ->delimiter(',');
  simulate->add_option("--input", cfg.input_spec,
                       "signal: exp:alpha=1,beta=1 | pulse:alpha=1,width=2 | zero");
  simulate->add_option("--dt", cfg.dt, "step size (default: auto)");
  simulate->add_option("-T,--horizon", cfg.horizon, "horizon: auto or seconds");
  simulate->add_option("--stride", cfg.stride, "keep every stride-th sample in the trace")
      ->check(CLI::PositiveNumber);
  add_out(simulate, "write the trajectory CSV here");

  auto* verify = app.add_subcommand("verify", "run the full self-check suite on one instance");
  add_graph(verify);
  add_leaders(verify);
  add_demote(verify, false);
  verify->add_option("--cap", cfg.cap, "enumeration cap");
  verify->add_option("--seed", cfg.seed, "seed for the randomized checks");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("h2leader");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(cfg, out);
    if (gen->parsed()) return cmd_gen(cfg, out);
    if (h2norm->parsed()) return cmd_h2norm(cfg, out);
    if (select->parsed()) return cmd_select(cfg, out);
    if (demote->parsed()) return cmd_demote(cfg, out);
    if (table->parsed()) return cmd_table(cfg, out);
    if (relax->parsed()) return cmd_relax(cfg, out);
    if (simulate->parsed()) return cmd_simulate(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    err << "no command given\n";
    return 2;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UsageError) {
      err << e.what() << "\n";
      return 2;
    }
    ordered_json j;
    j["error"] = to_string(e.code());
    j["message"] = e.what();
    j["detail"] = e.detail();
    err << j.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    ordered_json j;
    j["error"] = "Internal";
    j["message"] = e.what();
    err << j.dump() << "\n";
    return 1;
  }
}

}  // namespace h2leader::cli
