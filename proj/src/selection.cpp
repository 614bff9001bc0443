#include "h2leader/selection.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "h2leader/metrics.hpp"
#include "h2leader/random.hpp"

namespace h2leader {

namespace {

constexpr double kMinimizerSlack = 1e-9;

/// Calls fn with each c-subset of pool in lexicographic order.
template <typename Fn>
void for_each_combination(const std::vector<int>& pool, int c, Fn&& fn) {
  const int p = static_cast<int>(pool.size());
  if (c == 0) {
    fn(std::vector<int>{});
    return;
  }
  if (c > p) return;
  std::vector<int> idx(static_cast<std::size_t>(c));
  for (int i = 0; i < c; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<int> subset(static_cast<std::size_t>(c));
  while (true) {
    for (int i = 0; i < c; ++i) {
      subset[static_cast<std::size_t>(i)] =
          pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    }
    fn(subset);
    int i = c - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == p - c + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < c; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

std::vector<int> random_subset(std::mt19937_64& rng, std::vector<int> pool,
                               int c) {
  // Partial Fisher-Yates; first c entries are the draw.
  const int p = static_cast<int>(pool.size());
  for (int i = 0; i < c; ++i) {
    const int j = static_cast<int>(uniform_int(rng, i, p - 1));
    std::swap(pool[static_cast<std::size_t>(i)],
              pool[static_cast<std::size_t>(j)]);
  }
  std::vector<int> out(pool.begin(), pool.begin() + c);
  std::sort(out.begin(), out.end());
  return out;
}

void validate_leaders_on_graph(const WeightedGraph& g,
                               const std::vector<int>& leaders) {
  for (int v : leaders) {
    if (v < 1 || v > g.n) {
      throw Error(ErrorCode::InvalidArgument, "leader id out of range 1..n",
                  std::to_string(v));
    }
  }
}

// For error reports: exact count when it fits in a comfortable range,
// otherwise a lower bound.
std::string describe_count(int a, int b) {
  constexpr std::uint64_t kReportCap = 1000000000000000000ULL;  // 1e18
  const std::uint64_t c = binomial_capped(a, b, kReportCap);
  if (c > kReportCap) return "more than " + std::to_string(kReportCap);
  return std::to_string(c);
}

}  // namespace

std::uint64_t binomial_capped(int a, int b, std::uint64_t cap) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  cap = std::min<std::uint64_t>(cap, UINT64_MAX - 1);
  // 128-bit intermediates: the running value stays <= cap (else we bail),
  // so result * num < 2^64 * 2^32 never wraps. The division is exact
  // because the prefix products are themselves binomial coefficients,
  // which also makes the running value nondecreasing — bailing early at
  // the cap is safe.
  unsigned __int128 result = 1;
  for (int i = 1; i <= b; ++i) {
    result = result * static_cast<unsigned __int128>(a - b + i) /
             static_cast<unsigned __int128>(i);
    if (result > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(result);
}

SelectionReport solve_problem1_bruteforce(const WeightedGraph& g,
                                          std::vector<int> leaders,
                                          std::vector<int> demoted,
                                          const EnumerationOptions& options) {
  std::sort(leaders.begin(), leaders.end());
  std::sort(demoted.begin(), demoted.end());
  validate_leaders_on_graph(g, leaders);
  std::vector<int> survivors = solve_problem1_closed_form(leaders, demoted);

  const int m = static_cast<int>(leaders.size());
  const int r = static_cast<int>(demoted.size());
  const int choose = m - r;
  std::vector<int> pool;
  for (int v = 1; v <= g.n; ++v) {
    if (!std::binary_search(demoted.begin(), demoted.end(), v)) {
      pool.push_back(v);
    }
  }

  const std::uint64_t count =
      binomial_capped(static_cast<int>(pool.size()), choose, options.cap);
  bool exhaustive = true;
  std::vector<std::vector<int>> subsets;
  if (count > options.cap) {
    if (!options.sample_count) {
      throw Error(ErrorCode::CombinatorialBlowup,
                  "candidate count exceeds the enumeration cap",
                  "count=" + describe_count(static_cast<int>(pool.size()), choose) +
                      " cap=" + std::to_string(options.cap));
    }
    exhaustive = false;
    std::mt19937_64 rng(options.seed);
    std::set<std::vector<int>> drawn;
    for (std::uint64_t i = 0; i < *options.sample_count; ++i) {
      drawn.insert(random_subset(rng, pool, choose));
    }
    subsets.assign(drawn.begin(), drawn.end());
  } else {
    subsets.reserve(static_cast<std::size_t>(count));
    for_each_combination(pool, choose, [&](const std::vector<int>& subset) {
      subsets.push_back(subset);
    });
  }

  const Eigen::MatrixXd M = build_input_matrix(
      g.n, assignment_from_sets(leaders, {}, leaders), InputMatrixKind::Original);

  SelectionReport report;
  report.exhaustive = exhaustive;
  report.closed_form_solution = survivors;
  report.candidates.reserve(subsets.size());
  for (const std::vector<int>& subset : subsets) {
    const LeaderAssignment a = assignment_from_sets(leaders, demoted, subset);
    const Eigen::MatrixXd Mt = build_input_matrix(g.n, a, InputMatrixKind::New);
    report.candidates.push_back({subset, h2_error_sq_consensus(M, Mt)});
  }

  report.min_f = report.candidates.front().f_value;
  for (const Candidate& c : report.candidates) {
    report.min_f = std::min(report.min_f, c.f_value);
  }
  for (const Candidate& c : report.candidates) {
    if (c.f_value <= report.min_f + kMinimizerSlack) {
      report.minimizers.push_back(c.new_leader_set);
    }
  }
  return report;
}

std::vector<int> solve_problem1_closed_form(std::vector<int> leaders,
                                            std::vector<int> demoted) {
  std::sort(leaders.begin(), leaders.end());
  std::sort(demoted.begin(), demoted.end());
  if (!std::includes(leaders.begin(), leaders.end(), demoted.begin(),
                     demoted.end())) {
    throw Error(ErrorCode::NotASubset,
                "demoted set is not a subset of the leader set");
  }
  std::vector<int> survivors;
  std::set_difference(leaders.begin(), leaders.end(), demoted.begin(),
                      demoted.end(), std::back_inserter(survivors));
  return survivors;
}

DemotionReport solve_problem2(const WeightedGraph& g, std::vector<int> leaders,
                              int r, std::uint64_t cap) {
  std::sort(leaders.begin(), leaders.end());
  validate_leaders_on_graph(g, leaders);
  const int m = static_cast<int>(leaders.size());
  if (r < 1 || r > m) {
    throw Error(ErrorCode::InvalidArgument,
                "demotion count must satisfy 1 <= r <= m", std::to_string(r));
  }
  if (binomial_capped(m, r, cap) > cap) {
    throw Error(ErrorCode::CombinatorialBlowup,
                "demotion-set count exceeds the enumeration cap",
                "count=" + describe_count(m, r) + " cap=" + std::to_string(cap));
  }

  const Eigen::MatrixXd M = build_input_matrix(
      g.n, assignment_from_sets(leaders, {}, leaders), InputMatrixKind::Original);

  DemotionReport report;
  report.constant = structural_h2_formula(g.n, r, 0);
  for_each_combination(leaders, r, [&](const std::vector<int>& demoted) {
    const std::vector<int> survivors =
        solve_problem1_closed_form(leaders, demoted);
    const LeaderAssignment a = assignment_from_sets(leaders, demoted, survivors);
    const Eigen::MatrixXd Mt = build_input_matrix(g.n, a, InputMatrixKind::New);
    const double value = h2_error_sq_consensus(M, Mt);
    report.table.emplace_back(demoted, value);
    report.max_deviation =
        std::max(report.max_deviation, std::abs(value - report.constant));
  });
  if (report.max_deviation > 1e-12) {
    throw Error(ErrorCode::VerificationFailed,
                "demotion-set costs deviate from the constant value",
                "max deviation " + std::to_string(report.max_deviation));
  }
  return report;
}

}  // namespace h2leader
