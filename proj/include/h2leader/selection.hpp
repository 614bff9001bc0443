#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "h2leader/graph.hpp"
#include "h2leader/system.hpp"

namespace h2leader {

struct Candidate {
  std::vector<int> new_leader_set;
  double f_value = 0.0;
};

struct SelectionReport {
  std::vector<Candidate> candidates;           // lexicographic by set
  std::vector<std::vector<int>> minimizers;    // all argmin sets
  std::vector<int> closed_form_solution;       // leaders \ demoted
  double min_f = 0.0;
  bool exhaustive = true;
};

struct EnumerationOptions {
  std::uint64_t cap = 10'000'000;
  /// When set and the candidate count exceeds the cap, draw this many
  /// subsets uniformly instead of failing. Clearly non-exhaustive.
  std::optional<std::uint64_t> sample_count;
  std::uint64_t seed = 0;
};

/// Capped binomial coefficient: returns min(C(a, b), cap + 1) without
/// overflowing.
std::uint64_t binomial_capped(int a, int b, std::uint64_t cap);

/// Enumerates every feasible replacement set of size m - r inside
/// V \ demoted, evaluates f through the trace form under the pairing
/// convention, and reports all minimizers. Throws CombinatorialBlowup when
/// the count exceeds the cap and no sampling is configured.
SelectionReport solve_problem1_bruteforce(
    const WeightedGraph& g, std::vector<int> leaders, std::vector<int> demoted,
    const EnumerationOptions& options = {});

/// The closed-form optimum: the surviving original leaders. Needs no graph
/// data. Throws NotASubset.
std::vector<int> solve_problem1_closed_form(std::vector<int> leaders,
                                            std::vector<int> demoted);

struct DemotionReport {
  /// (demotion set, g value) for every size-r subset, lexicographic.
  std::vector<std::pair<std::vector<int>, double>> table;
  /// The common value (r/2)(1 - 1/n).
  double constant = 0.0;
  /// max |g - constant| over the table.
  double max_deviation = 0.0;
};

/// Enumerates all demotion sets of size r, scoring each through the
/// closed-form selection plus the trace form.
DemotionReport solve_problem2(const WeightedGraph& g, std::vector<int> leaders,
                              int r, std::uint64_t cap = 10'000'000);

}  // namespace h2leader
