#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mwss/graph.hpp"
#include "mwss/solve_stats.hpp"

namespace mwss {

enum class BenchFamily { C7Blowup, TwinFixture };

/// Instance of the family on n vertices (n >= 7, resp. n >= 13). Part sizes
/// are spread as evenly as possible, earlier parts taking the remainder.
Graph bench_instance(BenchFamily family, int n);

struct BenchRow {
  int n = 0;
  double time_ms = 0;          ///< median solver wall time
  std::int64_t recursions = 0;
  std::int64_t leaves = 0;
  std::optional<double> oracle_ms;  ///< median; empty when the oracle ran out of budget
  std::int64_t oracle_nodes = 0;
  bool agree = true;           ///< solver weight == oracle weight (when it finished)
};

struct BenchOptions {
  int repeat = 3;
  std::int64_t oracle_budget = kOracleNodeBudget;
  SolverOptions solver;
};

/// Runs the P7 solver and the branch-and-bound oracle on each size, unit weights.
std::vector<BenchRow> run_bench(BenchFamily family, const std::vector<int>& sizes,
                                const BenchOptions& opts);

/// Least-squares slope of log(y) against log(x); points with y <= 0 are skipped.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct BenchSummary {
  double count_slope = 0;             ///< over recursions + leaves
  std::optional<int> largest_oracle_n;
  double speedup = 0;                 ///< oracle / solver time at that n
  bool all_agree = true;
};

BenchSummary summarize(const std::vector<BenchRow>& rows);

}  // namespace mwss
