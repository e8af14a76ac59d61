#pragma once

#include <algorithm>
#include <cstdint>

#include "mwss/exact.hpp"

namespace mwss {

struct SolverOptions {
  /// Run the structural claim checks (cycle typing, C5-freeness after
  /// peeling, ring invariants). Exactness never depends on them.
  bool check_claims = true;
  /// Node budget of every branch-and-bound leaf.
  std::int64_t leaf_budget = kDefaultNodeBudget;
  /// Workers for the outer loop over vertices c of a prime graph.
  int threads = 1;
};

/// Counters gathered while solving. `recursions` counts every subproblem
/// handled inside a component context; `max_depth` is the deepest nesting of
/// those subproblems in any single context.
struct SolveStats {
  std::int64_t recursions = 0;
  std::int64_t leaves = 0;
  std::int64_t c5_scans = 0;
  std::int64_t contexts = 0;
  std::int64_t max_depth = 0;
  std::int64_t seven_partitions = 0;
  std::int64_t isolated_components = 0;
  /// A claim-predicted elimination vertex failed its post-condition check.
  std::int64_t claim_misses = 0;
  /// An elimination vertex had to be found by exhaustive search.
  std::int64_t fallbacks = 0;

  void merge(const SolveStats& o) {
    recursions += o.recursions;
    leaves += o.leaves;
    c5_scans += o.c5_scans;
    contexts += o.contexts;
    max_depth = std::max(max_depth, o.max_depth);
    seven_partitions += o.seven_partitions;
    isolated_components += o.isolated_components;
    claim_misses += o.claim_misses;
    fallbacks += o.fallbacks;
  }
};

}  // namespace mwss
