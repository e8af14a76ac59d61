#pragma once

#include <cstdint>
#include <stdexcept>

#include "mwss/graph.hpp"

namespace mwss {

inline constexpr std::int64_t kDefaultNodeBudget = 10'000'000;
inline constexpr std::int64_t kOracleNodeBudget = 1'000'000'000;

/// Thrown when branch-and-bound exceeds its node budget. Carries the best
/// stable set found so far, which is feasible but not certified optimal.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(Solution best, std::int64_t nodes)
      : std::runtime_error("branch-and-bound node budget exhausted"), best_(best), nodes_(nodes) {}
  const Solution& best() const { return best_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  Solution best_;
  std::int64_t nodes_;
};

/// Exact maximum weight stable set of G[within] by branch-and-bound.
///
/// Branches on a maximum-degree vertex of the remaining candidates (include it
/// and drop its closed neighborhood, or exclude it), bounding with a greedy
/// weighted clique cover. Ties break toward smaller indices, so results are
/// reproducible. `nodes_out`, when given, receives the number of search nodes.
Solution exact_mwss(const Graph& g, const VertexWeights& w, const VertexSet& within,
                    std::int64_t node_budget = kDefaultNodeBudget,
                    std::int64_t* nodes_out = nullptr);

inline Solution exact_mwss(const Graph& g, const VertexWeights& w,
                           std::int64_t node_budget = kDefaultNodeBudget) {
  return exact_mwss(g, w, g.vertices(), node_budget);
}

/// True iff sol.set is a stable set of G and sol.weight is its weight.
bool verify_solution(const Graph& g, const VertexWeights& w, const Solution& sol);

}  // namespace mwss
