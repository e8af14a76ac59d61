#pragma once

#include <functional>
#include <vector>

#include "mwss/graph.hpp"
#include "mwss/solve_stats.hpp"

namespace mwss {

/// The tuple (K, c, d, H, Z) both decomposition solvers work in: K is a
/// component of G \ N[c], d a neighbour of c with a neighbour in K,
/// H = N(d) ∩ K and Z = K \ H. `live` is the part of K still unsolved.
///
/// A synthetic context reuses the shape for an isolated component T of G[Z]:
/// the old d plays c, a vertex h0 of H with neighbours in T plays d, and
/// H becomes N(h0) ∩ T.
struct ComponentContext {
  const Graph* host = nullptr;
  VertexSet k;
  int c = -1;
  int d = -1;
  VertexSet h;
  VertexSet z;
  VertexSet live;
  bool synthetic = false;

  const Graph& graph() const { return *host; }
};

/// Context for component k of G \ N[c] with d the smallest suitable
/// neighbour of c. Throws NotInClassError if no neighbour of c reaches k.
ComponentContext make_context(const Graph& g, int c, const VertexSet& k);

/// Checks the context invariants; throws InputError on violation.
void validate_context(const ComponentContext& ctx);

/// Red Z-edges of G[live] and the resulting scores.
///
/// uv (u, v ∈ Z ∩ live) is red when some h', h'' ∈ H ∩ live make h'-u-v-h''
/// an induced P4; score[h] counts red edges with an endpoint in N(h).
struct RedEdgeIndex {
  std::vector<Edge> red;
  std::vector<int> score;  ///< host-indexed; zero outside H ∩ live

  int score_of(int h) const { return score[h]; }
};

RedEdgeIndex red_index(const Graph& g, const VertexSet& h, const VertexSet& z,
                       const VertexSet& live);
inline RedEdgeIndex red_index(const ComponentContext& ctx) {
  return red_index(ctx.graph(), ctx.h, ctx.z, ctx.live);
}

/// Branch-and-bound leaf on G[within] with the configured budget.
Solution leaf_solve(const Graph& g, const VertexWeights& w, const VertexSet& within,
                    const SolverOptions& opts, SolveStats& stats);

/// Heavier of two branch results; the first wins ties.
inline const Solution& better(const Solution& a, const Solution& b) {
  return b.weight > a.weight ? b : a;
}

using ContextSolver = std::function<Solution(const ComponentContext&, SolveStats&)>;

/// MWSS on a connected graph as the best, over every vertex c, of
/// w(c) plus the optimum of each component K of G \ N[c]. Components with no
/// C5 and no C7 go to a leaf; the rest are handed to `solve_context`.
Solution solve_by_contexts(const Graph& g, const VertexWeights& w, const SolverOptions& opts,
                           SolveStats& stats, const ContextSolver& solve_context);

}  // namespace mwss
