#pragma once

#include "mwss/context.hpp"
#include "mwss/graph.hpp"
#include "mwss/solve_stats.hpp"

/// Exact MWSS for (S1,2,3, bull)-free graphs.
///
/// Same outer shape as the P7 solver. Inside a context K has no odd hole of
/// length 7 or more, so once the live part is C5-free a leaf is exact. While
/// a C5 remains, one H-vertex h0 is peeled: live \ N(h0) is C5-free and goes
/// to a leaf, live \ {h0} recurses.
namespace mwss::s123bull {

/// H-vertex of maximum red-edge score if a red edge exists, else the smallest
/// H-vertex with a neighbour in Z, else the smallest H-vertex (all within live).
int pick_h0(const ComponentContext& ctx);

Solution solve_component(const ComponentContext& ctx, const VertexWeights& w,
                         const SolverOptions& opts = {}, SolveStats* stats = nullptr);

Solution solve_prime(const Graph& g, const VertexWeights& w, const SolverOptions& opts = {},
                     SolveStats* stats = nullptr);

/// MWSS on any (S1,2,3, bull)-free graph.
Solution solve(const Graph& g, const VertexWeights& w, const SolverOptions& opts = {},
               SolveStats* stats = nullptr);

}  // namespace mwss::s123bull
