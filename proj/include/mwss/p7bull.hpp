#pragma once

#include <array>

#include "mwss/context.hpp"
#include "mwss/graph.hpp"
#include "mwss/solve_stats.hpp"

/// Exact MWSS for (P7, bull)-free graphs.
///
/// After modular reduction to prime graphs, the optimum is assembled per
/// vertex c from the components K of G \ N[c]. Each K is solved by peeling
/// C5s by type (how many of their vertices are in H = N(d) ∩ K):
///   - no C5: a leaf, or the seven-set ring decomposition if K has a C7;
///   - type 0 present: peel vertices of H touching the unique C5-carrying
///     component T of G[Z], then solve the isolated T as its own context;
///   - type 1 present: peel a vertex whose non-neighbourhood has no type-0/1 C5;
///   - only type 2: peel the H-vertex of maximum red-edge score, and inside
///     its non-neighbourhood peel one more C5 vertex at a time.
/// Every peel branches on "x in the set" (drop N(x)) versus "x out".
namespace mwss::p7bull {

/// A_1..A_7 with A_i complete to A_{i±1} and anticomplete to A_{i±2}, A_{i±3}.
struct SevenPartition {
  std::array<VertexSet, 7> parts;
};

/// Builds the ring partition of G[part], which must be connected, contain a
/// C7 and no C5. Starts from a C7 and attaches one adjacent vertex at a time
/// to the unique slot whose neighbours it is complete to. Throws
/// NotInClassError if some vertex fits no slot.
SevenPartition seven_partition(const Graph& g, const VertexSet& part);
inline SevenPartition seven_partition(const ComponentContext& ctx) {
  return seven_partition(ctx.graph(), ctx.live);
}

bool ring_invariants_hold(const Graph& g, const SevenPartition& p);

/// max_i α(A_i) + α(A_i+2) + α(A_i+4), each term from a leaf solve.
Solution case1_solve(const Graph& g, const VertexWeights& w, const SevenPartition& p,
                     const SolverOptions& opts = {}, SolveStats* stats = nullptr);
Solution case1_solve(const ComponentContext& ctx, const VertexWeights& w,
                     const SolverOptions& opts = {}, SolveStats* stats = nullptr);

/// Vertex of H ∩ live with the largest red-edge score (smallest index on ties).
int eliminator_type2(const ComponentContext& ctx);

/// A vertex x of live such that live \ N(x) has no C5 of type 0 or 1.
int eliminator_type01(const ComponentContext& ctx, SolveStats* stats = nullptr);

/// Type-2 stage on ctx.live (which must hold no C5 of type 0 or 1).
Solution case2_solve(const ComponentContext& ctx, const VertexWeights& w,
                     const SolverOptions& opts = {}, SolveStats* stats = nullptr);

/// α_w of G[ctx.live] by the full type dispatch.
Solution solve_component(const ComponentContext& ctx, const VertexWeights& w,
                         const SolverOptions& opts = {}, SolveStats* stats = nullptr);

/// MWSS on a prime (hence connected) graph of the class.
Solution solve_prime(const Graph& g, const VertexWeights& w, const SolverOptions& opts = {},
                     SolveStats* stats = nullptr);

/// MWSS on any (P7, bull)-free graph.
Solution solve(const Graph& g, const VertexWeights& w, const SolverOptions& opts = {},
               SolveStats* stats = nullptr);

}  // namespace mwss::p7bull
