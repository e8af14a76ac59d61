#include "mwss/s123bull.hpp"

#include <algorithm>

#include "mwss/modular.hpp"
#include "mwss/patterns.hpp"

namespace mwss::s123bull {

int pick_h0(const ComponentContext& ctx) {
  const Graph& g = ctx.graph();
  const VertexSet hl = ctx.h & ctx.live;
  if (hl.empty()) throw NotInClassError("context with no H-vertex left", {});

  const RedEdgeIndex idx = red_index(ctx);
  if (!idx.red.empty()) {
    int best = hl.first();
    for (int h : hl)
      if (idx.score_of(h) > idx.score_of(best)) best = h;
    return best;
  }
  const VertexSet zl = ctx.z & ctx.live;
  for (int h : hl)
    if (g.neighbors(h).intersects(zl)) return h;
  return hl.first();
}

namespace {

Solution peel(const ComponentContext& ctx, const VertexWeights& w, const SolverOptions& opts,
              SolveStats& st, int depth) {
  const Graph& g = ctx.graph();
  ++st.recursions;
  st.max_depth = std::max<std::int64_t>(st.max_depth, depth);

  ++st.c5_scans;
  const auto c5 = find_hole(g, 5, ctx.live);
  if (!c5) return leaf_solve(g, w, ctx.live, opts, st);

  if (opts.check_claims) {
    int q = 0;
    for (int v : *c5) q += ctx.h.contains(v);
    if (q == 0) throw NotInClassError("C5 inside Z", *c5);
  }

  const int h0 = pick_h0(ctx);
  const VertexSet rest = ctx.live - g.neighbors(h0);
  if (opts.check_claims) {
    ++st.c5_scans;
    if (auto survivor = find_hole(g, 5, rest))
      throw NotInClassError("a C5 survives removing N(h0)", *survivor);
  }
  const Solution with_h0 = leaf_solve(g, w, rest, opts, st);

  ComponentContext next = ctx;
  next.live = ctx.live.without(h0);
  const Solution without_h0 = peel(next, w, opts, st, depth + 1);
  return better(with_h0, without_h0);
}

Solution context_entry(const ComponentContext& ctx, const VertexWeights& w,
                       const SolverOptions& opts, SolveStats& st) {
  if (opts.check_claims) {
    ++st.c5_scans;
    if (auto c7 = find_hole(ctx.graph(), 7, ctx.k))
      throw NotInClassError("C7 inside a component context", *c7);
  }
  return peel(ctx, w, opts, st, 0);
}

}  // namespace

Solution solve_component(const ComponentContext& ctx, const VertexWeights& w,
                         const SolverOptions& opts, SolveStats* stats) {
  if (opts.check_claims) validate_context(ctx);
  SolveStats local;
  return context_entry(ctx, w, opts, stats ? *stats : local);
}

Solution solve_prime(const Graph& g, const VertexWeights& w, const SolverOptions& opts,
                     SolveStats* stats) {
  SolveStats local;
  return solve_by_contexts(g, w, opts, stats ? *stats : local,
                           [&](const ComponentContext& ctx, SolveStats& st) {
                             return context_entry(ctx, w, opts, st);
                           });
}

Solution solve(const Graph& g, const VertexWeights& w, const SolverOptions& opts,
               SolveStats* stats) {
  SolveStats local;
  SolveStats& st = stats ? *stats : local;
  return solve_via_modules(g, w, [&](const Graph& pg, const VertexWeights& pw) {
    return solve_prime(pg, pw, opts, &st);
  });
}

}  // namespace mwss::s123bull
