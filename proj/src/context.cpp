#include "mwss/context.hpp"

#include <exception>
#include <thread>

#include "mwss/patterns.hpp"

namespace mwss {

ComponentContext make_context(const Graph& g, int c, const VertexSet& k) {
  ComponentContext ctx;
  ctx.host = &g;
  ctx.k = k;
  ctx.c = c;
  for (int d : g.neighbors(c)) {
    if (g.neighbors(d).intersects(k)) {
      ctx.d = d;
      break;
    }
  }
  if (ctx.d == -1) {
    std::vector<int> witness{c};
    witness.push_back(k.first());
    throw NotInClassError("no neighbour of c reaches the component (graph not connected)",
                          witness);
  }
  ctx.h = g.neighbors(ctx.d) & k;
  ctx.z = k - ctx.h;
  ctx.live = k;
  return ctx;
}

void validate_context(const ComponentContext& ctx) {
  if (!ctx.host) throw InputError("context without host graph");
  const Graph& g = ctx.graph();
  if (!g.adjacent(ctx.c, ctx.d)) throw InputError("context: d is not a neighbour of c");
  if (!g.neighbors(ctx.d).intersects(ctx.k)) throw InputError("context: d has no neighbour in K");
  if (ctx.h != (g.neighbors(ctx.d) & ctx.k)) throw InputError("context: H != N(d) ∩ K");
  if (ctx.z != ctx.k - ctx.h) throw InputError("context: Z != K \\ H");
  if (!ctx.live.is_subset_of(ctx.k)) throw InputError("context: live part escapes K");
}

RedEdgeIndex red_index(const Graph& g, const VertexSet& h, const VertexSet& z,
                       const VertexSet& live) {
  RedEdgeIndex idx;
  idx.score.assign(g.order(), 0);
  const VertexSet hl = h & live;
  const VertexSet zl = z & live;
  for (int u : zl) {
    for (int v : g.neighbors(u) & zl) {
      if (v < u) continue;
      // h' sees u only, h'' sees v only, and h'h'' is a non-edge.
      const VertexSet left = (hl & g.neighbors(u)) - g.neighbors(v);
      const VertexSet right = (hl & g.neighbors(v)) - g.neighbors(u);
      bool red = false;
      for (int a : left) {
        if (!(right - g.neighbors(a)).empty()) {
          red = true;
          break;
        }
      }
      if (red) idx.red.emplace_back(u, v);
    }
  }
  for (auto [u, v] : idx.red) {
    for (int x : hl & (g.neighbors(u) | g.neighbors(v))) ++idx.score[x];
  }
  return idx;
}

Solution leaf_solve(const Graph& g, const VertexWeights& w, const VertexSet& within,
                    const SolverOptions& opts, SolveStats& stats) {
  ++stats.leaves;
  return exact_mwss(g, w, within, opts.leaf_budget);
}

namespace {

Solution best_through(const Graph& g, const VertexWeights& w, int c, const SolverOptions& opts,
                      SolveStats& stats, const ContextSolver& solve_context) {
  Solution s{VertexSet{c}, w[c]};
  for (const VertexSet& k : anti_neighborhood_components(g, c)) {
    bool plain = k.size() < 5;
    if (!plain) {
      stats.c5_scans += 1;
      plain = !find_hole(g, 5, k) && (k.size() < 7 || !find_hole(g, 7, k));
    }
    if (plain) {
      s += leaf_solve(g, w, k, opts, stats);
    } else {
      ++stats.contexts;
      s += solve_context(make_context(g, c, k), stats);
    }
  }
  return s;
}

}  // namespace

Solution solve_by_contexts(const Graph& g, const VertexWeights& w, const SolverOptions& opts,
                           SolveStats& stats, const ContextSolver& solve_context) {
  const int n = g.order();
  if (n == 0) return {};
  if (!is_connected(g, g.vertices()))
    throw InputError("per-vertex decomposition needs a connected graph");

  std::vector<Solution> per_vertex(n);
  const int workers = std::clamp(opts.threads, 1, n);
  if (workers == 1) {
    for (int c = 0; c < n; ++c) per_vertex[c] = best_through(g, w, c, opts, stats, solve_context);
  } else {
    std::vector<SolveStats> local(workers);
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        for (int c = t; c < n; c += workers) {
          try {
            per_vertex[c] = best_through(g, w, c, opts, local[t], solve_context);
          } catch (...) {
            errors[c] = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& s : local) stats.merge(s);
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  int best = 0;
  for (int c = 1; c < n; ++c)
    if (per_vertex[c].weight > per_vertex[best].weight) best = c;
  return per_vertex[best];
}

}  // namespace mwss
