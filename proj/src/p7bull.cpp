#include "mwss/p7bull.hpp"

#include <algorithm>
#include <optional>

#include "mwss/modular.hpp"
#include "mwss/patterns.hpp"

namespace mwss::p7bull {

namespace {

std::vector<int> concat(const Cycle& a, const Cycle& b) {
  std::vector<int> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

class Engine {
 public:
  Engine(const Graph& g, const VertexWeights& w, const SolverOptions& opts, SolveStats& stats)
      : g_(g), w_(w), opts_(opts), stats_(stats) {}

  Solution solve_live(const ComponentContext& ctx, const VertexSet& live, int depth) {
    enter(depth);
    return solve_parts(ctx, live, depth);
  }

  // Type-2 stage: peel the best-scoring H-vertex h, solving (a) live \ N(h)
  // by one-vertex-at-a-time C5 peeling and (b) live \ {h} recursively.
  Solution case2(const ComponentContext& ctx, const VertexSet& part, int depth) {
    ComponentContext view = ctx;
    view.live = part;
    const int h = eliminator_type2(view);
    const Solution with_h = remainder(ctx, part - g_.neighbors(h), depth + 1);
    const Solution without_h = solve_live(ctx, part.without(h), depth + 1);
    return better(with_h, without_h);
  }

  int eliminator01(const ComponentContext& ctx, const VertexSet& part) {
    const auto clears = [&](int x) { return !has_c5_type01(ctx, part - g_.neighbors(x)); };

    std::vector<int> guided;
    if (auto t0 = c5(part & ctx.z)) {
      // Any H-vertex touching the C5-carrying component of G[Z] works.
      const VertexSet t = component_of(g_, part & ctx.z, t0->front());
      for (int h : ctx.h & part) {
        if (g_.neighbors(h).intersects(t)) {
          guided.push_back(h);
          break;
        }
      }
    } else if (auto t1 = c5_type1(ctx, part)) {
      const int h = *std::find_if(t1->begin(), t1->end(), [&](int v) { return ctx.h.contains(v); });
      guided.push_back(h);
      // Otherwise a middle vertex of a type-1 C5 that h does not see.
      if (auto other = c5_type1(ctx, part - g_.neighbors(h))) {
        const auto& cyc = *other;
        const int at = static_cast<int>(
            std::find_if(cyc.begin(), cyc.end(), [&](int v) { return ctx.h.contains(v); }) -
            cyc.begin());
        const int u = cyc[(at + 2) % 5];
        const int v = cyc[(at + 3) % 5];
        guided.push_back(std::min(u, v));
        guided.push_back(std::max(u, v));
      }
    } else {
      throw InputError("eliminator_type01: live part has no C5 of type 0 or 1");
    }

    for (int x : guided)
      if (clears(x)) return x;
    ++stats_.claim_misses;
    for (int x : part) {
      if (clears(x)) {
        ++stats_.fallbacks;
        return x;
      }
    }
    std::vector<int> witness;
    if (auto c = c5_type01(ctx, part)) witness = *c;
    throw NotInClassError("no vertex removes every C5 of type 0 or 1", witness);
  }

 private:
  void enter(int depth) {
    ++stats_.recursions;
    stats_.max_depth = std::max<std::int64_t>(stats_.max_depth, depth);
  }

  std::optional<Cycle> c5(const VertexSet& within) {
    ++stats_.c5_scans;
    return find_hole(g_, 5, within);
  }

  // C5 using exactly one vertex of H, searched one H-vertex at a time.
  std::optional<Cycle> c5_type1(const ComponentContext& ctx, const VertexSet& within) {
    const VertexSet zs = within & ctx.z;
    for (int h : ctx.h & within) {
      ++stats_.c5_scans;
      std::optional<Cycle> found;
      for_each_hole(g_, 5, zs.with(h), [&](const Cycle& c) {
        if (std::find(c.begin(), c.end(), h) == c.end()) return false;
        found = c;
        return true;
      });
      if (found) return found;
    }
    return std::nullopt;
  }

  std::optional<Cycle> c5_type01(const ComponentContext& ctx, const VertexSet& within) {
    if (auto c = c5(within & ctx.z)) return c;
    return c5_type1(ctx, within);
  }

  bool has_c5_type01(const ComponentContext& ctx, const VertexSet& within) {
    return c5_type01(ctx, within).has_value();
  }

  Solution leaf(const VertexSet& part) { return leaf_solve(g_, w_, part, opts_, stats_); }

  Solution solve_parts(const ComponentContext& ctx, const VertexSet& live, int depth) {
    Solution total;
    for (const VertexSet& part : components(g_, live)) total += solve_part(ctx, part, depth);
    return total;
  }

  // `part` is connected.
  Solution solve_part(const ComponentContext& ctx, const VertexSet& part, int depth) {
    if (part.size() < 5) return leaf(part);
    const auto any_c5 = c5(part);
    if (!any_c5) return c5_free(part);
    if (!ctx.h.intersects(part)) return isolated(ctx, part, depth, *any_c5);

    if (auto t0 = c5(part & ctx.z)) {
      if (ctx.synthetic)
        throw NotInClassError("C5 of an isolated component misses N(h0)", *t0);
      if (opts_.check_claims) check_single_c5_component(ctx, part, *t0);
      return peel(ctx, part, eliminator01(ctx, part), depth);
    }
    if (auto t1 = c5_type1(ctx, part)) {
      if (ctx.synthetic)
        throw NotInClassError("C5 of an isolated component meets N(h0) once", *t1);
      return peel(ctx, part, eliminator01(ctx, part), depth);
    }
    return case2(ctx, part, depth);
  }

  // At most one component of G[Z ∩ part] may carry a C5.
  void check_single_c5_component(const ComponentContext& ctx, const VertexSet& part,
                                 const Cycle& first) {
    const VertexSet zs = part & ctx.z;
    const VertexSet t = component_of(g_, zs, first.front());
    for (const VertexSet& other : components(g_, zs - t)) {
      if (other.size() < 5) continue;
      if (auto c = c5(other))
        throw NotInClassError("two components of G[Z] carry a C5", concat(first, *c));
    }
  }

  Solution peel(const ComponentContext& ctx, const VertexSet& part, int x, int depth) {
    const Solution with_x = solve_live(ctx, part - g_.neighbors(x), depth + 1);
    const Solution without_x = solve_live(ctx, part.without(x), depth + 1);
    return better(with_x, without_x);
  }

  // Step (a) of the type-2 stage on A = part \ N(h): while A has a C5
  // t-h1-a-b-h2, branch on the vertex a whose non-neighbourhood in A is C5-free.
  Solution remainder(const ComponentContext& ctx, const VertexSet& a_set, int depth) {
    enter(depth);
    const auto cyc = c5(a_set);
    if (!cyc) return solve_parts(ctx, a_set, depth);

    int q = 0;
    for (int v : *cyc) q += ctx.h.contains(v);
    if (opts_.check_claims) classify_c5(g_, *cyc, ctx.h);
    if (q != 2) {
      if (opts_.check_claims)
        throw NotInClassError("type-2 stage met a C5 of type " + std::to_string(q), *cyc);
      return solve_parts(ctx, a_set, depth);
    }

    // The two cycle vertices outside H that each see exactly one H-vertex.
    std::vector<int> cand;
    for (int i = 0; i < 5; ++i) {
      const int v = (*cyc)[i];
      if (ctx.h.contains(v)) continue;
      const int hs = ctx.h.contains((*cyc)[(i + 1) % 5]) + ctx.h.contains((*cyc)[(i + 4) % 5]);
      if (hs == 1) cand.push_back(v);
    }
    std::sort(cand.begin(), cand.end());

    int chosen = -1;
    std::optional<Cycle> survivor;
    for (int v : cand) {
      survivor = c5(a_set - g_.neighbors(v));
      if (!survivor) {
        chosen = v;
        break;
      }
    }
    if (chosen == -1) {
      if (opts_.check_claims)
        throw NotInClassError("a C5 survives peeling N(h) and N(a)",
                              survivor ? *survivor : *cyc);
      chosen = cand.empty() ? cyc->front() : cand.front();
    }
    const Solution with_a = solve_live(ctx, a_set - g_.neighbors(chosen), depth + 1);
    const Solution without_a = remainder(ctx, a_set.without(chosen), depth + 1);
    return better(with_a, without_a);
  }

  // A C5-carrying component with no H-vertex left: the component T of G[Z]
  // after all of H_0 was peeled. Every C5 of T meets N(h0) in two
  // non-adjacent vertices, so T is solved as a type-2 context around h0.
  Solution isolated(const ComponentContext& ctx, const VertexSet& part, int depth,
                    const Cycle& c5_in_part) {
    if (ctx.synthetic)
      throw NotInClassError("C5 of an isolated component misses N(h0)", c5_in_part);
    int h0 = -1;
    for (int h : ctx.h) {
      if (g_.neighbors(h).intersects(part)) {
        h0 = h;
        break;
      }
    }
    if (h0 == -1) throw NotInClassError("C5-carrying part of Z has no neighbour in H", c5_in_part);
    ++stats_.isolated_components;

    ComponentContext t;
    t.host = ctx.host;
    t.k = part;
    t.c = ctx.d;
    t.d = h0;
    t.h = g_.neighbors(h0) & part;
    t.z = part - t.h;
    t.live = part;
    t.synthetic = true;
    return solve_parts(t, part, depth);
  }

  Solution c5_free(const VertexSet& part) {
    if (part.size() >= 7) {
      ++stats_.c5_scans;
      if (find_hole(g_, 7, part)) {
        try {
          const SevenPartition p = seven_partition(g_, part);
          ++stats_.seven_partitions;
          return case1_solve(g_, w_, p, opts_, &stats_);
        } catch (const NotInClassError&) {
          if (opts_.check_claims) throw;
        }
      }
    }
    return leaf(part);
  }

  const Graph& g_;
  const VertexWeights& w_;
  const SolverOptions& opts_;
  SolveStats& stats_;
};

}  // namespace

SevenPartition seven_partition(const Graph& g, const VertexSet& part) {
  const auto c7 = find_hole(g, 7, part);
  if (!c7) throw InputError("seven_partition: no C7 in the given part");

  SevenPartition p;
  VertexSet used;
  for (int i = 0; i < 7; ++i) {
    p.parts[i] = VertexSet{(*c7)[i]};
    used.insert((*c7)[i]);
  }
  while (used != part) {
    int x = -1;
    for (int v : part - used) {
      if (g.neighbors(v).intersects(used)) {
        x = v;
        break;
      }
    }
    if (x == -1) throw InputError("seven_partition: part is not connected");

    const VertexSet nx = g.neighbors(x);
    int slot = -1;
    for (int j = 0; j < 7 && slot == -1; ++j) {
      const auto& at = [&](int off) -> const VertexSet& { return p.parts[(j + off + 7) % 7]; };
      const bool fits = at(-1).is_subset_of(nx) && at(1).is_subset_of(nx) &&
                        !nx.intersects(at(2) | at(3) | at(-2) | at(-3));
      if (fits) slot = j;
    }
    if (slot == -1) {
      std::vector<int> witness{x};
      witness.insert(witness.end(), c7->begin(), c7->end());
      throw NotInClassError("vertex attaches to the C7 ring in no admissible way", witness);
    }
    p.parts[slot].insert(x);
    used.insert(x);
  }
  if (!ring_invariants_hold(g, p)) throw NotInClassError("ring partition invariants fail", *c7);
  return p;
}

bool ring_invariants_hold(const Graph& g, const SevenPartition& p) {
  for (int i = 0; i < 7; ++i) {
    const VertexSet& a = p.parts[i];
    if (a.empty()) return false;
    for (int off = 1; off <= 3; ++off)
      if (a.intersects(p.parts[(i + off) % 7])) return false;
    if (!is_complete_to(g, a, p.parts[(i + 1) % 7])) return false;
    if (!is_anticomplete_to(g, a, p.parts[(i + 2) % 7] | p.parts[(i + 3) % 7])) return false;
  }
  return true;
}

Solution case1_solve(const Graph& g, const VertexWeights& w, const SevenPartition& p,
                     const SolverOptions& opts, SolveStats* stats) {
  SolveStats local;
  SolveStats& st = stats ? *stats : local;
  std::array<Solution, 7> alpha;
  for (int i = 0; i < 7; ++i) alpha[i] = leaf_solve(g, w, p.parts[i], opts, st);
  Solution best;
  bool first = true;
  for (int i = 0; i < 7; ++i) {
    Solution s = alpha[i];
    s += alpha[(i + 2) % 7];
    s += alpha[(i + 4) % 7];
    if (first || s.weight > best.weight) best = s;
    first = false;
  }
  return best;
}

Solution case1_solve(const ComponentContext& ctx, const VertexWeights& w,
                     const SolverOptions& opts, SolveStats* stats) {
  return case1_solve(ctx.graph(), w, seven_partition(ctx), opts, stats);
}

int eliminator_type2(const ComponentContext& ctx) {
  const RedEdgeIndex idx = red_index(ctx);
  int best = -1;
  for (int h : ctx.h & ctx.live)
    if (best == -1 || idx.score_of(h) > idx.score_of(best)) best = h;
  if (best == -1) throw NotInClassError("type-2 stage with no H-vertex left", {});
  return best;
}

int eliminator_type01(const ComponentContext& ctx, SolveStats* stats) {
  SolveStats local;
  const VertexWeights none = VertexWeights::uniform(ctx.graph().order());
  const SolverOptions opts;
  Engine e(ctx.graph(), none, opts, stats ? *stats : local);
  return e.eliminator01(ctx, ctx.live);
}

Solution case2_solve(const ComponentContext& ctx, const VertexWeights& w,
                     const SolverOptions& opts, SolveStats* stats) {
  SolveStats local;
  Engine e(ctx.graph(), w, opts, stats ? *stats : local);
  return e.case2(ctx, ctx.live, 0);
}

Solution solve_component(const ComponentContext& ctx, const VertexWeights& w,
                         const SolverOptions& opts, SolveStats* stats) {
  if (opts.check_claims && !ctx.synthetic) validate_context(ctx);
  SolveStats local;
  Engine e(ctx.graph(), w, opts, stats ? *stats : local);
  return e.solve_live(ctx, ctx.live, 0);
}

Solution solve_prime(const Graph& g, const VertexWeights& w, const SolverOptions& opts,
                     SolveStats* stats) {
  SolveStats local;
  return solve_by_contexts(g, w, opts, stats ? *stats : local,
                           [&](const ComponentContext& ctx, SolveStats& st) {
                             Engine e(g, w, opts, st);
                             return e.solve_live(ctx, ctx.live, 0);
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

}  // namespace mwss::p7bull
