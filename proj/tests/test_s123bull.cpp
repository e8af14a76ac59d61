#include <doctest.h>

#include "fixtures.hpp"
#include "mwss/context.hpp"
#include "mwss/exact.hpp"
#include "mwss/generator.hpp"
#include "mwss/patterns.hpp"
#include "mwss/s123bull.hpp"
#include "oracles.hpp"
#include "prime_pool.hpp"

using namespace mwss;

namespace {

ComponentContext context_for(const Graph& g) {
  const auto parts = anti_neighborhood_components(g, 0);
  REQUIRE(parts.size() == 1);
  return make_context(g, 0, parts[0]);
}

// The selection rule spelled out directly on the definitions.
int reference_h0(const ComponentContext& ctx) {
  const Graph& g = ctx.graph();
  const VertexSet hl = ctx.h & ctx.live;
  const VertexSet zl = ctx.z & ctx.live;
  std::vector<int> score(g.order(), 0);
  bool any_red = false;
  for (int u : zl)
    for (int v : zl) {
      if (v <= u || !g.adjacent(u, v)) continue;
      bool red = false;
      for (int a : hl)
        for (int b : hl)
          red = red || (g.adjacent(a, u) && !g.adjacent(a, v) && g.adjacent(b, v) &&
                        !g.adjacent(b, u) && !g.adjacent(a, b));
      if (!red) continue;
      any_red = true;
      for (int h : hl) score[h] += g.adjacent(h, u) || g.adjacent(h, v);
    }
  if (any_red) {
    int best = hl.first();
    for (int h : hl)
      if (score[h] > score[best]) best = h;
    return best;
  }
  for (int h : hl)
    if (g.neighbors(h).intersects(zl)) return h;
  return hl.first();
}

}  // namespace

TEST_CASE("solve examples") {
  CHECK(s123bull::solve(fx::cycle(5), VertexWeights::uniform(5)).weight == 2);
  const Graph claw = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(in_class(claw, GraphClass::S123Bull).member);
  CHECK(s123bull::solve(claw, VertexWeights::uniform(4)).weight == 3);
}

TEST_CASE("pick_h0") {
  SUBCASE("tie on score") {
    const Graph g =
        build_graph(8, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {4, 5}, {5, 3}, {4, 6}, {6, 7}});
    CHECK(s123bull::pick_h0(context_for(g)) == 2);
  }
  SUBCASE("unique maximum") {
    // As above plus h = 8 seeing both 4 and 6, so it touches two red edges.
    const Graph g = build_graph(9, {{0, 1}, {1, 2}, {1, 3}, {1, 8}, {2, 4}, {4, 5}, {5, 3},
                                    {4, 6}, {6, 7}, {8, 6}, {8, 5}});
    const auto ctx = context_for(g);
    CHECK(s123bull::pick_h0(ctx) == reference_h0(ctx));
    CHECK_FALSE(red_index(ctx).red.empty());
  }
  SUBCASE("no red edge") {
    const Graph g = build_graph(5, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    const auto ctx = context_for(g);
    CHECK(red_index(ctx).red.empty());
    CHECK(s123bull::pick_h0(ctx) == 3);
  }
  SUBCASE("no Z left") {
    const Graph g = build_graph(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(s123bull::pick_h0(context_for(g)) == 2);
  }
  SUBCASE("no H left") {
    auto ctx = context_for(fx::path(5));
    ctx.live = ctx.z;
    CHECK_THROWS_AS(s123bull::pick_h0(ctx), NotInClassError);
  }
}

TEST_CASE("solve_component") {
  SUBCASE("C5-free") {
    const Graph g = fx::path(6);
    const auto ctx = context_for(g);
    const auto w = VertexWeights({3, 1, 4, 1, 5, 9});
    CHECK(s123bull::solve_component(ctx, w).weight == exact_mwss(g, w, ctx.k).weight);
  }
  SUBCASE("one type-1 C5") {
    const Graph g = build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 2}});
    const auto ctx = context_for(g);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto w = random_weights(7, 0, 50, seed);
      CHECK(s123bull::solve_component(ctx, w).weight == oracle::brute_mwss(g, w, ctx.k));
    }
  }
  SUBCASE("a C7 in K is rejected") {
    const Graph g = build_graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 2}});
    CHECK_THROWS_AS(s123bull::solve_component(context_for(g), VertexWeights::uniform(9)),
                    NotInClassError);
  }
}

TEST_CASE("randomized prime contexts") {
  const auto pool = prime_pool(GenClass::S123Bull, 700, 7);
  int contexts = 0;
  for (std::size_t i = 0; i < pool.size() && contexts < 200; ++i) {
    const Graph& g = pool[i];
    const auto w = random_weights(g.order(), 0, 100, i);
    for (int c = 0; c < g.order(); ++c) {
      for (const VertexSet& k : anti_neighborhood_components(g, c)) {
        if (k.size() < 5 || !find_hole(g, 5, k)) continue;
        ++contexts;
        const auto ctx = make_context(g, c, k);
        CHECK(s123bull::pick_h0(ctx) == reference_h0(ctx));
        SolveStats st;
        CHECK(s123bull::solve_component(ctx, w, {}, &st).weight == oracle::brute_mwss(g, w, k));
        CHECK(st.max_depth <= ctx.h.size());
      }
    }
    CHECK(s123bull::solve_prime(g, w).weight == exact_mwss(g, w).weight);
  }
  CHECK(contexts > 0);
  MESSAGE("prime contexts checked: " << contexts);
}

TEST_CASE("random in-class graphs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 6 + static_cast<int>(seed % 15);
    const Graph g = random_in_class(n, 0.15 + 0.15 * static_cast<double>(seed % 3),
                                    GenClass::S123Bull, seed);
    const auto w = random_weights(n, 0, 100, seed + 1);
    const Solution s = s123bull::solve(g, w);
    CHECK(s.weight == exact_mwss(g, w).weight);
    CHECK(verify_solution(g, w, s));
  }
}
