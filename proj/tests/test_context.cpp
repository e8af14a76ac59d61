#include <doctest.h>

#include "fixtures.hpp"
#include "mwss/context.hpp"
#include "mwss/exact.hpp"
#include "mwss/generator.hpp"

using namespace mwss;

TEST_CASE("make_context") {
  const Fixture f = fixture_counterexample();
  const auto ctx = make_context(f.graph, f.c, f.k);
  CHECK(ctx.d == 1);
  CHECK(ctx.h == VertexSet{2, 3, 4, 5, 6});
  CHECK(ctx.z == VertexSet{7, 8, 9, 10, 11, 12});
  CHECK(ctx.live == ctx.k);
  CHECK_NOTHROW(validate_context(ctx));

  auto bad = ctx;
  bad.live.insert(0);
  CHECK_THROWS_AS(validate_context(bad), InputError);
  bad = ctx;
  bad.d = 2;
  CHECK_THROWS_AS(validate_context(bad), InputError);

  const Graph two = build_graph(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(make_context(two, 0, VertexSet{2, 3}), NotInClassError);
}

TEST_CASE("smallest reaching neighbour becomes d") {
  // c = 0 sees 1 and 2; only 2 reaches K = {3}.
  const Graph g = build_graph(4, {{0, 1}, {0, 2}, {2, 3}});
  CHECK(make_context(g, 0, VertexSet{3}).d == 2);
}

TEST_CASE("better keeps the first on ties") {
  const Solution a{VertexSet{1}, 5};
  const Solution b{VertexSet{2}, 5};
  CHECK(better(a, b).set == VertexSet{1});
  CHECK(better(b, Solution{VertexSet{3}, 6}).set == VertexSet{3});
}

TEST_CASE("per-vertex decomposition with an exact context solver") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 5 + static_cast<int>(seed % 14);
    Graph g = random_in_class(n, 0.4, GenClass::BullFreePrime, seed);
    const auto w = random_weights(n, 0, 100, seed);
    SolveStats st;
    const Solution s = solve_by_contexts(
        g, w, {}, st, [&](const ComponentContext& ctx, SolveStats&) {
          CHECK_NOTHROW(validate_context(ctx));
          return exact_mwss(g, w, ctx.live);
        });
    CHECK(s.weight == exact_mwss(g, w).weight);
    CHECK(verify_solution(g, w, s));
  }
  const Graph two = build_graph(4, {{0, 1}, {2, 3}});
  SolveStats st;
  CHECK_THROWS_AS(solve_by_contexts(two, VertexWeights::uniform(4), {}, st,
                                    [](const ComponentContext&, SolveStats&) { return Solution{}; }),
                  InputError);
}
