#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "mwss/exact.hpp"
#include "mwss/generator.hpp"
#include "mwss/modular.hpp"
#include "oracles.hpp"

using namespace mwss;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

Solution oracle_prime(const Graph& g, const VertexWeights& w) {
  return exact_mwss(g, w, kOracleNodeBudget);
}

}  // namespace

TEST_CASE("homogeneous sets") {
  // C5 with vertex 0 doubled into adjacent twins 0 and 5.
  const Graph twins = fx::extend(fx::cycle(5), 1, {{5, 0}, {5, 1}, {5, 4}});
  const auto m = find_proper_homogeneous_set(twins);
  REQUIRE(m);
  CHECK(*m == VertexSet{0, 5});

  CHECK_FALSE(find_proper_homogeneous_set(fx::cycle(5)));
  CHECK(is_prime(fx::cycle(5)));
  CHECK(is_prime(fx::path(4)));
  CHECK_FALSE(is_prime(fx::path(3)));

  const auto k2k1 = find_proper_homogeneous_set(build_graph(3, {{0, 1}}));
  REQUIRE(k2k1);
  CHECK(*k2k1 == VertexSet{0, 1});
}

TEST_CASE("module search agrees with subset enumeration") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 3 + static_cast<int>(seed % 8);
    const Graph g = random_graph(n, 0.5, seed);
    const auto m = find_proper_homogeneous_set(g);
    CHECK(m.has_value() == oracle::brute_has_module(g));
    if (m) {
      CHECK(m->size() >= 2);
      CHECK(*m != g.vertices());
      CHECK(is_homogeneous(g, g.vertices(), *m));
    }
  }
}

TEST_CASE("solve_via_modules examples") {
  const Graph k2 = fx::complete(2);
  CHECK(solve_via_modules(k2, VertexWeights({3, 5}), oracle_prime).weight == 5);

  // C5 with vertex 0 replaced by a stable pair {0, 5} of weight 2 each.
  const Graph blown = twin_expand(fx::cycle(5), std::vector<int>{2, 1, 1, 1, 1});
  const VertexWeights w({2, 2, 1, 1, 1, 1});
  const Solution s = solve_via_modules(blown, w, oracle_prime);
  CHECK(s.weight == oracle::brute_mwss(blown, w));
  CHECK(s.weight == 5);
  CHECK(verify_solution(blown, w, s));

  int calls = 0;
  const Graph c5 = fx::cycle(5);
  const auto direct = exact_mwss(c5, VertexWeights({1, 2, 3, 4, 5}));
  const auto via = solve_via_modules(c5, VertexWeights({1, 2, 3, 4, 5}),
                                     [&](const Graph& g, const VertexWeights& pw) {
                                       ++calls;
                                       CHECK(g == c5);
                                       return oracle_prime(g, pw);
                                     });
  CHECK(calls == 1);
  CHECK(via.weight == direct.weight);
  CHECK(via.set == direct.set);
}

TEST_CASE("prime solver only sees prime graphs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 14);
    const Graph g = random_graph(n, 0.3 + 0.1 * static_cast<double>(seed % 4), seed);
    const auto w = random_weights(n, 0, 100, seed);
    const Solution s = solve_via_modules(g, w, [&](const Graph& q, const VertexWeights& qw) {
      CHECK(q.order() >= 2);
      CHECK_FALSE(find_proper_homogeneous_set(q));
      CHECK(is_connected(q, q.vertices()));
      return oracle_prime(q, qw);
    });
    CHECK(s.weight == exact_mwss(g, w).weight);
    CHECK(verify_solution(g, w, s));
  }
}

TEST_CASE("not-in-class witnesses are mapped to host indices") {
  // Bull with its horn d tripled; the quotient is the bull on {0, 1, 2, 3, 6}.
  const Graph g = twin_expand(fx::bull(), std::vector<int>{1, 1, 1, 3, 1});
  try {
    solve_via_modules(g, VertexWeights::uniform(g.order()),
                      [](const Graph& q, const VertexWeights&) -> Solution {
                        throw NotInClassError("test", {q.order() - 1});
                      });
    FAIL("expected throw");
  } catch (const NotInClassError& e) {
    REQUIRE(e.witness().size() == 1);
    CHECK(e.witness()[0] < g.order());
    CHECK(e.witness()[0] == 6);
  }
}
