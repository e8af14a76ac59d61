#include <doctest.h>

#include <array>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "mwss/graph.hpp"
#include "mwss/text_format.hpp"

using namespace mwss;

TEST_CASE("vertex set basics") {
  VertexSet s{3, 70, 511};
  CHECK(s.size() == 3);
  CHECK(s.first() == 3);
  CHECK(s.last() == 511);
  CHECK(s.next(3) == 70);
  CHECK(s.to_vector() == std::vector<int>{3, 70, 511});
  CHECK((s - VertexSet{70}).size() == 2);
  CHECK(VertexSet::range(130).size() == 130);
  CHECK(VertexSet{}.empty());
  CHECK(VertexSet{1, 2}.is_subset_of(VertexSet{1, 2, 3}));
  CHECK_FALSE(VertexSet{1, 4}.intersects(VertexSet{2, 3}));
}

TEST_CASE("build_graph") {
  SUBCASE("bull") {
    const Graph g = fx::bull();
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 5);
    CHECK(g.degree(1) == 3);
    CHECK(g.degree(2) == 3);
    CHECK(g.degree(0) == 1);
  }
  SUBCASE("empty") {
    const Graph g = build_graph(3, {});
    for (int v = 0; v < 3; ++v) CHECK(g.neighbors(v).empty());
  }
  SUBCASE("duplicates collapse") {
    const Graph g = build_graph(4, {{0, 1}, {1, 0}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}});
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(build_graph(3, {{1, 1}}), InputError);
    CHECK_THROWS_AS(build_graph(3, {{-1, 1}}), InputError);
    CHECK_THROWS_AS(Graph(kMaxVertices + 1), InputError);
  }
}

TEST_CASE("edge round trip and symmetry") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 40;
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) e.emplace_back(u, v);
    const Graph g = build_graph(n, e);
    CHECK(g.edges() == e);
    for (int u = 0; u < n; ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      for (int v = 0; v < n; ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("induced") {
  const auto sub = induced(fx::bull(), VertexSet{0, 1, 2, 3});
  CHECK(sub.graph == fx::path(4));
  CHECK(sub.to_host == std::vector<int>{0, 1, 2, 3});

  const Graph c5 = fx::cycle(5);
  const auto all = induced(c5, c5.vertices());
  CHECK(all.graph == c5);
  const auto pair = induced(c5, VertexSet{0, 2});
  CHECK(pair.graph.order() == 2);
  CHECK(pair.graph.edge_count() == 0);
}

TEST_CASE("complement") {
  CHECK(complement(fx::complete(4)) == build_graph(4, {}));
  const Graph cc = complement(fx::cycle(5));
  CHECK(cc.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(cc.degree(v) == 2);
  const Graph bc = complement(fx::bull());
  const std::array<int, 5> phi{1, 3, 0, 2, 4};  // an isomorphism bull -> complement
  bool iso = true;
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v)
      if (u != v && fx::bull().adjacent(u, v) != bc.adjacent(phi[u], phi[v])) iso = false;
  CHECK(bc.edge_count() == 5);
  CHECK(iso);
}

TEST_CASE("components") {
  const auto two = components(build_graph(4, {{0, 1}, {2, 3}}));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == VertexSet{0, 1});
  CHECK(two[1] == VertexSet{2, 3});
  CHECK(components(fx::cycle(7)).size() == 1);
  CHECK(components(build_graph(3, {})).size() == 3);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 20;
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 10 == 0) b.add_edge(u, v);
    const Graph g = b.build();
    VertexSet seen;
    const auto parts = components(g);
    for (const auto& p : parts) {
      CHECK_FALSE(p.intersects(seen));
      seen |= p;
      CHECK(is_connected(g, p));
      CHECK(is_anticomplete_to(g, p, g.vertices() - p));
    }
    CHECK(seen == g.vertices());
  }
}

TEST_CASE("anti-neighborhood components") {
  const auto p7 = anti_neighborhood_components(fx::path(7), 0);
  REQUIRE(p7.size() == 1);
  CHECK(p7[0] == VertexSet{2, 3, 4, 5, 6});
  CHECK(anti_neighborhood_components(fx::complete(5), 2).empty());
  CHECK_THROWS_AS(anti_neighborhood_components(fx::complete(5), 5), InputError);

  const Graph c7 = fx::cycle(7);
  for (int c = 0; c < 7; ++c)
    for (const auto& k : anti_neighborhood_components(c7, c))
      CHECK_FALSE(k.intersects(c7.neighbors(c).with(c)));
}

TEST_CASE("complete and anticomplete") {
  const Graph w = fx::wheel(6);
  CHECK(is_complete_to(w, VertexSet{6}, VertexSet::range(6)));
  const Graph two = build_graph(4, {{0, 1}, {2, 3}});
  CHECK(is_anticomplete_to(two, VertexSet{0, 1}, VertexSet{2, 3}));
  const Graph b = fx::bull();
  CHECK(is_anticomplete_to(b, VertexSet{0}, VertexSet{2}));
  CHECK_FALSE(is_complete_to(b, VertexSet{0}, VertexSet{2}));
  CHECK_THROWS_AS(is_complete_to(b, VertexSet{0, 1}, VertexSet{1}), InputError);
}

TEST_CASE("weights") {
  CHECK_THROWS_AS(VertexWeights({1, -1}), InputError);
  VertexWeights w = VertexWeights::uniform(4, 3);
  w.set(2, 10);
  CHECK(w.total(VertexSet{0, 2}) == 13);
  CHECK_THROWS_AS(w.set(1, -2), InputError);
}

TEST_CASE("text format") {
  SUBCASE("round trip") {
    const Graph g = fx::bull();
    VertexWeights w({4, 0, 7, 1, 2});
    std::stringstream ss;
    write_text_graph(ss, g, w);
    const auto back = read_text_graph(ss);
    CHECK(back.graph == g);
    CHECK(back.weights.values() == w.values());
  }
  SUBCASE("comments and default weights") {
    std::istringstream in("# c\np mwss 3 1\n\ne 1 3\n# trailing\n");
    const auto wg = read_text_graph(in);
    CHECK(wg.graph.adjacent(0, 2));
    CHECK(wg.weights.values() == std::vector<Weight>{1, 1, 1});
  }
  SUBCASE("strict errors") {
    const char* bad[] = {
        "e 1 2\n",                      // before problem line
        "p mwss 3 1\ne 1 4\n",          // out of range
        "p mwss 3 1\ne 2 2\n",          // self-loop
        "p mwss 3 1\ne 1 2 3\n",        // trailing token
        "p mwss 3 1\nx 1 2\n",          // unknown kind
        "p mwss 3 2\ne 1 2\n",          // edge count mismatch
        "p mwss 3 0\nv 1 -4\n",         // negative weight
        "p graph 3 0\n",                // wrong tag
        "",                             // no problem line
        "p mwss 3 0\np mwss 3 0\n",     // duplicate
    };
    for (const char* text : bad) {
      std::istringstream in(text);
      CHECK_THROWS_AS(read_text_graph(in), InputError);
    }
  }
}
