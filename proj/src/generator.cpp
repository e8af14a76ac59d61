#include "mwss/generator.hpp"

#include <optional>
#include <random>

#include "mwss/modular.hpp"
#include "mwss/patterns.hpp"

namespace mwss {

namespace {

std::optional<PatternHit> forbidden_hit(const Graph& g, GenClass cls) {
  if (cls == GenClass::BullFreePrime) return find_induced(g, catalogue_pattern("bull"));
  return in_class(g, cls == GenClass::P7Bull ? GraphClass::P7Bull : GraphClass::S123Bull).witness;
}

Graph draw_and_repair(int n, double p, GenClass cls, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);

  for (int repairs = 0;; ++repairs) {
    const Graph g = b.build();
    const auto hit = forbidden_hit(g, cls);
    if (!hit) return g;
    if (repairs == kMaxRepairs) throw GenerationError("repair budget exhausted");
    const Pattern& pat = catalogue_pattern(hit->pattern);
    const auto edges = pat.graph.edges();
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    const auto [a, c] = edges[pick(rng)];
    b.remove_edge(hit->embedding[a], hit->embedding[c]);
  }
}

}  // namespace

Graph random_in_class(int n, double p, GenClass cls, std::uint64_t seed) {
  if (n < 0 || n > kMaxVertices) throw InputError("random_in_class: bad vertex count");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("random_in_class: p must lie in [0, 1]");
  if (cls != GenClass::BullFreePrime) return draw_and_repair(n, p, cls, seed);

  std::seed_seq seq{seed};
  std::mt19937_64 sub(seq);
  std::uint64_t s = seed;
  for (int attempt = 0; attempt < kMaxRepairs; ++attempt) {
    const Graph g = draw_and_repair(n, p, cls, s);
    if (is_connected(g, g.vertices()) && is_prime(g)) return g;
    s = sub();
  }
  throw GenerationError("no prime bull-free draw within budget");
}

VertexWeights random_weights(int n, Weight lo, Weight hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Weight> dist(lo, hi);
  std::vector<Weight> w(n);
  for (auto& x : w) x = dist(rng);
  return VertexWeights(std::move(w));
}

Graph c7_blowup(const std::array<int, 7>& sizes) {
  std::vector<int> copies(sizes.begin(), sizes.end());
  return twin_expand(build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 6}}),
                     copies);
}

Graph twin_expand(const Graph& g, std::span<const int> copies) {
  if (static_cast<int>(copies.size()) != g.order())
    throw InputError("twin_expand: one copy count per vertex");
  std::vector<int> start(g.order() + 1, 0);
  for (int v = 0; v < g.order(); ++v) {
    if (copies[v] < 1) throw InputError("twin_expand: copy counts must be positive");
    start[v + 1] = start[v] + copies[v];
  }
  if (start.back() > kMaxVertices) throw InputError("twin_expand: too many vertices");
  GraphBuilder b(start.back());
  for (auto [u, v] : g.edges())
    for (int a = start[u]; a < start[u + 1]; ++a)
      for (int c = start[v]; c < start[v + 1]; ++c) b.add_edge(a, c);
  return b.build();
}

Fixture fixture_counterexample() {
  GraphBuilder b(13);
  const auto h = [](int i) { return 2 + (i % 5); };
  const auto cyc = [](int i) { return 7 + ((i + 5) % 5); };
  b.add_edge(0, 1);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(1, h(i));
    b.add_edge(h(i), cyc(i - 1));
    b.add_edge(h(i), cyc(i + 1));
    b.add_edge(h(i), 12);
    b.add_edge(cyc(i), cyc(i + 1));
  }
  Fixture f;
  f.graph = b.build();
  for (int v = 2; v <= 12; ++v) f.k.insert(v);
  return f;
}

}  // namespace mwss
