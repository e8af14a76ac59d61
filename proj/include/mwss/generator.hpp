#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "mwss/graph.hpp"

namespace mwss {

enum class GenClass { P7Bull, S123Bull, BullFreePrime };

inline constexpr int kMaxRepairs = 10'000;

/// G(n, p) drawn from `seed`, then repaired: while a forbidden induced
/// subgraph is present, one of its edges (chosen uniformly) is deleted.
/// BullFreePrime only repairs bulls and redraws, from derived seeds, until
/// the result is connected and prime. Throws GenerationError when the repair
/// or redraw budget runs out.
Graph random_in_class(int n, double p, GenClass cls, std::uint64_t seed);

/// Uniform integer weights in [lo, hi].
VertexWeights random_weights(int n, Weight lo, Weight hi, std::uint64_t seed);

/// Ring of seven stable sets A_0..A_6 of the given sizes, consecutive indices
/// per set, A_i complete to A_{i+1}.
Graph c7_blowup(const std::array<int, 7>& sizes);

/// Replace vertex v by copies[v] pairwise non-adjacent twins (copies[v] >= 1).
/// Copies of v get consecutive indices in vertex order.
Graph twin_expand(const Graph& g, std::span<const int> copies);

/// 13-vertex triangle-free (P7, bull)-free graph around a context (K, c, d):
/// c = 0, d = 1, h1..h5 = 2..6, c1..c5 = 7..11 forming a C5, z = 12. d sees
/// every h_i, h_i sees c_{i-1}, c_{i+1} and z. Every x in K leaves a C5 in
/// K \ N(x).
struct Fixture {
  Graph graph;
  int c = 0;
  int d = 1;
  VertexSet k;
};

Fixture fixture_counterexample();

}  // namespace mwss
