#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mwss/graph.hpp"

namespace mwss {

/// A small named graph searched for as an induced subgraph.
struct Pattern {
  std::string name;
  Graph graph;
  /// Distinguished vertices, e.g. {"center", 5} for the umbrella.
  std::vector<std::pair<std::string, int>> roles;

  int order() const { return graph.order(); }
  int role(std::string_view r) const;
};

/// An induced embedding: embedding[i] is the host vertex playing pattern vertex i.
struct PatternHit {
  std::string pattern;
  std::vector<int> embedding;
};

inline constexpr int kMaxPatternOrder = 8;

Pattern path_pattern(int k);
Pattern cycle_pattern(int k);
Pattern complete_pattern(int k);

/// bull, P5, P7, C5, C7, S123, umbrella, parasol, G1, G2.
const std::vector<Pattern>& catalogue();
const Pattern& catalogue_pattern(std::string_view name);

/// First induced copy of `p` in G that avoids `forbidden`, searching host
/// vertices in increasing index order. Throws UnsupportedError for patterns
/// with more than kMaxPatternOrder vertices.
std::optional<PatternHit> find_induced(const Graph& g, const Pattern& p,
                                       const VertexSet& forbidden = {});
/// Same search restricted to G[within].
std::optional<PatternHit> find_induced_within(const Graph& g, const Pattern& p,
                                              const VertexSet& within);

/// Checks every pattern edge and non-edge against the host.
bool is_induced_embedding(const Graph& g, const Pattern& p, std::span<const int> embedding);

using Cycle = std::vector<int>;

/// Calls `visit` on each hole of length k in G[within] (each cycle once, starting
/// at its smallest vertex) until `visit` returns true. Returns whether it stopped.
bool for_each_hole(const Graph& g, int k, const VertexSet& within,
                   const std::function<bool(const Cycle&)>& visit);

/// Induced cycle of length exactly k (4 <= k <= 7) inside `within`.
std::optional<Cycle> find_hole(const Graph& g, int k, const VertexSet& within);
inline std::optional<Cycle> find_hole(const Graph& g, int k) {
  return find_hole(g, k, g.vertices());
}

/// Induced cycle of any length in [min_len, max_len] inside `within`.
std::optional<Cycle> find_hole_in_range(const Graph& g, int min_len, int max_len,
                                        const VertexSet& within);

bool is_hole(const Graph& g, std::span<const int> cycle);

struct Wheel {
  Cycle rim;
  int center = -1;
};

/// A hole of length >= k_min plus a vertex complete to it. Run on
/// complement(G) for antiwheels.
std::optional<Wheel> find_wheel(const Graph& g, int k_min);

struct NeighborProfile {
  int count = 0;
  std::vector<int> positions;  ///< indices into the cycle, increasing
};

NeighborProfile neighbor_profile(const Graph& g, std::span<const int> cycle, int x);

/// Shapes a 2- or 3-neighbor of a C5 may take in a bull-free graph:
/// {c_i, c_i+2} or {c_i, c_i+1, c_i+2}. Other counts are accepted.
bool c5_profile_admissible(const NeighborProfile& p);

/// Shapes allowed around a C7 in a bull-free graph: 2-neighbors {c_i, c_i+2|3},
/// 3-neighbors {c_i..c_i+2} or {c_i, c_i+2, c_i+4}, and no 4/5/6-neighbors.
bool c7_profile_admissible(const NeighborProfile& p);

/// A C5 tagged with how many of its vertices lie in H.
struct TypedC5 {
  std::array<int, 5> cycle{};
  int type = 0;
  std::vector<int> h_vertices;
};

/// Counts cycle ∩ H. Three or more H-vertices, or two adjacent ones, cannot
/// occur inside a valid component context and raise NotInClassError.
TypedC5 classify_c5(const Graph& g, std::span<const int> cycle, const VertexSet& h);

enum class GraphClass { P7Bull, S123Bull };

std::string_view class_name(GraphClass c);

struct ClassReport {
  bool member = true;
  std::optional<PatternHit> witness;
};

/// Membership in the (P7, bull)-free or (S123, bull)-free class, with a
/// forbidden induced subgraph as witness when the answer is no.
ClassReport in_class(const Graph& g, GraphClass c);

}  // namespace mwss
