#pragma once

#include <functional>
#include <optional>

#include "mwss/graph.hpp"

namespace mwss {

/// Exact MWSS routine for prime graphs of some hereditary class.
using PrimeSolver = std::function<Solution(const Graph&, const VertexWeights&)>;

/// A proper homogeneous set (module) of G[within]: at least two vertices,
/// not all of `within`, and every other vertex of `within` sees all or none
/// of it. Pairs are seeded in index order and closed under splitters; the
/// first proper closure is returned. Empty result means G[within] is prime.
std::optional<VertexSet> find_proper_homogeneous_set(const Graph& g, const VertexSet& within);
inline std::optional<VertexSet> find_proper_homogeneous_set(const Graph& g) {
  return find_proper_homogeneous_set(g, g.vertices());
}

bool is_homogeneous(const Graph& g, const VertexSet& within, const VertexSet& s);
bool is_prime(const Graph& g);

/// Exact MWSS on G given an exact solver for its prime induced subgraphs.
///
/// Components are solved independently. Inside a connected piece, each
/// proper module is solved recursively and contracted to its smallest vertex,
/// which takes the module's optimum as weight; once no module is left the
/// prime quotient goes to `prime_solver` and contracted vertices are expanded
/// back into their stored stable sets. NotInClassError witnesses raised by
/// `prime_solver` are translated into G's indices.
Solution solve_via_modules(const Graph& g, const VertexWeights& w, const PrimeSolver& prime_solver);

}  // namespace mwss
