#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mwss/errors.hpp"
#include "mwss/vertex_set.hpp"

namespace mwss {

using Edge = std::pair<int, int>;
using Weight = std::int64_t;

/// Immutable simple undirected graph on vertices 0..n-1 with bit-row adjacency.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  const VertexSet& neighbors(int v) const { return rows_[v]; }
  bool adjacent(int u, int v) const { return rows_[u].contains(v); }
  int degree(int v) const { return rows_[v].size(); }
  int edge_count() const;

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  friend Graph build_graph(int n, std::span<const Edge> edges);
  friend class GraphBuilder;

  int n_ = 0;
  std::vector<VertexSet> rows_;
};

/// Mutable staging area used by generators and transforms; `build()` freezes it.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  int order() const { return g_.n_; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool adjacent(int u, int v) const { return g_.adjacent(u, v); }
  Graph build() const { return g_; }

 private:
  void check(int u, int v) const;
  Graph g_;
};

/// Nonnegative integer weight per vertex.
class VertexWeights {
 public:
  VertexWeights() = default;
  explicit VertexWeights(std::vector<Weight> w);
  static VertexWeights uniform(int n, Weight value = 1);

  int size() const { return static_cast<int>(w_.size()); }
  Weight operator[](int v) const { return w_[v]; }
  void set(int v, Weight value);
  Weight total(const VertexSet& s) const;
  const std::vector<Weight>& values() const { return w_; }

 private:
  std::vector<Weight> w_;
};

/// A stable set together with its total weight.
struct Solution {
  VertexSet set;
  Weight weight = 0;

  /// Union of two solutions over disjoint, mutually anticomplete parts.
  Solution& operator+=(const Solution& o) {
    set |= o.set;
    weight += o.weight;
    return *this;
  }
};

Graph build_graph(int n, std::span<const Edge> edges);
inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// G[S] plus the map from its vertex indices back to G.
struct InducedGraph {
  Graph graph;
  std::vector<int> to_host;
};

InducedGraph induced(const Graph& g, const VertexSet& s);
Graph complement(const Graph& g);

/// Connected components of G[within], ordered by minimum vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

/// The component of G[within] that contains v (v must be in `within`).
VertexSet component_of(const Graph& g, const VertexSet& within, int v);

bool is_connected(const Graph& g, const VertexSet& within);

/// Components of G \ ({c} ∪ N(c)).
std::vector<VertexSet> anti_neighborhood_components(const Graph& g, int c);

bool is_complete_to(const Graph& g, const VertexSet& a, const VertexSet& b);
bool is_anticomplete_to(const Graph& g, const VertexSet& a, const VertexSet& b);

bool is_stable(const Graph& g, const VertexSet& s);

}  // namespace mwss
