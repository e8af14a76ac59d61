#include "mwss/graph.hpp"

#include <string>

namespace mwss {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw InputError("vertex count " + std::to_string(n) + " outside [0, " +
                     std::to_string(kMaxVertices) + "]");
  rows_.resize(n);
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& r : rows_) twice += r.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v = rows_[u].next(u); v != -1; v = rows_[u].next(v)) out.emplace_back(u, v);
  return out;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}
GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

void GraphBuilder::check(int u, int v) const {
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
    throw InputError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                     std::to_string(v) + ") with n = " + std::to_string(g_.n_));
  if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
}

void GraphBuilder::add_edge(int u, int v) {
  check(u, v);
  g_.rows_[u].insert(v);
  g_.rows_[v].insert(u);
}

void GraphBuilder::remove_edge(int u, int v) {
  check(u, v);
  g_.rows_[u].erase(v);
  g_.rows_[v].erase(u);
}

VertexWeights::VertexWeights(std::vector<Weight> w) : w_(std::move(w)) {
  for (std::size_t v = 0; v < w_.size(); ++v)
    if (w_[v] < 0) throw InputError("negative weight on vertex " + std::to_string(v));
}

VertexWeights VertexWeights::uniform(int n, Weight value) {
  return VertexWeights(std::vector<Weight>(static_cast<std::size_t>(n), value));
}

void VertexWeights::set(int v, Weight value) {
  if (value < 0) throw InputError("negative weight on vertex " + std::to_string(v));
  w_[v] = value;
}

Weight VertexWeights::total(const VertexSet& s) const {
  Weight sum = 0;
  for (int v : s) sum += w_[v];
  return sum;
}

Graph build_graph(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

InducedGraph induced(const Graph& g, const VertexSet& s) {
  InducedGraph out;
  out.to_host = s.to_vector();
  std::vector<int> to_local(g.order(), -1);
  for (int i = 0; i < static_cast<int>(out.to_host.size()); ++i) to_local[out.to_host[i]] = i;
  GraphBuilder b(static_cast<int>(out.to_host.size()));
  for (int i = 0; i < static_cast<int>(out.to_host.size()); ++i) {
    const VertexSet row = g.neighbors(out.to_host[i]) & s;
    for (int u : row)
      if (to_local[u] > i) b.add_edge(i, to_local[u]);
  }
  out.graph = b.build();
  return out;
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return b.build();
}

VertexSet component_of(const Graph& g, const VertexSet& within, int v) {
  VertexSet seen{v};
  VertexSet frontier{v};
  while (!frontier.empty()) {
    VertexSet grow;
    for (int u : frontier) grow |= g.neighbors(u);
    grow &= within;
    grow -= seen;
    seen |= grow;
    frontier = grow;
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet comp = component_of(g, rest, rest.first());
    rest -= comp;
    out.push_back(comp);
  }
  return out;
}

bool is_connected(const Graph& g, const VertexSet& within) {
  if (within.empty()) return true;
  return component_of(g, within, within.first()) == within;
}

std::vector<VertexSet> anti_neighborhood_components(const Graph& g, int c) {
  if (c < 0 || c >= g.order()) throw InputError("vertex out of range: " + std::to_string(c));
  return components(g, g.vertices() - g.neighbors(c) - VertexSet{c});
}

namespace {
void require_disjoint(const VertexSet& a, const VertexSet& b) {
  if (a.intersects(b)) throw InputError("complete/anticomplete test on overlapping sets");
}
}  // namespace

bool is_complete_to(const Graph& g, const VertexSet& a, const VertexSet& b) {
  require_disjoint(a, b);
  for (int v : a)
    if (!b.is_subset_of(g.neighbors(v))) return false;
  return true;
}

bool is_anticomplete_to(const Graph& g, const VertexSet& a, const VertexSet& b) {
  require_disjoint(a, b);
  for (int v : a)
    if (g.neighbors(v).intersects(b)) return false;
  return true;
}

bool is_stable(const Graph& g, const VertexSet& s) {
  for (int v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

}  // namespace mwss
