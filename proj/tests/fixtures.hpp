#pragma once

#include <vector>

#include "mwss/graph.hpp"

namespace fx {

using mwss::Edge;
using mwss::Graph;

inline Graph path(int k) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return mwss::build_graph(k, e);
}

inline Graph cycle(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return mwss::build_graph(k, e);
}

inline Graph complete(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return mwss::build_graph(k, e);
}

// a..e = 0..4 with edges ab, bc, cd, be, ce: triangle bce, horns a and d.
inline Graph bull() { return mwss::build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}}); }

// Cycle 0..k-1 plus vertex k adjacent to all of it.
inline Graph wheel(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) {
    e.emplace_back(i, (i + 1) % k);
    e.emplace_back(i, k);
  }
  return mwss::build_graph(k + 1, e);
}

// Vertices of g plus `extra` new vertices and the given edges.
inline Graph extend(const Graph& g, int extra, std::vector<Edge> more) {
  std::vector<Edge> e = g.edges();
  e.insert(e.end(), more.begin(), more.end());
  return mwss::build_graph(g.order() + extra, e);
}

}  // namespace fx
