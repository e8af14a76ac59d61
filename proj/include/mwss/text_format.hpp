#pragma once

#include <iosfwd>
#include <string>

#include "mwss/graph.hpp"

namespace mwss {

/// A weighted graph as read from / written to the line-oriented text format:
///
///   # comment
///   p mwss <n> <m>
///   v <i> <w>        (1-indexed; unlisted vertices weigh 1)
///   e <u> <v>        (1-indexed)
struct WeightedGraph {
  Graph graph;
  VertexWeights weights;
};

WeightedGraph read_text_graph(std::istream& in);
WeightedGraph read_text_graph_file(const std::string& path);

void write_text_graph(std::ostream& out, const Graph& g, const VertexWeights& w);
void write_text_graph_file(const std::string& path, const Graph& g, const VertexWeights& w);

}  // namespace mwss
