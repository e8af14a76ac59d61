#include "mwss/text_format.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mwss {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw InputError("line " + std::to_string(line_no) + ": " + what);
}

long long read_int(std::istringstream& fields, int line_no, const char* name) {
  long long x = 0;
  if (!(fields >> x)) fail(line_no, std::string("expected integer ") + name);
  return x;
}

}  // namespace

WeightedGraph read_text_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  long long declared_edges = 0;
  std::vector<Edge> edges;
  std::vector<Weight> weights;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string kind;
    if (!(fields >> kind) || kind[0] == '#') continue;

    if (kind == "p") {
      std::string tag;
      if (n >= 0) fail(line_no, "duplicate problem line");
      if (!(fields >> tag) || tag != "mwss") fail(line_no, "problem line must read 'p mwss <n> <m>'");
      long long nn = read_int(fields, line_no, "n");
      declared_edges = read_int(fields, line_no, "m");
      if (nn < 0 || nn > kMaxVertices) fail(line_no, "vertex count out of range");
      if (declared_edges < 0) fail(line_no, "negative edge count");
      n = static_cast<int>(nn);
      weights.assign(static_cast<std::size_t>(n), 1);
    } else if (kind == "v" || kind == "e") {
      if (n < 0) fail(line_no, "'" + kind + "' line before problem line");
      long long a = read_int(fields, line_no, "index");
      long long b = read_int(fields, line_no, kind == "v" ? "weight" : "index");
      if (a < 1 || a > n) fail(line_no, "vertex index out of range");
      if (kind == "v") {
        if (b < 0) fail(line_no, "negative weight");
        weights[a - 1] = b;
      } else {
        if (b < 1 || b > n) fail(line_no, "vertex index out of range");
        if (a == b) fail(line_no, "self-loop");
        edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
      }
    } else {
      fail(line_no, "unknown line kind '" + kind + "'");
    }
    std::string extra;
    if (fields >> extra) fail(line_no, "trailing content '" + extra + "'");
  }

  if (n < 0) throw InputError("missing problem line 'p mwss <n> <m>'");
  if (static_cast<long long>(edges.size()) != declared_edges)
    throw InputError("problem line declares " + std::to_string(declared_edges) + " edges, found " +
                     std::to_string(edges.size()));
  return {build_graph(n, edges), VertexWeights(std::move(weights))};
}

WeightedGraph read_text_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_text_graph(in);
}

void write_text_graph(std::ostream& out, const Graph& g, const VertexWeights& w) {
  const auto edges = g.edges();
  out << "p mwss " << g.order() << ' ' << edges.size() << '\n';
  for (int v = 0; v < g.order(); ++v) out << "v " << v + 1 << ' ' << w[v] << '\n';
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_text_graph_file(const std::string& path, const Graph& g, const VertexWeights& w) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  write_text_graph(out, g, w);
}

}  // namespace mwss
