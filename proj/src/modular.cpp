#include "mwss/modular.hpp"

namespace mwss {

namespace {

// Vertices of `within` \ s that see some but not all of s.
VertexSet splitters(const Graph& g, const VertexSet& within, const VertexSet& s) {
  VertexSet out;
  for (int x : within - s) {
    const VertexSet seen = g.neighbors(x) & s;
    if (!seen.empty() && seen != s) out.insert(x);
  }
  return out;
}

class ModuleReducer {
 public:
  ModuleReducer(const Graph& g, const VertexWeights& w, const PrimeSolver& prime)
      : g_(g), weight_(w.values()), prime_(prime), expansion_(g.order()) {
    for (int v = 0; v < g.order(); ++v) expansion_[v] = VertexSet{v};
  }

  Solution reduce(VertexSet live) {
    if (live.empty()) return {};
    if (live.size() == 1) {
      const int v = live.first();
      return {expansion_[v], weight_[v]};
    }
    const auto parts = components(g_, live);
    if (parts.size() > 1) {
      Solution total;
      for (const auto& p : parts) total += reduce(p);
      return total;
    }

    while (auto module = next_module(live)) {
      const Solution inner = reduce(*module);
      const int rep = module->first();
      weight_[rep] = inner.weight;
      expansion_[rep] = inner.set;
      live -= *module;
      live.insert(rep);
    }
    if (live.size() == 1) {
      const int v = live.first();
      return {expansion_[v], weight_[v]};
    }

    const InducedGraph quotient = induced(g_, live);
    std::vector<Weight> qw;
    qw.reserve(quotient.to_host.size());
    for (int v : quotient.to_host) qw.push_back(weight_[v]);

    Solution local;
    try {
      local = prime_(quotient.graph, VertexWeights(std::move(qw)));
    } catch (NotInClassError& e) {
      // Contracted vertices stand for whole modules; name a concrete vertex.
      for (int& v : e.witness()) v = quotient.to_host[v];
      throw;
    }

    Solution out;
    for (int i : local.set) {
      const int v = quotient.to_host[i];
      out.set |= expansion_[v];
      out.weight += weight_[v];
    }
    return out;
  }

 private:
  // Twin classes first: they are the common case and cost one row compare each.
  std::optional<VertexSet> next_module(const VertexSet& live) const {
    for (int u : live) {
      const VertexSet nu = g_.neighbors(u) & live;
      VertexSet twins{u};
      for (int v = live.next(u); v != -1; v = live.next(v)) {
        const VertexSet nv = g_.neighbors(v) & live;
        if (nv == nu || nv.with(v) == nu.with(u)) {
          if (twins.size() == 1 || g_.adjacent(u, v) == g_.adjacent(u, twins.last()))
            twins.insert(v);
        }
      }
      if (twins.size() < 2) continue;
      if (twins != live) return twins;
      if (live.size() > 2) return VertexSet{u, twins.next(u)};
      return std::nullopt;
    }
    return find_proper_homogeneous_set(g_, live);
  }

  const Graph& g_;
  std::vector<Weight> weight_;
  const PrimeSolver& prime_;
  std::vector<VertexSet> expansion_;
};

}  // namespace

bool is_homogeneous(const Graph& g, const VertexSet& within, const VertexSet& s) {
  return splitters(g, within, s).empty();
}

std::optional<VertexSet> find_proper_homogeneous_set(const Graph& g, const VertexSet& within) {
  for (int u : within) {
    for (int v = within.next(u); v != -1; v = within.next(v)) {
      VertexSet s{u, v};
      while (true) {
        const VertexSet grow = splitters(g, within, s);
        if (grow.empty()) break;
        s |= grow;
      }
      if (s != within) return s;
    }
  }
  return std::nullopt;
}

bool is_prime(const Graph& g) { return !find_proper_homogeneous_set(g).has_value(); }

Solution solve_via_modules(const Graph& g, const VertexWeights& w, const PrimeSolver& prime_solver) {
  if (w.size() != g.order()) throw InputError("weight vector length differs from vertex count");
  ModuleReducer reducer(g, w, prime_solver);
  return reducer.reduce(g.vertices());
}

}  // namespace mwss
