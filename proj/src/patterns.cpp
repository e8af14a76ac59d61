#include "mwss/patterns.hpp"

#include <algorithm>
#include <numeric>

namespace mwss {

int Pattern::role(std::string_view r) const {
  for (const auto& [name, v] : roles)
    if (name == r) return v;
  return -1;
}

Pattern path_pattern(int k) {
  GraphBuilder b(k);
  for (int i = 0; i + 1 < k; ++i) b.add_edge(i, i + 1);
  return {"P" + std::to_string(k), b.build(), {}};
}

Pattern cycle_pattern(int k) {
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i) b.add_edge(i, (i + 1) % k);
  return {"C" + std::to_string(k), b.build(), {}};
}

Pattern complete_pattern(int k) {
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) b.add_edge(i, j);
  return {"K" + std::to_string(k), b.build(), {}};
}

namespace {

std::vector<Pattern> make_catalogue() {
  std::vector<Pattern> out;
  // a b c d e = 0..4
  out.push_back({"bull", build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}}), {}});
  out.push_back(path_pattern(5));
  out.push_back(path_pattern(7));
  out.push_back(cycle_pattern(5));
  out.push_back(cycle_pattern(7));
  // centre 0; legs 1 | 2-3 | 4-5-6
  out.push_back({"S123",
                 build_graph(7, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}}),
                 {{"center", 0}}});
  {
    // rim 0..4, hub 5, pendant 6 on the hub
    GraphBuilder b(7);
    for (int i = 0; i < 5; ++i) {
      b.add_edge(i, (i + 1) % 5);
      b.add_edge(5, i);
    }
    b.add_edge(5, 6);
    out.push_back({"umbrella", b.build(), {{"center", 5}, {"pendant", 6}}});
  }
  {
    // P5 on 0..4, x = 5 complete to it, y = 6 pendant on x
    GraphBuilder b(7);
    for (int i = 0; i < 4; ++i) b.add_edge(i, i + 1);
    for (int i = 0; i < 5; ++i) b.add_edge(5, i);
    b.add_edge(5, 6);
    out.push_back({"parasol", b.build(), {{"x", 5}, {"pendant", 6}}});
  }
  {
    // C5 p1..p5 = 0..4, d = 5 on p5, a = 6
    GraphBuilder g1(7), g2(7);
    for (int i = 0; i < 5; ++i) {
      g1.add_edge(i, (i + 1) % 5);
      g2.add_edge(i, (i + 1) % 5);
    }
    g1.add_edge(5, 4);
    g2.add_edge(5, 4);
    for (int p : {4, 0, 1}) g1.add_edge(6, p);
    for (int p : {0, 1, 2}) g2.add_edge(6, p);
    out.push_back({"G1", g1.build(), {{"d", 5}, {"a", 6}}});
    out.push_back({"G2", g2.build(), {{"d", 5}, {"a", 6}}});
  }
  return out;
}

// Pattern vertices in search order: highest degree first, then always the
// vertex with the most already-placed neighbours.
std::vector<int> search_order(const Graph& p) {
  const int k = p.order();
  std::vector<int> order;
  std::vector<bool> placed(k, false);
  for (int step = 0; step < k; ++step) {
    int best = -1;
    int best_links = -1;
    int best_deg = -1;
    for (int v = 0; v < k; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int u : order) links += p.adjacent(u, v);
      const int deg = p.degree(v);
      if (links > best_links || (links == best_links && deg > best_deg)) {
        best = v;
        best_links = links;
        best_deg = deg;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  return order;
}

class InducedSearch {
 public:
  InducedSearch(const Graph& g, const Pattern& p, const VertexSet& within)
      : g_(g), p_(p), within_(within), order_(search_order(p.graph)), image_(p.order(), -1) {
    host_degree_.assign(g.order(), 0);
    for (int v : within) host_degree_[v] = (g.neighbors(v) & within).size();
  }

  std::optional<PatternHit> run() {
    if (p_.order() > g_.order() || p_.order() > within_.size()) return std::nullopt;
    if (!extend(0, {})) return std::nullopt;
    return PatternHit{p_.name, image_};
  }

 private:
  bool extend(int i, const VertexSet& used) {
    if (i == p_.order()) return true;
    const int pv = order_[i];
    VertexSet cand = within_ - used;
    for (int j = 0; j < i; ++j) {
      const int host = image_[order_[j]];
      if (p_.graph.adjacent(pv, order_[j]))
        cand &= g_.neighbors(host);
      else
        cand -= g_.neighbors(host);
    }
    const int need = p_.graph.degree(pv);
    for (int v : cand) {
      if (host_degree_[v] < need) continue;
      image_[pv] = v;
      if (extend(i + 1, used.with(v))) return true;
    }
    image_[pv] = -1;
    return false;
  }

  const Graph& g_;
  const Pattern& p_;
  VertexSet within_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<int> host_degree_;
};

// Enumerates induced cycles with length in [lo, hi], each once: the first
// vertex is the cycle's minimum and path[1] < path.back().
class HoleSearch {
 public:
  HoleSearch(const Graph& g, int lo, int hi, const VertexSet& within,
             const std::function<bool(const Cycle&)>& visit)
      : g_(g), lo_(lo), hi_(hi), within_(within), visit_(visit) {}

  bool run() {
    for (int v0 : within_) {
      VertexSet above = within_;
      for (int u = above.first(); u != -1 && u <= v0; u = above.next(u)) above.erase(u);
      path_.assign(1, v0);
      for (int v1 : g_.neighbors(v0) & above) {
        path_.push_back(v1);
        VertexSet blocked{v0, v1};
        if (extend(above, blocked)) return true;
        path_.pop_back();
      }
    }
    return false;
  }

 private:
  // `blocked` holds the path plus N(p1), ..., N(p_{m-2}): every vertex a new
  // path vertex may not touch. Interior vertices must also avoid N(p0).
  bool extend(const VertexSet& above, const VertexSet& blocked) {
    const int v0 = path_.front();
    const int last = path_.back();
    const int m = static_cast<int>(path_.size());
    const int len_if_closed = m + 1;
    const VertexSet cand = (g_.neighbors(last) & above) - blocked;
    const VertexSet closing = cand & g_.neighbors(v0);
    if (m >= 3 && len_if_closed >= lo_ && len_if_closed <= hi_) {
      for (int v : closing) {
        if (v < path_[1]) continue;
        path_.push_back(v);
        const bool stop = visit_(path_);
        path_.pop_back();
        if (stop) return true;
      }
    }
    if (len_if_closed >= hi_) return false;
    const VertexSet next_blocked = blocked | g_.neighbors(last);
    for (int v : cand - closing) {
      path_.push_back(v);
      const bool stop = extend(above, next_blocked);
      path_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const Graph& g_;
  int lo_;
  int hi_;
  VertexSet within_;
  const std::function<bool(const Cycle&)>& visit_;
  Cycle path_;
};

}  // namespace

const std::vector<Pattern>& catalogue() {
  static const std::vector<Pattern> patterns = make_catalogue();
  return patterns;
}

const Pattern& catalogue_pattern(std::string_view name) {
  for (const auto& p : catalogue())
    if (p.name == name) return p;
  throw InputError("unknown pattern '" + std::string(name) + "'");
}

std::optional<PatternHit> find_induced_within(const Graph& g, const Pattern& p,
                                              const VertexSet& within) {
  if (p.order() > kMaxPatternOrder)
    throw UnsupportedError("pattern " + p.name + " has more than " +
                           std::to_string(kMaxPatternOrder) + " vertices");
  return InducedSearch(g, p, within & g.vertices()).run();
}

std::optional<PatternHit> find_induced(const Graph& g, const Pattern& p,
                                       const VertexSet& forbidden) {
  return find_induced_within(g, p, g.vertices() - forbidden);
}

bool is_induced_embedding(const Graph& g, const Pattern& p, std::span<const int> embedding) {
  if (static_cast<int>(embedding.size()) != p.order()) return false;
  for (int v : embedding)
    if (v < 0 || v >= g.order()) return false;
  for (int i = 0; i < p.order(); ++i)
    for (int j = i + 1; j < p.order(); ++j) {
      if (embedding[i] == embedding[j]) return false;
      if (p.graph.adjacent(i, j) != g.adjacent(embedding[i], embedding[j])) return false;
    }
  return true;
}

bool for_each_hole(const Graph& g, int k, const VertexSet& within,
                   const std::function<bool(const Cycle&)>& visit) {
  if (k < 4 || k > 7) throw UnsupportedError("hole length must be in [4, 7]");
  return HoleSearch(g, k, k, within & g.vertices(), visit).run();
}

std::optional<Cycle> find_hole(const Graph& g, int k, const VertexSet& within) {
  std::optional<Cycle> found;
  for_each_hole(g, k, within, [&](const Cycle& c) {
    found = c;
    return true;
  });
  return found;
}

std::optional<Cycle> find_hole_in_range(const Graph& g, int min_len, int max_len,
                                        const VertexSet& within) {
  std::optional<Cycle> found;
  if (min_len < 4) min_len = 4;
  if (max_len < min_len) return found;
  HoleSearch(g, min_len, max_len, within & g.vertices(), [&](const Cycle& c) {
    found = c;
    return true;
  }).run();
  return found;
}

bool is_hole(const Graph& g, std::span<const int> cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 4) return false;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (cycle[i] == cycle[j]) return false;
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

std::optional<Wheel> find_wheel(const Graph& g, int k_min) {
  if (k_min < 6) throw UnsupportedError("wheel search needs k_min >= 6");
  for (int center = 0; center < g.order(); ++center) {
    const VertexSet rim_space = g.neighbors(center);
    if (rim_space.size() < k_min) continue;
    if (auto c = find_hole_in_range(g, k_min, rim_space.size(), rim_space))
      return Wheel{*c, center};
  }
  return std::nullopt;
}

NeighborProfile neighbor_profile(const Graph& g, std::span<const int> cycle, int x) {
  NeighborProfile p;
  for (int i = 0; i < static_cast<int>(cycle.size()); ++i) {
    if (cycle[i] == x) throw InputError("vertex " + std::to_string(x) + " lies on the cycle");
    if (g.adjacent(x, cycle[i])) p.positions.push_back(i);
  }
  p.count = static_cast<int>(p.positions.size());
  return p;
}

namespace {

// Cyclic gaps between consecutive neighbour positions on a cycle of length len.
std::vector<int> gaps(const NeighborProfile& p, int len) {
  std::vector<int> out;
  for (std::size_t i = 0; i < p.positions.size(); ++i) {
    const int a = p.positions[i];
    const int b = p.positions[(i + 1) % p.positions.size()];
    out.push_back(((b - a) % len + len) % len);
  }
  return out;
}

bool has_rotation(std::vector<int> g, const std::vector<int>& shape) {
  for (std::size_t r = 0; r < g.size(); ++r) {
    if (g == shape) return true;
    std::rotate(g.begin(), g.begin() + 1, g.end());
  }
  return false;
}

}  // namespace

bool c5_profile_admissible(const NeighborProfile& p) {
  const auto gp = gaps(p, 5);
  if (p.count == 2) return has_rotation(gp, {2, 3});
  if (p.count == 3) return has_rotation(gp, {1, 1, 3});
  return true;
}

bool c7_profile_admissible(const NeighborProfile& p) {
  const auto gp = gaps(p, 7);
  switch (p.count) {
    case 2:
      return has_rotation(gp, {2, 5}) || has_rotation(gp, {3, 4});
    case 3:
      return has_rotation(gp, {1, 1, 5}) || has_rotation(gp, {2, 2, 3});
    case 4:
    case 5:
    case 6:
      return false;
    default:
      return true;
  }
}

TypedC5 classify_c5(const Graph& g, std::span<const int> cycle, const VertexSet& h) {
  if (cycle.size() != 5) throw InputError("classify_c5 expects five vertices");
  TypedC5 t;
  std::copy(cycle.begin(), cycle.end(), t.cycle.begin());
  for (int v : cycle)
    if (h.contains(v)) t.h_vertices.push_back(v);
  t.type = static_cast<int>(t.h_vertices.size());
  const std::vector<int> witness(cycle.begin(), cycle.end());
  if (t.type >= 3)
    throw NotInClassError("C5 with " + std::to_string(t.type) + " vertices in H", witness);
  if (t.type == 2 && g.adjacent(t.h_vertices[0], t.h_vertices[1]))
    throw NotInClassError("C5 with two adjacent vertices in H", witness);
  return t;
}

std::string_view class_name(GraphClass c) {
  return c == GraphClass::P7Bull ? "p7bull" : "s123bull";
}

ClassReport in_class(const Graph& g, GraphClass c) {
  const Pattern& second = catalogue_pattern(c == GraphClass::P7Bull ? "P7" : "S123");
  for (const Pattern* p : {&catalogue_pattern("bull"), &second}) {
    if (auto hit = find_induced(g, *p)) return {false, std::move(hit)};
  }
  return {};
}

}  // namespace mwss
