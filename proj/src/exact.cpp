#include "mwss/exact.hpp"

#include <algorithm>
#include <numeric>

namespace mwss {

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, const VertexWeights& w, std::int64_t budget)
      : g_(g), w_(w), budget_(budget) {
    order_.resize(g.order());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return w_[a] > w_[b]; });
  }

  Solution run(const VertexSet& within) {
    branch(within, {}, 0);
    return best_;
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  // Greedy clique cover over `cand`, visiting vertices by decreasing weight;
  // each clique contributes its heaviest (first) member.
  Weight clique_cover_bound(const VertexSet& cand) {
    cover_.clear();
    Weight bound = 0;
    for (int v : order_) {
      if (!cand.contains(v)) continue;
      bool placed = false;
      for (auto& common : cover_) {
        if (common.contains(v)) {
          common &= g_.neighbors(v);
          placed = true;
          break;
        }
      }
      if (!placed) {
        cover_.push_back(g_.neighbors(v) & cand);
        bound += w_[v];
      }
    }
    return bound;
  }

  void branch(VertexSet cand, VertexSet chosen, Weight current) {
    if (++nodes_ > budget_) throw BudgetExhausted(best_, nodes_);

    // Vertices with no remaining neighbour are always taken.
    int pivot = -1;
    int pivot_degree = 0;
    VertexSet isolated;
    for (int v : cand) {
      const int deg = (g_.neighbors(v) & cand).size();
      if (deg == 0) {
        isolated.insert(v);
      } else if (deg > pivot_degree) {
        pivot = v;
        pivot_degree = deg;
      }
    }
    if (!isolated.empty()) {
      cand -= isolated;
      chosen |= isolated;
      current += w_.total(isolated);
    }
    if (pivot == -1) {
      if (current > best_.weight || best_unset_) {
        best_ = {chosen, current};
        best_unset_ = false;
      }
      return;
    }
    if (!best_unset_ && current + clique_cover_bound(cand) <= best_.weight) return;

    VertexSet closed = g_.neighbors(pivot);
    closed.insert(pivot);
    branch(cand - closed, chosen.with(pivot), current + w_[pivot]);
    branch(cand.without(pivot), chosen, current);
  }

  const Graph& g_;
  const VertexWeights& w_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<int> order_;
  std::vector<VertexSet> cover_;
  Solution best_;
  bool best_unset_ = true;
};

}  // namespace

Solution exact_mwss(const Graph& g, const VertexWeights& w, const VertexSet& within,
                    std::int64_t node_budget, std::int64_t* nodes_out) {
  if (w.size() != g.order()) throw InputError("weight vector length differs from vertex count");
  if (!within.is_subset_of(g.vertices())) throw InputError("vertex subset exceeds the graph");
  BranchAndBound search(g, w, node_budget);
  Solution sol = search.run(within);
  if (nodes_out) *nodes_out = search.nodes();
  return sol;
}

bool verify_solution(const Graph& g, const VertexWeights& w, const Solution& sol) {
  if (!sol.set.is_subset_of(g.vertices())) return false;
  if (w.size() != g.order()) return false;
  return is_stable(g, sol.set) && w.total(sol.set) == sol.weight;
}

}  // namespace mwss
