#include "mwss/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "mwss/generator.hpp"
#include "mwss/p7bull.hpp"

namespace mwss {

namespace {

std::vector<int> spread(int total, int parts) {
  std::vector<int> out(parts, total / parts);
  for (int i = 0; i < total % parts; ++i) ++out[i];
  return out;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Graph bench_instance(BenchFamily family, int n) {
  if (family == BenchFamily::C7Blowup) {
    if (n < 7) throw InputError("c7blowup needs at least 7 vertices");
    const auto s = spread(n, 7);
    return c7_blowup({s[0], s[1], s[2], s[3], s[4], s[5], s[6]});
  }
  if (n < 13) throw InputError("twin-expanded fixture needs at least 13 vertices");
  return twin_expand(fixture_counterexample().graph, spread(n, 13));
}

std::vector<BenchRow> run_bench(BenchFamily family, const std::vector<int>& sizes,
                                const BenchOptions& opts) {
  std::vector<BenchRow> rows;
  for (int n : sizes) {
    const Graph g = bench_instance(family, n);
    const auto w = VertexWeights::uniform(n);
    BenchRow row;
    row.n = n;

    std::vector<double> times;
    Weight solved = 0;
    for (int r = 0; r < std::max(1, opts.repeat); ++r) {
      SolveStats st;
      const auto t0 = std::chrono::steady_clock::now();
      solved = p7bull::solve(g, w, opts.solver, &st).weight;
      times.push_back(ms_since(t0));
      row.recursions = st.recursions;
      row.leaves = st.leaves;
    }
    std::sort(times.begin(), times.end());
    row.time_ms = times[times.size() / 2];

    std::vector<double> oracle_times;
    try {
      for (int r = 0; r < std::max(1, opts.repeat); ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        const Solution o = exact_mwss(g, w, g.vertices(), opts.oracle_budget, &row.oracle_nodes);
        oracle_times.push_back(ms_since(t0));
        row.agree = o.weight == solved;
      }
      std::sort(oracle_times.begin(), oracle_times.end());
      row.oracle_ms = oracle_times[oracle_times.size() / 2];
    } catch (const BudgetExhausted& e) {
      row.oracle_nodes = e.nodes();
    }
    rows.push_back(row);
  }
  return rows;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i] <= 0 || y[i] <= 0) continue;
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  const double den = m * sxx - sx * sx;
  if (m < 2 || den == 0) return 0;
  return (m * sxy - sx * sy) / den;
}

BenchSummary summarize(const std::vector<BenchRow>& rows) {
  BenchSummary s;
  std::vector<double> xs, ys;
  for (const auto& r : rows) {
    xs.push_back(r.n);
    ys.push_back(static_cast<double>(r.recursions + r.leaves));
    s.all_agree = s.all_agree && r.agree;
    if (r.oracle_ms && (!s.largest_oracle_n || r.n > *s.largest_oracle_n)) {
      s.largest_oracle_n = r.n;
      s.speedup = *r.oracle_ms / std::max(r.time_ms, 1e-3);
    }
  }
  s.count_slope = loglog_slope(xs, ys);
  return s;
}

}  // namespace mwss
