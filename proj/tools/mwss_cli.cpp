// mwss: command-line front end for the exact MWSS solvers.
//
// Exit codes: 0 ok, 1 verify mismatch, 2 bad input or usage, 3 not in class,
// 4 node budget exhausted.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mwss/bench.hpp"
#include "mwss/exact.hpp"
#include "mwss/generator.hpp"
#include "mwss/modular.hpp"
#include "mwss/p7bull.hpp"
#include "mwss/patterns.hpp"
#include "mwss/s123bull.hpp"
#include "mwss/text_format.hpp"

using json = nlohmann::json;
using namespace mwss;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitNotInClass = 3;
constexpr int kExitBudget = 4;

std::vector<int> one_based(const std::vector<int>& vs) {
  std::vector<int> out;
  out.reserve(vs.size());
  for (int v : vs) out.push_back(v + 1);
  return out;
}

std::vector<int> one_based(const VertexSet& s) { return one_based(s.to_vector()); }

std::string join(const std::vector<int>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? " " : "") + std::to_string(vs[i]);
  return out;
}

// Raised inside a command to leave with a given status after printing.
struct Exit {
  int code;
};

struct Output {
  bool as_json = false;

  void not_in_class(const std::string& claim, const std::vector<int>& witness) const {
    if (as_json) {
      std::cout << nlohmann::json::object({{"error", "not in class"},
                                 {"claim", claim},
                                 {"witness", one_based(witness)}})
                       .dump()
                << '\n';
    } else {
      std::cerr << "not in class: " << claim << "\nwitness: " << join(one_based(witness)) << '\n';
    }
    throw Exit{kExitNotInClass};
  }

  void budget(const BudgetExhausted& e) const {
    if (as_json) {
      std::cout << nlohmann::json::object({{"error", "budget exhausted"},
                                 {"nodes", e.nodes()},
                                 {"best_weight", e.best().weight}})
                       .dump()
                << '\n';
    } else {
      std::cerr << "node budget exhausted after " << e.nodes()
                << " nodes; best weight found " << e.best().weight << '\n';
    }
    throw Exit{kExitBudget};
  }

  void solution(const Solution& s, const std::string& cls, const SolveStats* st,
                std::optional<std::int64_t> nodes = std::nullopt) const {
    if (as_json) {
      nlohmann::json j{{"weight", s.weight}, {"set", one_based(s.set)}, {"class", cls}};
      if (nodes) j["nodes"] = *nodes;
      if (st)
        j["stats"] = {{"recursions", st->recursions},
                      {"leaves", st->leaves},
                      {"c5_scans", st->c5_scans},
                      {"contexts", st->contexts},
                      {"max_depth", st->max_depth},
                      {"seven_partitions", st->seven_partitions},
                      {"isolated_components", st->isolated_components},
                      {"claim_misses", st->claim_misses},
                      {"fallbacks", st->fallbacks}};
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "weight " << s.weight << "\nset " << join(one_based(s.set)) << "\nclass " << cls
                << '\n';
      if (st)
        std::cout << "recursions " << st->recursions << "\nleaves " << st->leaves << "\nc5_scans "
                  << st->c5_scans << '\n';
      if (nodes) std::cout << "nodes " << *nodes << '\n';
    }
  }
};

WeightedGraph load(const std::string& path) {
  try {
    return read_text_graph_file(path);
  } catch (const InputError& e) {
    std::cerr << path << ": " << e.what() << '\n';
    throw Exit{kExitInput};
  }
}

std::optional<GraphClass> parse_class(const std::string& name) {
  if (name == "p7bull") return GraphClass::P7Bull;
  if (name == "s123bull") return GraphClass::S123Bull;
  return std::nullopt;
}

// Picks the solver class, validating membership when asked or when `auto`.
GraphClass choose_class(const Graph& g, const std::string& requested, bool strict, const Output& out) {
  if (requested == "auto") {
    const ClassReport p7 = in_class(g, GraphClass::P7Bull);
    if (p7.member) return GraphClass::P7Bull;
    const ClassReport s123 = in_class(g, GraphClass::S123Bull);
    if (s123.member) return GraphClass::S123Bull;
    out.not_in_class("contains " + p7.witness->pattern + " and " + s123.witness->pattern,
                     p7.witness->embedding);
  }
  const GraphClass cls = *parse_class(requested);
  if (strict) {
    const ClassReport r = in_class(g, cls);
    if (!r.member) out.not_in_class("contains an induced " + r.witness->pattern, r.witness->embedding);
  }
  return cls;
}

Solution run_solver(GraphClass cls, const WeightedGraph& wg, const SolverOptions& opts,
                    SolveStats& st, const Output& out) {
  try {
    return cls == GraphClass::P7Bull ? p7bull::solve(wg.graph, wg.weights, opts, &st)
                                     : s123bull::solve(wg.graph, wg.weights, opts, &st);
  } catch (const NotInClassError& e) {
    out.not_in_class(e.claim(), e.witness());
  } catch (const BudgetExhausted& e) {
    out.budget(e);
  }
  throw Exit{kExitInput};
}

int parse_int(const std::string& item) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(item, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != item.size()) {
    std::cerr << "not an integer: '" << item << "'\n";
    throw Exit{kExitInput};
  }
  return v;
}

// Comma-separated integers; an item may also be a range A..B or A..B:STEP.
std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(item));
      continue;
    }
    const auto colon = item.find(':', dots);
    const int lo = parse_int(item.substr(0, dots));
    const int hi = parse_int(item.substr(dots + 2, colon == std::string::npos ? std::string::npos
                                                                              : colon - dots - 2));
    const int step = colon == std::string::npos ? 1 : parse_int(item.substr(colon + 1));
    if (step <= 0) {
      std::cerr << "range step must be positive\n";
      throw Exit{kExitInput};
    }
    for (int v = lo; v <= hi; v += step) out.push_back(v);
  }
  return out;
}

struct SolveArgs {
  std::string cls = "auto";
  std::string input;
  bool strict = false;
  bool json = false;
  bool no_claims = false;
  int threads = 1;
  std::int64_t leaf_budget = kDefaultNodeBudget;
};

void add_solver_flags(CLI::App* cmd, SolveArgs& a) {
  cmd->add_option("--class", a.cls, "Graph class")
      ->check(CLI::IsMember({"p7bull", "s123bull", "auto"}))
      ->capture_default_str();
  cmd->add_option("--input,-i", a.input, "Graph file")->required();
  cmd->add_flag("--strict", a.strict, "Check class membership before solving");
  cmd->add_flag("--json", a.json, "JSON output");
  cmd->add_flag("--no-check-claims", a.no_claims, "Skip the structural runtime checks");
  cmd->add_option("--threads", a.threads, "Workers for the per-vertex loop")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--leaf-budget", a.leaf_budget, "Node budget per branch-and-bound leaf")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

SolverOptions solver_options(const SolveArgs& a) {
  SolverOptions o;
  o.check_claims = !a.no_claims;
  o.threads = a.threads;
  o.leaf_budget = a.leaf_budget;
  return o;
}

int cmd_solve(const SolveArgs& a) {
  const Output out{a.json};
  const WeightedGraph wg = load(a.input);
  const GraphClass cls = choose_class(wg.graph, a.cls, a.strict, out);
  SolveStats st;
  const Solution s = run_solver(cls, wg, solver_options(a), st, out);
  out.solution(s, std::string(class_name(cls)), &st);
  return 0;
}

int cmd_verify(const SolveArgs& a, std::int64_t oracle_budget) {
  const Output out{a.json};
  const WeightedGraph wg = load(a.input);
  const GraphClass cls = choose_class(wg.graph, a.cls, a.strict, out);
  SolveStats st;
  const Solution s = run_solver(cls, wg, solver_options(a), st, out);
  Solution o;
  try {
    o = exact_mwss(wg.graph, wg.weights, wg.graph.vertices(), oracle_budget);
  } catch (const BudgetExhausted& e) {
    out.budget(e);
  }
  const bool witness_ok = verify_solution(wg.graph, wg.weights, s);
  const bool agree = s.weight == o.weight && witness_ok;
  if (a.json) {
    std::cout << json{{"agree", agree},
                      {"solver_weight", s.weight},
                      {"oracle_weight", o.weight},
                      {"witness_valid", witness_ok},
                      {"class", class_name(cls)}}
                     .dump()
              << '\n';
  } else {
    std::cout << (agree ? "agree" : "MISMATCH") << "\nsolver " << s.weight << "\noracle "
              << o.weight << "\nwitness " << (witness_ok ? "valid" : "INVALID") << '\n';
  }
  return agree ? 0 : kExitMismatch;
}

int cmd_oracle(const std::string& input, bool as_json, std::int64_t budget) {
  const Output out{as_json};
  const WeightedGraph wg = load(input);
  std::int64_t nodes = 0;
  Solution s;
  try {
    s = exact_mwss(wg.graph, wg.weights, wg.graph.vertices(), budget, &nodes);
  } catch (const BudgetExhausted& e) {
    out.budget(e);
  }
  SolveStats st;
  st.leaves = 1;
  out.solution(s, "oracle", &st, nodes);
  return 0;
}

int cmd_recognize(const std::string& input, bool as_json) {
  const WeightedGraph wg = load(input);
  const Graph& g = wg.graph;
  json j;
  for (GraphClass c : {GraphClass::P7Bull, GraphClass::S123Bull}) {
    const ClassReport r = in_class(g, c);
    const std::string name(class_name(c));
    if (r.member) {
      j[name] = {{"member", true}};
      if (!as_json) std::cout << name << ": yes\n";
    } else {
      j[name] = {{"member", false},
                 {"pattern", r.witness->pattern},
                 {"witness", one_based(r.witness->embedding)}};
      if (!as_json)
        std::cout << name << ": no (" << r.witness->pattern << ": "
                  << join(one_based(r.witness->embedding)) << ")\n";
    }
  }
  const auto module = find_proper_homogeneous_set(g);
  j["prime"] = !module.has_value();
  if (module) j["module"] = one_based(*module);
  if (as_json) {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "prime: " << (module ? "no" : "yes") << '\n';
    if (module) std::cout << "module: " << join(one_based(*module)) << '\n';
  }
  return 0;
}

struct GenerateArgs {
  std::string family;
  int n = 16;
  double p = 0.3;
  std::string cls = "p7bull";
  std::string sizes = "1,1,1,1,1,1,1";
  std::uint64_t seed = 1;
  Weight max_weight = 0;
  std::string output;
};

int cmd_generate(const GenerateArgs& a) {
  Graph g;
  try {
    if (a.family == "random") {
      const GenClass cls = a.cls == "p7bull"     ? GenClass::P7Bull
                           : a.cls == "s123bull" ? GenClass::S123Bull
                                                 : GenClass::BullFreePrime;
      g = random_in_class(a.n, a.p, cls, a.seed);
    } else if (a.family == "c7blowup") {
      const auto s = parse_int_list(a.sizes);
      if (s.size() != 7) {
        std::cerr << "--sizes needs exactly 7 counts\n";
        return kExitInput;
      }
      g = c7_blowup({s[0], s[1], s[2], s[3], s[4], s[5], s[6]});
    } else {
      g = fixture_counterexample().graph;
    }
  } catch (const InputError& e) {
    std::cerr << e.what() << '\n';
    return kExitInput;
  } catch (const GenerationError& e) {
    std::cerr << e.what() << " (try another --seed)\n";
    return kExitInput;
  }
  const VertexWeights w = a.max_weight > 0 ? random_weights(g.order(), 0, a.max_weight, a.seed ^ 0x9e3779b97f4a7c15ULL)
                                           : VertexWeights::uniform(g.order());
  if (a.output.empty() || a.output == "-") {
    write_text_graph(std::cout, g, w);
  } else {
    try {
      write_text_graph_file(a.output, g, w);
    } catch (const InputError& e) {
      std::cerr << e.what() << '\n';
      return kExitInput;
    }
  }
  return 0;
}

struct BenchArgs {
  std::string family = "c7blowup";
  std::string sizes;
  int repeat = 3;
  std::string csv;
  std::int64_t oracle_budget = kOracleNodeBudget;
};

int cmd_bench(const BenchArgs& a) {
  const std::vector<int> sizes = parse_int_list(a.sizes);
  if (sizes.empty()) {
    std::cerr << "--sizes is empty\n";
    return kExitInput;
  }
  const BenchFamily fam = a.family == "twin" ? BenchFamily::TwinFixture : BenchFamily::C7Blowup;
  BenchOptions opts;
  opts.repeat = a.repeat;
  opts.oracle_budget = a.oracle_budget;
  std::vector<BenchRow> rows;
  try {
    rows = run_bench(fam, sizes, opts);
  } catch (const InputError& e) {
    std::cerr << e.what() << '\n';
    return kExitInput;
  }

  std::ofstream file;
  if (!a.csv.empty()) {
    file.open(a.csv);
    if (!file) {
      std::cerr << "cannot write " << a.csv << '\n';
      return kExitInput;
    }
  }
  std::ostream& csv = a.csv.empty() ? std::cout : file;
  csv << "n,time_ms,recursions,leaves\n";
  for (const auto& r : rows) csv << r.n << ',' << r.time_ms << ',' << r.recursions << ',' << r.leaves << '\n';

  for (const auto& r : rows) {
    std::cout << "n=" << r.n << " solve " << r.time_ms << " ms, oracle ";
    if (r.oracle_ms)
      std::cout << *r.oracle_ms << " ms (" << r.oracle_nodes << " nodes)";
    else
      std::cout << "unfinished after " << r.oracle_nodes << " nodes";
    std::cout << (r.agree ? "" : " WEIGHT MISMATCH") << '\n';
  }
  const BenchSummary s = summarize(rows);
  std::cout << "count slope (log-log, recursions+leaves): " << s.count_slope << '\n';
  if (s.largest_oracle_n)
    std::cout << "speedup at n=" << *s.largest_oracle_n << ": " << s.speedup << "x\n";
  else
    std::cout << "oracle finished at no size\n";
  return s.all_agree ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact maximum weight stable set for (P7, bull)-free and (S1,2,3, bull)-free graphs"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve with the decomposition solver");
  add_solver_flags(solve, solve_args);

  SolveArgs verify_args;
  std::int64_t verify_budget = kOracleNodeBudget;
  auto* verify = app.add_subcommand("verify", "Solve and compare against the oracle");
  add_solver_flags(verify, verify_args);
  verify->add_option("--oracle-budget", verify_budget, "Oracle node budget")->capture_default_str();

  std::string oracle_input;
  bool oracle_json = false;
  std::int64_t oracle_budget = kOracleNodeBudget;
  auto* oracle = app.add_subcommand("oracle", "Plain branch-and-bound with the oracle budget");
  oracle->add_option("--input,-i", oracle_input, "Graph file")->required();
  oracle->add_flag("--json", oracle_json, "JSON output");
  oracle->add_option("--budget", oracle_budget, "Node budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string rec_input;
  bool rec_json = false;
  auto* recognize = app.add_subcommand("recognize", "Class membership and primality");
  recognize->add_option("--input,-i", rec_input, "Graph file")->required();
  recognize->add_flag("--json", rec_json, "JSON output");

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a test instance");
  generate->add_option("--family", gen.family, "Instance family")
      ->required()
      ->check(CLI::IsMember({"random", "c7blowup", "fixture"}));
  generate->add_option("--n", gen.n, "Vertices (random)")->capture_default_str();
  generate->add_option("--p", gen.p, "Edge probability (random)")->capture_default_str();
  generate->add_option("--class", gen.cls, "Target class (random)")
      ->check(CLI::IsMember({"p7bull", "s123bull", "bullfreeprime"}))
      ->capture_default_str();
  generate->add_option("--sizes", gen.sizes, "Seven part sizes, comma separated (c7blowup)")
      ->capture_default_str();
  generate->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  generate->add_option("--max-weight", gen.max_weight, "Random weights in [0, W]; 0 = unit weights")
      ->capture_default_str();
  generate->add_option("-o,--output", gen.output, "Output file (default stdout)");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Solver vs oracle timings on structured families");
  bench->add_option("--family", bench_args.family, "Instance family")
      ->check(CLI::IsMember({"c7blowup", "twin"}))
      ->capture_default_str();
  bench->add_option("--sizes", bench_args.sizes, "Vertex counts: comma separated, ranges as A..B:STEP")->required();
  bench->add_option("--repeat", bench_args.repeat, "Timing repetitions (median)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--csv", bench_args.csv, "CSV output file (default stdout)");
  bench->add_option("--oracle-budget", bench_args.oracle_budget, "Oracle node budget")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*solve) return cmd_solve(solve_args);
    if (*verify) return cmd_verify(verify_args, verify_budget);
    if (*oracle) return cmd_oracle(oracle_input, oracle_json, oracle_budget);
    if (*recognize) return cmd_recognize(rec_input, rec_json);
    if (*generate) return cmd_generate(gen);
    if (*bench) return cmd_bench(bench_args);
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitInput;
}
