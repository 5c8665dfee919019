// Copyright 2026 The pairmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// pairmatch: maximum matchings, optimal pairs of edge-disjoint matchings and
// the 5/4 census from the command line.
//
// Exit status: 0 all checks pass, 1 a check failed, 2 usage or input error,
// 3 node budget exceeded (and nothing failed).

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "pairmatch/alternating.hpp"
#include "pairmatch/census.hpp"
#include "pairmatch/disjoint_pairs.hpp"
#include "pairmatch/generators.hpp"
#include "pairmatch/graph_io.hpp"
#include "pairmatch/report.hpp"

namespace {

using namespace pairmatch;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::map<std::string, GraphFormat> kFormats{{"edgelist", GraphFormat::edge_list},
                                                  {"graph6", GraphFormat::graph6}};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  return read_file(path);
}

std::vector<Graph> load(const std::string& path, GraphFormat format) {
  auto graphs = parse_graphs(slurp(path), format);
  if (graphs.empty()) throw UsageError("no graph found in '" + path + "'");
  return graphs;
}

std::string graph_id(const std::string& path, std::size_t index, std::size_t count) {
  return count == 1 ? path : path + ":" + std::to_string(index + 1);
}

int exit_for(bool failed, bool budget) {
  if (failed) return kExitCheckFailed;
  return budget ? kExitBudget : kExitOk;
}

struct CommonOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::size_t lemma_ceiling = kPairOracleEdgeCeiling;
  bool no_timings = false;
  bool no_lemmas = false;
  std::string output = "json";

  AnalysisOptions analysis() const { return {node_budget, lemma_ceiling, !no_lemmas}; }
};

void add_limits(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--node-budget", o.node_budget, "Branch-and-bound node budget per graph")->capture_default_str();
  cmd->add_option("--lemma-ceiling", o.lemma_ceiling, "Largest edge count for the lemma suite")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();
}

void add_common(CLI::App* cmd, CommonOptions& o) {
  add_limits(cmd, o);
  cmd->add_flag("--no-timings", o.no_timings, "Omit wall-clock timings (byte-stable output)");
  cmd->add_flag("--no-lemmas", o.no_lemmas, "Skip the lemma suite");
  cmd->add_option("--output", o.output, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

int run_solve(const std::string& input, GraphFormat format, const CommonOptions& o) {
  const auto graphs = load(input, format);
  bool failed = false;
  bool budget = false;
  if (o.output == "csv") std::cout << census_csv_header() << '\n';
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto report = analyze_graph(graph_id(input, i, graphs.size()), graphs[i], o.analysis());
    failed = failed || report.failed();
    budget = budget || report.status == SolveStatus::budget_exceeded;
    std::cout << (o.output == "csv" ? census_csv_row(report) : graph_report_json(report, !o.no_timings)) << '\n';
  }
  return exit_for(failed, budget);
}

struct CensusSelection {
  std::optional<int> exhaustive;
  std::string random;
  std::string graph6_file;
  std::string family;
  int k_min = 0;
  int k_max = 0;
  std::uint64_t seed = 1;
  int jobs = 0;
  bool rows = false;
};

Corpus make_corpus(const CensusSelection& s) {
  const int chosen = s.exhaustive.has_value() + !s.random.empty() + !s.graph6_file.empty() + !s.family.empty();
  if (chosen != 1) {
    throw UsageError("choose exactly one corpus: --exhaustive, --random, --graph6-file or --family");
  }
  if (s.exhaustive) return exhaustive_corpus(*s.exhaustive);
  if (!s.random.empty()) {
    std::istringstream in(s.random);
    int n = 0;
    double p = 0;
    std::size_t count = 0;
    char c1 = 0;
    char c2 = 0;
    if (!(in >> n >> c1 >> p >> c2 >> count) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof()) {
      throw UsageError("--random expects N,P,COUNT");
    }
    return random_corpus(n, p, count, s.seed);
  }
  if (!s.graph6_file.empty()) {
    return graph_list_corpus("graph6 file " + s.graph6_file, parse_graph6_lines(slurp(s.graph6_file)),
                             s.graph6_file + ":");
  }
  if (s.family == "tight") return tight_family_corpus(s.k_min ? s.k_min : 1, s.k_max ? s.k_max : 2);
  if (s.family == "gap") return gap_family_corpus(s.k_min ? s.k_min : 2, s.k_max ? s.k_max : 6);
  throw UsageError("unknown family '" + s.family + "' (expected tight or gap)");
}

int run_census(const CensusSelection& s, const CommonOptions& o) {
  const auto corpus = make_corpus(s);
  const auto result = run_census_parallel(corpus, o.analysis(), s.jobs);
  if (o.output == "csv") {
    std::cout << census_csv_header() << '\n';
    for (const auto& r : result.rows) std::cout << census_csv_row(r) << '\n';
  } else {
    std::cout << census_json(result, s.rows, !o.no_timings) << '\n';
  }
  return exit_for(!result.summary.ok(), result.summary.budget_exceeded > 0);
}

int run_verify(const std::string& input, GraphFormat format, const CommonOptions& o) {
  const auto graphs = load(input, format);
  bool failed = false;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    if (g.edge_count() > o.lemma_ceiling) {
      throw UsageError(graph_id(input, i, graphs.size()) + " has " + std::to_string(g.edge_count()) +
                       " edges; verify-lemmas refuses graphs above " + std::to_string(o.lemma_ceiling) +
                       " edges (raise --lemma-ceiling)");
    }
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    const auto solved = solve_pair(g, {o.node_budget});
    if (!solved.solved()) {
      std::cerr << "node budget exceeded on " << graph_id(input, i, graphs.size()) << '\n';
      return kExitBudget;
    }
    const GraphInvariants known{static_cast<int>(max_matching(g).size()), solved.result->lambda2,
                                solved.result->alpha2};
    std::vector<TripleLemmaReport> reports;
    for (auto& t : maximizing_triples(g, {o.lemma_ceiling, o.node_budget})) {
      auto rep = verify_lemmas(g, t, known);
      failed = failed || !rep.all_passed();
      reports.push_back({std::move(t), std::move(rep)});
    }
    std::cout << lemma_report_json(graph_id(input, i, graphs.size()), g, reports) << '\n';
  }
  return failed ? kExitCheckFailed : kExitOk;
}

struct GenerateArgs {
  std::string kind;
  std::vector<double> params;
  std::string input;
  std::string input_format = "edgelist";
  std::uint64_t seed = 1;
};

int param(const GenerateArgs& a, std::size_t i, const char* what) {
  if (a.params.size() <= i) throw UsageError(std::string("generate ") + a.kind + " needs " + what);
  return static_cast<int>(a.params[i]);
}

int run_generate(const GenerateArgs& a, GraphFormat format) {
  std::vector<Graph> out;
  if (a.kind == "path") {
    out.push_back(gen_path(param(a, 0, "an edge count")));
  } else if (a.kind == "cycle") {
    out.push_back(gen_cycle(param(a, 0, "an edge count")));
  } else if (a.kind == "complete") {
    out.push_back(gen_complete(param(a, 0, "a vertex count")));
  } else if (a.kind == "petersen") {
    out.push_back(gen_petersen());
  } else if (a.kind == "random") {
    if (a.params.size() < 2) throw UsageError("generate random needs N P");
    out.push_back(gen_random(param(a, 0, "N"), a.params[1], a.seed));
  } else if (a.kind == "tight") {
    if (!a.input.empty()) {
      for (const auto& base : load(a.input, kFormats.at(a.input_format))) out.push_back(gen_tight_family(base));
    } else {
      out.push_back(gen_tight_family(tight_family_base(param(a, 0, "K or --input"))));
    }
  } else if (a.kind == "gap") {
    out.push_back(gen_gap_family(param(a, 0, "K")));
  } else if (a.kind == "exhaustive") {
    for (const auto& g : enumerate_graphs(param(a, 0, "N"))) out.push_back(g);
  } else {
    throw UsageError("unknown generator '" + a.kind + "'");
  }
  if (format == GraphFormat::edge_list && out.size() != 1) {
    throw UsageError("edge-list output holds one graph; use --format graph6");
  }
  for (const auto& g : out) std::cout << (format == GraphFormat::graph6 ? encode_graph6(g) + "\n" : format_edge_list(g));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum matchings, lambda2/alpha2 of edge-disjoint matching pairs, and the 5/4 census"};
  app.require_subcommand(1);

  std::string format_name = "edgelist";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Graph file format")
        ->check(CLI::IsMember({"edgelist", "graph6"}))
        ->capture_default_str();
  };

  CommonOptions common;
  std::string input;

  auto* solve = app.add_subcommand("solve", "Report nu, lambda2, alpha2 and the lemma summary per graph");
  solve->add_option("input", input, "Graph file ('-' for stdin)")->required();
  add_format(solve);
  add_common(solve, common);

  CensusSelection sel;
  auto* census = app.add_subcommand("census", "Check the 5/4 bound over a corpus");
  census->add_option("--exhaustive", sel.exhaustive, "Every labeled graph on N <= 7 vertices");
  census->add_option("--random", sel.random, "N,P,COUNT random graphs (graph i uses seed+i)");
  census->add_option("--graph6-file", sel.graph6_file, "File with one graph6 string per line");
  census->add_option("--family", sel.family, "Built-in family: tight or gap")->check(CLI::IsMember({"tight", "gap"}));
  census->add_option("--k-min", sel.k_min, "First family index");
  census->add_option("--k-max", sel.k_max, "Last family index");
  census->add_option("--seed", sel.seed, "Seed for --random")->capture_default_str();
  census->add_option("--jobs", sel.jobs, "Worker threads (0 = OpenMP default)")->capture_default_str();
  census->add_flag("--rows", sel.rows, "Include per-graph reports in the JSON summary");
  add_common(census, common);

  auto* verify = app.add_subcommand("verify-lemmas", "Run the lemma suite on every maximizing triple");
  verify->add_option("input", input, "Graph file ('-' for stdin)")->required();
  add_format(verify);
  add_limits(verify, common);

  GenerateArgs gen;
  auto* generate = app.add_subcommand(
      "generate", "Write a graph: path K | cycle K | complete N | petersen | random N P | tight K | gap K | exhaustive N");
  generate->add_option("kind", gen.kind, "Generator")->required();
  generate->add_option("params", gen.params, "Generator parameters");
  generate->add_option("--input", gen.input, "Base graph file for 'tight'");
  generate->add_option("--input-format", gen.input_format, "Format of --input")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
  generate->add_option("--seed", gen.seed, "Seed for 'random'")->capture_default_str();
  add_format(generate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    const auto format = kFormats.at(format_name);
    if (*solve) return run_solve(input, format, common);
    if (*census) return run_census(sel, common);
    if (*verify) return run_verify(input, format, common);
    if (*generate) return run_generate(gen, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CeilingExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
