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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pairmatch/disjoint_pairs.hpp"
#include "pairmatch/graph.hpp"

namespace pairmatch {

/// Exact non-negative fraction compared by cross-multiplication.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Ratio reduced() const;
  std::string to_string() const;
  friend bool operator<(const Ratio& a, const Ratio& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator==(const Ratio& a, const Ratio& b) { return a.num * b.den == b.num * a.den; }
};

/// 4 nu <= 5 alpha2, in integers. Holds trivially for the edgeless graph.
constexpr bool ratio_within_bound(std::int64_t nu, std::int64_t alpha2) { return 4 * nu <= 5 * alpha2; }

enum class LemmaState { checked, skipped_over_ceiling, skipped_budget, skipped_disabled };

const char* to_string(LemmaState state);

struct LemmaSummary {
  LemmaState state = LemmaState::skipped_disabled;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // "statement: detail"
};

struct PhaseTimings {
  double matching_ms = 0;
  double pairs_ms = 0;
  double lemmas_ms = 0;
};

struct GraphReport {
  std::string id;
  Vertex n = 0;
  std::size_t m = 0;
  int nu = 0;
  SolveStatus status = SolveStatus::solved;
  std::optional<int> lambda2;  // set iff solved
  std::optional<int> alpha2;
  bool ratio_check = true;
  std::uint64_t nodes = 0;
  LemmaSummary lemmas;
  PhaseTimings timings;

  std::optional<Ratio> ratio() const;
  /// Any check failed: ratio, invariant ordering or a lemma.
  bool failed() const;
};

struct AnalysisOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::size_t lemma_edge_ceiling = kPairOracleEdgeCeiling;
  bool run_lemmas = true;
};

/// Solves one graph (nu, lambda2, alpha2), checks the 5/4 bound and, within
/// the ceiling, runs the lemma suite on its canonical triple.
GraphReport analyze_graph(const std::string& id, const Graph& g, const AnalysisOptions& options = {});

/// Indexed, side-effect free graph source; item(i) may be called from any
/// thread.
struct Corpus {
  std::string descriptor;
  std::size_t size = 0;
  std::function<std::pair<std::string, Graph>(std::size_t)> item;
};

/// Every labeled graph on n vertices; ids are "n<k>:<index>".
Corpus exhaustive_corpus(int n);
/// `count` G(n,p) graphs; graph i uses gen_random(n, p, seed + i).
Corpus random_corpus(int n, double p, std::size_t count, std::uint64_t seed);
Corpus graph_list_corpus(std::string descriptor, std::vector<Graph> graphs, const std::string& id_prefix);
/// gen_tight_family(tight_family_base(k)) for k in [k_min, k_max].
Corpus tight_family_corpus(int k_min, int k_max);
/// gen_gap_family(k) for k in [k_min, k_max].
Corpus gap_family_corpus(int k_min, int k_max);

struct CensusSummary {
  std::string corpus;
  std::size_t graph_count = 0;
  std::optional<Ratio> max_ratio;  // over graphs with alpha2 > 0
  std::string max_ratio_graph;     // first graph in input order attaining it
  std::map<int, std::size_t> gap_histogram;  // nu - alpha2 -> count
  std::size_t budget_exceeded = 0;
  std::size_t lemmas_checked = 0;
  std::size_t lemmas_skipped = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Aggregates rows in input order; the result does not depend on the order in
/// which rows were computed.
CensusSummary summarize(const std::string& corpus, const std::vector<GraphReport>& rows);

struct CensusResult {
  std::vector<GraphReport> rows;  // input order
  CensusSummary summary;
};

/// Reference implementation: one graph after another.
CensusResult run_census_serial(const Corpus& corpus, const AnalysisOptions& options);
/// OpenMP worker pool over graphs; `jobs` <= 0 uses the OpenMP default.
/// Rows are identical to run_census_serial apart from timings.
CensusResult run_census_parallel(const Corpus& corpus, const AnalysisOptions& options, int jobs = 0);

}  // namespace pairmatch
