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

#include "pairmatch/census.hpp"

#include <omp.h>

#include <chrono>
#include <numeric>
#include <sstream>

#include "pairmatch/alternating.hpp"
#include "pairmatch/generators.hpp"
#include "pairmatch/matching.hpp"

namespace pairmatch {

Ratio Ratio::reduced() const {
  const auto d = std::gcd(num, den);
  return d ? Ratio{num / d, den / d} : *this;
}

std::string Ratio::to_string() const {
  const auto r = reduced();
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

const char* to_string(LemmaState state) {
  switch (state) {
    case LemmaState::checked: return "checked";
    case LemmaState::skipped_over_ceiling: return "skipped (over ceiling)";
    case LemmaState::skipped_budget: return "skipped (budget exceeded)";
    case LemmaState::skipped_disabled: return "skipped (disabled)";
  }
  return "unknown";
}

std::optional<Ratio> GraphReport::ratio() const {
  if (!alpha2 || *alpha2 == 0) return std::nullopt;
  return Ratio{nu, *alpha2}.reduced();
}

bool GraphReport::failed() const {
  if (!ratio_check || lemmas.failed > 0) return true;
  if (!lambda2 || !alpha2) return false;
  // nu >= alpha2 >= ceil(lambda2 / 2)
  return nu < *alpha2 || 2 * *alpha2 < *lambda2;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace

GraphReport analyze_graph(const std::string& id, const Graph& g, const AnalysisOptions& options) {
  GraphReport r;
  r.id = id;
  r.n = g.vertex_count();
  r.m = g.edge_count();

  auto start = Clock::now();
  r.nu = static_cast<int>(max_matching(g).size());
  r.timings.matching_ms = elapsed_ms(start);

  start = Clock::now();
  const auto solved = solve_pair(g, {options.node_budget});
  r.timings.pairs_ms = elapsed_ms(start);
  r.status = solved.status;
  r.nodes = solved.nodes;
  if (solved.solved()) {
    r.lambda2 = solved.result->lambda2;
    r.alpha2 = solved.result->alpha2;
    r.ratio_check = ratio_within_bound(r.nu, *r.alpha2);
  }

  if (!options.run_lemmas) {
    r.lemmas.state = LemmaState::skipped_disabled;
  } else if (r.m > options.lemma_edge_ceiling) {
    r.lemmas.state = LemmaState::skipped_over_ceiling;
  } else if (!solved.solved()) {
    r.lemmas.state = LemmaState::skipped_budget;
  } else {
    start = Clock::now();
    try {
      const auto triple = canonical_triple(g, {options.lemma_edge_ceiling, options.node_budget});
      const auto report = verify_lemmas(g, triple, {r.nu, *r.lambda2, *r.alpha2});
      r.lemmas.state = LemmaState::checked;
      r.lemmas.passed = report.passed_count();
      r.lemmas.failed = report.failed_count();
      for (const auto& v : report.verdicts) {
        if (!v.passed()) r.lemmas.failures.push_back(v.statement + ": " + v.detail);
      }
    } catch (const BudgetExceeded&) {
      r.lemmas.state = LemmaState::skipped_budget;
    }
    r.timings.lemmas_ms = elapsed_ms(start);
  }
  return r;
}

Corpus exhaustive_corpus(int n) {
  const LabeledGraphs graphs(n);
  return {"exhaustive n=" + std::to_string(n), static_cast<std::size_t>(graphs.size()),
          [graphs, n](std::size_t i) {
            return std::pair{"n" + std::to_string(n) + ":" + std::to_string(i), graphs.at(i)};
          }};
}

Corpus random_corpus(int n, double p, std::size_t count, std::uint64_t seed) {
  gen_random(n, p, seed);  // validates arguments up front
  std::ostringstream p_text;
  p_text << p;
  return {"random n=" + std::to_string(n) + " p=" + p_text.str() + " count=" + std::to_string(count) +
              " seed=" + std::to_string(seed),
          count, [=](std::size_t i) {
            return std::pair{"random:" + std::to_string(i), gen_random(n, p, seed + i)};
          }};
}

Corpus graph_list_corpus(std::string descriptor, std::vector<Graph> graphs, const std::string& id_prefix) {
  const auto size = graphs.size();
  return {std::move(descriptor), size, [graphs = std::move(graphs), id_prefix](std::size_t i) {
            return std::pair{id_prefix + std::to_string(i + 1), graphs[i]};
          }};
}

Corpus tight_family_corpus(int k_min, int k_max) {
  if (k_min < 1 || k_max < k_min) throw GraphError("tight family range must satisfy 1 <= k_min <= k_max");
  return {"family tight k=" + std::to_string(k_min) + ".." + std::to_string(k_max),
          static_cast<std::size_t>(k_max - k_min + 1), [=](std::size_t i) {
            const int k = k_min + static_cast<int>(i);
            return std::pair{"tight:" + std::to_string(k), gen_tight_family(tight_family_base(k))};
          }};
}

Corpus gap_family_corpus(int k_min, int k_max) {
  if (k_min < 2 || k_max < k_min) throw GraphError("gap family range must satisfy 2 <= k_min <= k_max");
  return {"family gap k=" + std::to_string(k_min) + ".." + std::to_string(k_max),
          static_cast<std::size_t>(k_max - k_min + 1), [=](std::size_t i) {
            const int k = k_min + static_cast<int>(i);
            return std::pair{"gap:" + std::to_string(k), gen_gap_family(k)};
          }};
}

CensusSummary summarize(const std::string& corpus, const std::vector<GraphReport>& rows) {
  CensusSummary s;
  s.corpus = corpus;
  s.graph_count = rows.size();
  for (const auto& r : rows) {
    if (r.status == SolveStatus::budget_exceeded) ++s.budget_exceeded;
    if (r.lemmas.state == LemmaState::checked) {
      ++s.lemmas_checked;
    } else {
      ++s.lemmas_skipped;
    }
    if (r.alpha2) ++s.gap_histogram[r.nu - *r.alpha2];
    if (auto q = r.ratio(); q && (!s.max_ratio || *s.max_ratio < *q)) {
      s.max_ratio = q;
      s.max_ratio_graph = r.id;
    }
    if (r.failed()) {
      std::string why = r.id + ":";
      if (!r.ratio_check) why += " 4*nu > 5*alpha2;";
      for (const auto& f : r.lemmas.failures) why += " " + f + ";";
      if (r.ratio_check && r.lemmas.failures.empty()) why += " invariant ordering nu >= alpha2 >= lambda2/2 broken;";
      why.pop_back();
      s.failures.push_back(std::move(why));
    }
  }
  return s;
}

namespace {

GraphReport analyze_item(const Corpus& corpus, std::size_t i, const AnalysisOptions& options) {
  try {
    auto [id, g] = corpus.item(i);
    return analyze_graph(id, g, options);
  } catch (const std::exception& e) {
    GraphReport r;
    r.id = "#" + std::to_string(i);
    r.lemmas.failed = 1;
    r.lemmas.failures.push_back(std::string("error: ") + e.what());
    return r;
  }
}

}  // namespace

CensusResult run_census_serial(const Corpus& corpus, const AnalysisOptions& options) {
  CensusResult result;
  result.rows.reserve(corpus.size);
  for (std::size_t i = 0; i < corpus.size; ++i) result.rows.push_back(analyze_item(corpus, i, options));
  result.summary = summarize(corpus.descriptor, result.rows);
  return result;
}

CensusResult run_census_parallel(const Corpus& corpus, const AnalysisOptions& options, int jobs) {
  CensusResult result;
  result.rows.resize(corpus.size);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const auto size = static_cast<std::int64_t>(corpus.size);
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
  for (std::int64_t i = 0; i < size; ++i) {
    result.rows[static_cast<std::size_t>(i)] = analyze_item(corpus, static_cast<std::size_t>(i), options);
  }
  result.summary = summarize(corpus.descriptor, result.rows);
  return result;
}

}  // namespace pairmatch
