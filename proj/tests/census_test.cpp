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

#include <gtest/gtest.h>

#include <json.hpp>

#include "pairmatch/census.hpp"
#include "pairmatch/generators.hpp"
#include "pairmatch/report.hpp"

namespace pairmatch {
namespace {

TEST(Ratio, ReducesAndCompares) {
  EXPECT_EQ((Ratio{10, 8}).to_string(), "5/4");
  EXPECT_EQ((Ratio{3, 3}).to_string(), "1/1");
  EXPECT_TRUE((Ratio{6, 5}) < (Ratio{5, 4}));
  EXPECT_FALSE((Ratio{5, 4}) < (Ratio{10, 8}));
  EXPECT_EQ((Ratio{5, 4}), (Ratio{10, 8}));
  EXPECT_TRUE(ratio_within_bound(5, 4));
  EXPECT_FALSE(ratio_within_bound(6, 4));
  EXPECT_TRUE(ratio_within_bound(0, 0));
}

TEST(AnalyzeGraph, TightFamilyOnK2) {
  const auto r = analyze_graph("t", gen_tight_family(Graph(2, {{0, 1}})));
  EXPECT_EQ(r.n, 10);
  EXPECT_EQ(r.m, 9u);
  EXPECT_EQ(r.nu, 5);
  EXPECT_EQ(r.lambda2, 8);
  EXPECT_EQ(r.alpha2, 4);
  ASSERT_TRUE(r.ratio().has_value());
  EXPECT_EQ(r.ratio()->to_string(), "5/4");
  EXPECT_TRUE(r.ratio_check);
  EXPECT_EQ(r.lemmas.state, LemmaState::checked);
  EXPECT_EQ(r.lemmas.passed, 18u);
  EXPECT_FALSE(r.failed());
}

TEST(AnalyzeGraph, EdgelessGraphHasNoRatio) {
  const auto r = analyze_graph("e", Graph(4));
  EXPECT_EQ(r.nu, 0);
  EXPECT_EQ(r.alpha2, 0);
  EXPECT_FALSE(r.ratio().has_value());
  EXPECT_TRUE(r.ratio_check);
  EXPECT_FALSE(r.failed());
}

TEST(AnalyzeGraph, LemmaStates) {
  AnalysisOptions no_lemmas;
  no_lemmas.run_lemmas = false;
  EXPECT_EQ(analyze_graph("p", gen_petersen(), no_lemmas).lemmas.state, LemmaState::skipped_disabled);
  EXPECT_EQ(analyze_graph("p", gen_petersen()).lemmas.state, LemmaState::skipped_over_ceiling);

  AnalysisOptions tiny;
  tiny.node_budget = 3;
  const auto r = analyze_graph("p", gen_petersen(), tiny);
  EXPECT_EQ(r.status, SolveStatus::budget_exceeded);
  EXPECT_FALSE(r.lambda2.has_value());
  EXPECT_EQ(r.lemmas.state, LemmaState::skipped_over_ceiling);
  EXPECT_FALSE(r.failed());

  AnalysisOptions raised = tiny;
  raised.lemma_edge_ceiling = 20;
  EXPECT_EQ(analyze_graph("p", gen_petersen(), raised).lemmas.state, LemmaState::skipped_budget);
}

TEST(AnalyzeGraph, FailedFlagsBrokenOrdering) {
  GraphReport r;
  r.nu = 3;
  r.lambda2 = 6;
  r.alpha2 = 4;  // alpha2 > nu
  EXPECT_TRUE(r.failed());
  r.alpha2 = 2;  // 2 alpha2 < lambda2
  EXPECT_TRUE(r.failed());
  r.alpha2 = 3;
  EXPECT_FALSE(r.failed());
}

void expect_same_rows(const CensusResult& a, const CensusResult& b) {
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(graph_report_json(a.rows[i], false), graph_report_json(b.rows[i], false)) << i;
  }
  EXPECT_EQ(census_json(a, true, false), census_json(b, true, false));
}

TEST(Census, ParallelMatchesSerial) {
  for (const auto& corpus : {exhaustive_corpus(4), random_corpus(9, 0.35, 200, 17), tight_family_corpus(1, 3),
                             gap_family_corpus(2, 6)}) {
    const auto serial = run_census_serial(corpus, {});
    for (int jobs : {1, 2, 4}) expect_same_rows(serial, run_census_parallel(corpus, {}, jobs));
  }
}

TEST(Census, ExhaustiveFiveVertices) {
  const auto r = run_census_parallel(exhaustive_corpus(5), {});
  const auto& s = r.summary;
  EXPECT_EQ(s.graph_count, 1024u);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.lemmas_checked, 1024u);
  EXPECT_EQ(s.budget_exceeded, 0u);
  ASSERT_TRUE(s.max_ratio.has_value());
  EXPECT_EQ(s.max_ratio->to_string(), "1/1");
  EXPECT_EQ(s.max_ratio_graph, "n5:1");  // first graph with an edge
  EXPECT_EQ(s.gap_histogram.size(), 1u);
  EXPECT_EQ(s.gap_histogram.at(0), 1024u);
}

TEST(Census, TightFamilyReachesTheBound) {
  const auto r = run_census_serial(tight_family_corpus(1, 2), {});
  EXPECT_TRUE(r.summary.ok());
  ASSERT_TRUE(r.summary.max_ratio.has_value());
  EXPECT_EQ(r.summary.max_ratio->to_string(), "5/4");
  EXPECT_EQ(r.summary.max_ratio_graph, "tight:1");
  EXPECT_EQ(r.rows[1].nu, 10);
  EXPECT_EQ(r.rows[1].alpha2, 8);
  EXPECT_EQ(r.rows[1].lemmas.state, LemmaState::skipped_over_ceiling);  // 20 edges
}

TEST(Census, GapFamilyRows) {
  const auto r = run_census_serial(gap_family_corpus(2, 6), {});
  ASSERT_EQ(r.rows.size(), 5u);
  for (int k = 2; k <= 6; ++k) {
    const auto& row = r.rows[static_cast<std::size_t>(k - 2)];
    EXPECT_EQ(row.id, "gap:" + std::to_string(k));
    EXPECT_EQ(row.nu, k);
    EXPECT_EQ(row.lambda2, k + 1);
    EXPECT_EQ(row.alpha2, k);
  }
  EXPECT_EQ(r.summary.lemmas_checked, 5u);
  EXPECT_TRUE(r.summary.ok());
}

TEST(Census, FailuresAreCollected) {
  GraphReport bad;
  bad.id = "x";
  bad.nu = 5;
  bad.lambda2 = 6;
  bad.alpha2 = 3;
  bad.ratio_check = ratio_within_bound(5, 3);
  const auto s = summarize("manual", {bad});
  EXPECT_FALSE(s.ok());
  ASSERT_EQ(s.failures.size(), 1u);
  EXPECT_NE(s.failures[0].find("x:"), std::string::npos);
}

TEST(Census, CorpusErrorsBecomeFailures) {
  const Corpus broken{"broken", 1, [](std::size_t) -> std::pair<std::string, Graph> { throw GraphError("boom"); }};
  const auto r = run_census_parallel(broken, {}, 2);
  EXPECT_FALSE(r.summary.ok());
  EXPECT_NE(r.summary.failures[0].find("boom"), std::string::npos);
}

TEST(Report, GraphReportJsonIsStable) {
  const auto r = analyze_graph("P4", gen_path(3));
  EXPECT_EQ(graph_report_json(r, false),
            R"({"schema_version":1,"kind":"graph_report","id":"P4","n":4,"edges":3,"status":"solved","nu":2,)"
            R"("lambda2":3,"alpha2":2,"ratio":"1/1","ratio_check":true,"nodes":)" +
                std::to_string(r.nodes) +
                R"(,"lemmas":{"state":"checked","passed":18,"failed":0,"failures":[]}})");
  const auto with = nlohmann::json::parse(graph_report_json(r, true));
  EXPECT_TRUE(with.contains("timings_ms"));
  EXPECT_TRUE(with["timings_ms"].contains("pairs"));
}

TEST(Report, CensusJsonFields) {
  const auto r = run_census_serial(tight_family_corpus(1, 1), {});
  const auto j = nlohmann::json::parse(census_json(r, false, false));
  EXPECT_EQ(j["kind"], "census_summary");
  EXPECT_EQ(j["graph_count"], 1);
  EXPECT_EQ(j["max_ratio"], "5/4");
  EXPECT_EQ(j["max_ratio_graph"], "tight:1");
  EXPECT_EQ(j["max_ratio_within_bound"], true);
  EXPECT_EQ(j["gap_histogram"]["1"], 1);
  EXPECT_TRUE(j["failures"].empty());
  EXPECT_FALSE(j.contains("graphs"));
  const auto rows = nlohmann::json::parse(census_json(r, true, false));
  ASSERT_EQ(rows["graphs"].size(), 1u);
  EXPECT_EQ(rows["graphs"][0]["id"], "tight:1");
}

TEST(Report, LemmaReportJson) {
  const auto g = gen_tight_family(Graph(2, {{0, 1}}));
  std::vector<TripleLemmaReport> triples;
  for (const auto& t : maximizing_triples(g)) triples.push_back({t, verify_lemmas(g, t)});
  const auto j = nlohmann::json::parse(lemma_report_json("t", g, triples));
  EXPECT_EQ(j["kind"], "lemma_report");
  EXPECT_EQ(j["triple_count"], 4);
  EXPECT_EQ(j["all_passed"], true);
  EXPECT_EQ(j["nu"], 5);
  EXPECT_EQ(j["triples"][0]["verdicts"].size(), 18u);
  EXPECT_EQ(j["triples"][0]["y_paths"].size(), 2u);
}

TEST(Report, Csv) {
  EXPECT_EQ(census_csv_header(),
            "id,n,edges,status,nu,lambda2,alpha2,ratio,ratio_check,lemma_state,lemmas_passed,lemmas_failed");
  const auto r = analyze_graph("t", gen_tight_family(Graph(2, {{0, 1}})));
  EXPECT_EQ(census_csv_row(r), "t,10,9,solved,5,8,4,5/4,true,checked,18,0");
  AnalysisOptions tiny;
  tiny.node_budget = 3;
  EXPECT_EQ(census_csv_row(analyze_graph("p", gen_petersen(), tiny)),
            "p,10,15,budget_exceeded,5,,,,true,skipped (over ceiling),0,0");
}

}  // namespace
}  // namespace pairmatch
