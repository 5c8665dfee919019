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

#include "pairmatch/report.hpp"

#include <json.hpp>

namespace pairmatch {

using Json = nlohmann::ordered_json;

namespace {

Json edges_json(const EdgeList& edges) {
  Json out = Json::array();
  for (const auto& e : edges) out.push_back({e.u, e.v});
  return out;
}

Json graph_report(const GraphReport& r, bool with_timings) {
  Json j;
  j["id"] = r.id;
  j["n"] = r.n;
  j["edges"] = r.m;
  j["status"] = to_string(r.status);
  j["nu"] = r.nu;
  j["lambda2"] = r.lambda2 ? Json(*r.lambda2) : Json(nullptr);
  j["alpha2"] = r.alpha2 ? Json(*r.alpha2) : Json(nullptr);
  const auto q = r.ratio();
  j["ratio"] = q ? Json(q->to_string()) : Json(nullptr);
  j["ratio_check"] = r.ratio_check;
  j["nodes"] = r.nodes;
  Json lemmas;
  lemmas["state"] = to_string(r.lemmas.state);
  lemmas["passed"] = r.lemmas.passed;
  lemmas["failed"] = r.lemmas.failed;
  lemmas["failures"] = r.lemmas.failures;
  j["lemmas"] = lemmas;
  if (with_timings) {
    j["timings_ms"] = {{"matching", r.timings.matching_ms},
                       {"pairs", r.timings.pairs_ms},
                       {"lemmas", r.timings.lemmas_ms}};
  }
  return j;
}

Json component_json(const AlternatingComponent& c) {
  return {{"kind", to_string(c.kind)}, {"length", c.length()}, {"vertices", c.vertices}};
}

}  // namespace

std::string graph_report_json(const GraphReport& r, bool with_timings) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "graph_report";
  const Json body = graph_report(r, with_timings);
  for (const auto& [key, value] : body.items()) j[key] = value;
  return j.dump();
}

std::string census_json(const CensusResult& result, bool with_rows, bool with_timings) {
  const auto& s = result.summary;
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "census_summary";
  j["corpus"] = s.corpus;
  j["graph_count"] = s.graph_count;
  j["max_ratio"] = s.max_ratio ? Json(s.max_ratio->to_string()) : Json(nullptr);
  j["max_ratio_graph"] = s.max_ratio ? Json(s.max_ratio_graph) : Json(nullptr);
  j["max_ratio_within_bound"] = !s.max_ratio || !(Ratio{5, 4} < *s.max_ratio);
  Json hist = Json::object();
  for (const auto& [gap, count] : s.gap_histogram) hist[std::to_string(gap)] = count;
  j["gap_histogram"] = hist;
  j["budget_exceeded"] = s.budget_exceeded;
  j["lemmas_checked"] = s.lemmas_checked;
  j["lemmas_skipped"] = s.lemmas_skipped;
  j["failures"] = s.failures;
  if (with_rows) {
    Json rows = Json::array();
    for (const auto& r : result.rows) rows.push_back(graph_report(r, with_timings));
    j["graphs"] = rows;
  }
  return j.dump();
}

std::string lemma_report_json(const std::string& id, const Graph& g, const std::vector<TripleLemmaReport>& triples) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "lemma_report";
  j["id"] = id;
  j["n"] = g.vertex_count();
  j["edges"] = g.edge_count();
  if (!triples.empty()) {
    const auto& inv = triples.front().report.invariants;
    j["nu"] = inv.nu;
    j["lambda2"] = inv.lambda2;
    j["alpha2"] = inv.alpha2;
  }
  j["triple_count"] = triples.size();
  bool all = true;
  Json list = Json::array();
  for (const auto& [t, rep] : triples) {
    all = all && rep.all_passed();
    Json item;
    item["h"] = edges_json(t.h.edges());
    item["h_prime"] = edges_json(t.h_prime.edges());
    item["m"] = edges_json(t.m.edges());
    item["m_a"] = edges_json(rep.artifacts.m_a);
    item["h_a"] = edges_json(rep.artifacts.h_a);
    item["h_y"] = edges_json(rep.artifacts.h_y);
    Json ys = Json::array();
    for (const auto& y : rep.artifacts.y_paths) ys.push_back(component_json(y));
    item["y_paths"] = ys;
    Json verdicts = Json::array();
    for (const auto& v : rep.verdicts) {
      Json vj{{"statement", v.statement}, {"outcome", to_string(v.outcome)}};
      if (!v.detail.empty()) vj["detail"] = v.detail;
      verdicts.push_back(vj);
    }
    item["verdicts"] = verdicts;
    item["all_passed"] = rep.all_passed();
    list.push_back(item);
  }
  j["all_passed"] = all;
  j["triples"] = list;
  return j.dump();
}

std::string census_csv_header() {
  return "id,n,edges,status,nu,lambda2,alpha2,ratio,ratio_check,lemma_state,lemmas_passed,lemmas_failed";
}

std::string census_csv_row(const GraphReport& r) {
  const auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  const auto q = r.ratio();
  return r.id + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," + to_string(r.status) + "," +
         std::to_string(r.nu) + "," + opt(r.lambda2) + "," + opt(r.alpha2) + "," + (q ? q->to_string() : "") + "," +
         (r.ratio_check ? "true" : "false") + "," + to_string(r.lemmas.state) + "," + std::to_string(r.lemmas.passed) +
         "," + std::to_string(r.lemmas.failed);
}

}  // namespace pairmatch
