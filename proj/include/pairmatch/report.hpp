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

#include <string>
#include <vector>

#include "pairmatch/alternating.hpp"
#include "pairmatch/census.hpp"

namespace pairmatch {

/// Bumped whenever a field is renamed or removed. See docs/report-schema.md.
inline constexpr int kReportSchemaVersion = 1;

/// Each function returns one compact, single-line JSON document. Key order is
/// fixed, so equal inputs serialize byte-identically.
std::string graph_report_json(const GraphReport& r, bool with_timings);
std::string census_json(const CensusResult& result, bool with_rows, bool with_timings);

struct TripleLemmaReport {
  CanonicalTriple triple;
  LemmaReport report;
};

std::string lemma_report_json(const std::string& id, const Graph& g, const std::vector<TripleLemmaReport>& triples);

std::string census_csv_header();
std::string census_csv_row(const GraphReport& r);

}  // namespace pairmatch
