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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pairmatch/alternating.hpp"
#include "pairmatch/census.hpp"
#include "pairmatch/disjoint_pairs.hpp"
#include "pairmatch/generators.hpp"
#include "pairmatch/graph_io.hpp"
#include "pairmatch/matching.hpp"

using namespace pairmatch;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  std::vector<std::string> problems;

  void fail(std::string what) {
    ok = false;
    if (problems.size() < 5) problems.push_back(std::move(what));
  }
};

struct Named {
  std::string id;
  Graph g;
};

std::vector<Named> exhaustive_upto(int n_max) {
  std::vector<Named> out;
  for (int n = 0; n <= n_max; ++n) {
    const LabeledGraphs all(n);
    for (std::uint64_t i = 0; i < all.size(); ++i) out.push_back({"n" + std::to_string(n) + ":" + std::to_string(i), all.at(i)});
  }
  return out;
}

// 1,000 random graphs: n cycles through 2..10, p through {0.2, 0.4, 0.6},
// seed = index.
std::vector<Named> random_thousand() {
  static const double ps[] = {0.2, 0.4, 0.6};
  std::vector<Named> out;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const int n = 2 + static_cast<int>(i % 9);
    const double p = ps[i % 3];
    out.push_back({"random:" + std::to_string(i), gen_random(n, p, i)});
  }
  return out;
}

std::vector<Named> oracle_corpus() {
  auto out = exhaustive_upto(5);
  out.push_back({"petersen", gen_petersen()});
  for (int k = 3; k <= 11; k += 2) out.push_back({"C" + std::to_string(k), gen_cycle(k)});
  for (auto& x : random_thousand()) out.push_back(std::move(x));
  return out;
}

std::string label(const Named& x) { return x.id + " (" + encode_graph6(x.g) + ")"; }

Check theorem_bound() {
  Check o;
  std::size_t graphs = 0;
  std::size_t six = 0;
  for (int n = 0; n <= 6; ++n) {
    const auto r = run_census_parallel(exhaustive_corpus(n), {});
    graphs += r.summary.graph_count;
    if (n == 6) six = r.summary.graph_count;
    for (const auto& row : r.rows) {
      if (row.status != SolveStatus::solved) o.fail(row.id + ": budget exceeded");
      else if (!ratio_within_bound(row.nu, *row.alpha2)) o.fail(row.id + ": 4*nu > 5*alpha2");
    }
    for (const auto& f : r.summary.failures) o.fail(f);
  }
  o.detail = std::to_string(six) + " graphs on 6 vertices, " + std::to_string(graphs) + " on 0..6";
  return o;
}

Check tightness() {
  Check o;
  const std::vector<std::pair<std::string, Graph>> bases{
      {"K2", Graph(2, {{0, 1}})}, {"C4", gen_cycle(4)}, {"K4", gen_complete(4)}};
  for (const auto& [name, base] : bases) {
    const auto g = gen_tight_family(base);
    const auto r = analyze_graph(name, g, {kDefaultNodeBudget, 0, false});
    const int v = base.vertex_count();
    if (r.nu * 2 != 5 * v) o.fail(name + ": nu = " + std::to_string(r.nu));
    if (r.lambda2 != 4 * v) o.fail(name + ": lambda2 mismatch");
    if (r.alpha2 != 2 * v) o.fail(name + ": alpha2 mismatch");
    if (!r.ratio() || !(*r.ratio() == Ratio{5, 4})) o.fail(name + ": ratio is not 5/4");
    o.detail += name + " nu=" + std::to_string(r.nu) + " lambda2=" + (r.lambda2 ? std::to_string(*r.lambda2) : "?") +
                " alpha2=" + (r.alpha2 ? std::to_string(*r.alpha2) : "?") + "; ";
  }
  o.detail.resize(o.detail.size() - 2);
  return o;
}

Check gap_family() {
  Check o;
  for (int k = 2; k <= 6; ++k) {
    const auto r = analyze_graph("gap:" + std::to_string(k), gen_gap_family(k), {kDefaultNodeBudget, 0, false});
    if (r.nu != k || r.lambda2 != k + 1 || r.alpha2 != k) o.fail("k=" + std::to_string(k));
    else if (r.nu / (*r.lambda2 - *r.alpha2) != k || r.nu % (*r.lambda2 - *r.alpha2) != 0) o.fail("ratio k=" + std::to_string(k));
  }
  o.detail = "k = 2..6";
  return o;
}

Check matching_oracle(const std::vector<Named>& corpus) {
  Check o;
  std::size_t checked = 0;
  for (const auto& x : corpus) {
    if (x.g.edge_count() > kMatchingOracleEdgeCeiling) continue;
    ++checked;
    if (max_matching(x.g).size() != max_matching_bruteforce(x.g).size()) o.fail(label(x));
  }
  o.detail = std::to_string(checked) + " graphs with <= 24 edges";
  return o;
}

Check pair_oracle(const std::vector<Named>& corpus) {
  Check o;
  std::size_t checked = 0;
  for (const auto& x : corpus) {
    if (x.g.edge_count() > kPairOracleEdgeCeiling) continue;
    ++checked;
    const auto s = solve_pair(x.g);
    const auto b = solve_pair_bruteforce(x.g);
    if (!s.solved()) o.fail(label(x) + ": budget exceeded");
    else if (s.result->lambda2 != b.lambda2 || s.result->alpha2 != b.alpha2) o.fail(label(x));
  }
  o.detail = std::to_string(checked) + " graphs with <= 14 edges";
  return o;
}

// 500 random graphs within the lemma ceiling: n cycles through 4..12,
// p through {0.2, 0.3, 0.4}, seeds from 10,000 upward, graphs above 14 edges
// skipped.
std::vector<Named> random_within_ceiling() {
  static const double ps[] = {0.2, 0.3, 0.4};
  std::vector<Named> out;
  for (std::uint64_t i = 0; out.size() < 500; ++i) {
    auto g = gen_random(4 + static_cast<int>(i % 9), ps[i % 3], 10'000 + i);
    if (g.edge_count() <= kPairOracleEdgeCeiling) out.push_back({"random:" + std::to_string(10'000 + i), std::move(g)});
  }
  return out;
}

// tight(K2) plus 1..5 extra random edges on its ten vertices. Unlike G(n,p)
// graphs of this size, a fair share of these has nu > alpha2, so the derived
// sets M_A, H_A and Y are non-empty.
std::vector<Named> perturbed_tight() {
  const auto base = gen_tight_family(Graph(2, {{0, 1}}));
  std::vector<Named> out;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges(base.edges().begin(), base.edges().end());
    const std::size_t want = base.edge_count() + 1 + rng() % 5;
    while (edges.size() < want) {
      const auto a = static_cast<Vertex>(rng() % 10);
      const auto b = static_cast<Vertex>(rng() % 10);
      const auto e = make_edge(a, b);
      if (a != b && std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    }
    out.push_back({"tight+" + std::to_string(seed), Graph(10, edges)});
  }
  return out;
}

void check_report(Check& o, const Named& x, const LemmaReport& r) {
  if (r.all_passed()) return;
  for (const auto& v : r.verdicts) {
    if (!v.passed()) o.fail(label(x) + " " + v.statement + ": " + v.detail);
  }
}

Check lemma_suite() {
  Check o;
  auto corpus = exhaustive_upto(5);
  for (auto& x : random_within_ceiling()) corpus.push_back(std::move(x));
  corpus.push_back({"tight:K2", gen_tight_family(Graph(2, {{0, 1}}))});
  for (int k = 2; k <= 6; ++k) corpus.push_back({"gap:" + std::to_string(k), gen_gap_family(k)});
  for (auto& x : perturbed_tight()) corpus.push_back(std::move(x));

  std::size_t canonical = 0;
  std::size_t all_triples = 0;
  std::size_t with_gap = 0;
  for (const auto& x : corpus) {
    const auto t = canonical_triple(x.g);
    const auto r = verify_lemmas(x.g, t);
    ++canonical;
    with_gap += r.invariants.nu > r.invariants.alpha2;
    check_report(o, x, r);
    if (x.g.edge_count() <= 10) {
      for (const auto& u : maximizing_triples(x.g)) {
        ++all_triples;
        check_report(o, x, verify_lemmas(x.g, u, r.invariants));
      }
    }
  }
  // Larger members of the tight family, above the default ceiling.
  for (const auto& [name, base] : {std::pair{"tight:C4", gen_cycle(4)}, std::pair{"tight:K4", gen_complete(4)}}) {
    const Named x{name, gen_tight_family(base)};
    const auto r = verify_lemmas(x.g, canonical_triple(x.g, {32, kDefaultNodeBudget}));
    ++canonical;
    with_gap += r.invariants.nu > r.invariants.alpha2;
    check_report(o, x, r);
  }
  o.detail = std::to_string(canonical) + " canonical triples (" + std::to_string(with_gap) + " with nu > alpha2), " +
             std::to_string(all_triples) + " maximizing triples on graphs <= 10 edges";
  return o;
}

Check berge(const std::vector<Named>& corpus) {
  Check o;
  std::size_t checked = 0;
  auto check = [&](const Named& x) {
    ++checked;
    if (find_augmenting_path(x.g, max_matching(x.g))) o.fail(label(x));
  };
  for (const auto& x : corpus) check(x);
  const LabeledGraphs six(6);
  for (std::uint64_t i = 0; i < six.size(); ++i) check({"n6:" + std::to_string(i), six.at(i)});
  for (const auto& x : random_within_ceiling()) check(x);
  for (const auto& base : {Graph(2, {{0, 1}}), gen_cycle(4), gen_complete(4), gen_petersen()}) {
    check({"tight", gen_tight_family(base)});
  }
  for (int k = 2; k <= 6; ++k) check({"gap:" + std::to_string(k), gen_gap_family(k)});
  o.detail = std::to_string(checked) + " graphs";
  return o;
}

// n cycles through 0..100 (so both header forms occur), p through
// 0.1..0.9, seed = 50,000 + index.
Check graph6_round_trip() {
  Check o;
  for (std::uint64_t i = 0; i < 10'000; ++i) {
    const int n = static_cast<int>(i % 101);
    const double p = 0.1 * static_cast<double>(1 + i % 9);
    const auto g = gen_random(n, p, 50'000 + i);
    const auto s = encode_graph6(g);
    if (!(parse_graph6(s) == g)) o.fail("decode(encode(g)) differs for seed " + std::to_string(50'000 + i));
    if (encode_graph6(parse_graph6(s)) != s) o.fail("encode(decode(s)) differs for " + s);
  }
  o.detail = "10000 random graphs, n = 0..100";
  return o;
}

}  // namespace

int main() {
  const auto corpus = oracle_corpus();
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"theorem bound 4*nu <= 5*alpha2, exhaustive n <= 6", theorem_bound},
      {"tight family over K2, C4, K4 attains 5/4", tightness},
      {"gap family nu = k, lambda2 = k+1, alpha2 = k", gap_family},
      {"max_matching agrees with brute force", [&] { return matching_oracle(corpus); }},
      {"solve_pair agrees with brute force", [&] { return pair_oracle(corpus); }},
      {"lemma suite on canonical and maximizing triples", lemma_suite},
      {"no augmenting path for max_matching", [&] { return berge(corpus); }},
      {"graph6 round trip", graph6_round_trip},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s [%s] (%.2f s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    for (const auto& p : o.problems) std::printf("    %s\n", p.c_str());
    failed += !o.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
