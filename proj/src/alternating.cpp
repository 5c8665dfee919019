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

#include "pairmatch/alternating.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace pairmatch {

const char* to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::cycle: return "cycle";
    case ComponentKind::even_path: return "even_path";
    case ComponentKind::odd_path: return "odd_path";
  }
  return "unknown";
}

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::precondition_violated: return "precondition_violated";
  }
  return "unknown";
}

std::size_t AlternatingComponent::count(Side s) const {
  return static_cast<std::size_t>(std::count(sides.begin(), sides.end(), s));
}

EdgeList AlternatingComponent::edge_set() const {
  EdgeList out = edges;
  std::sort(out.begin(), out.end());
  return out;
}

AlternatingComponent AlternatingComponent::reversed() const {
  AlternatingComponent r = *this;
  std::reverse(r.edges.begin(), r.edges.end());
  std::reverse(r.sides.begin(), r.sides.end());
  if (is_path()) {
    std::reverse(r.vertices.begin(), r.vertices.end());
  } else if (!r.vertices.empty()) {
    std::reverse(r.vertices.begin() + 1, r.vertices.end());
  }
  return r;
}

std::vector<AlternatingComponent> Decomposition::paths() const {
  std::vector<AlternatingComponent> out;
  for (const auto* family : {&even_paths, &odd_paths_a, &odd_paths_b}) {
    out.insert(out.end(), family->begin(), family->end());
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return *std::min_element(x.vertices.begin(), x.vertices.end()) <
           *std::min_element(y.vertices.begin(), y.vertices.end());
  });
  return out;
}

std::vector<AlternatingComponent> Decomposition::components() const {
  auto out = paths();
  out.insert(out.end(), cycles.begin(), cycles.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return *std::min_element(x.vertices.begin(), x.vertices.end()) <
           *std::min_element(y.vertices.begin(), y.vertices.end());
  });
  return out;
}

std::size_t Decomposition::component_edge_count() const {
  std::size_t total = 0;
  for (const auto* family : {&cycles, &even_paths, &odd_paths_a, &odd_paths_b}) {
    for (const auto& c : *family) total += c.length();
  }
  return total;
}

namespace {

constexpr Vertex kNone = -1;

void require_host(const Graph& g, const Matching& m, const char* name) {
  if (auto check = is_matching(g, m.edges()); !check) {
    throw GraphError(std::string(name) + " is not a matching of the graph: " + to_string(check.fault));
  }
}

Verdict make_verdict(std::string statement, const std::vector<std::string>& problems) {
  Verdict v{std::move(statement), Outcome::pass, {}};
  if (!problems.empty()) {
    v.outcome = Outcome::fail;
    for (std::size_t i = 0; i < problems.size(); ++i) v.detail += (i ? "; " : "") + problems[i];
  }
  return v;
}

std::string describe(const AlternatingComponent& c) {
  std::ostringstream out;
  out << to_string(c.kind) << " ";
  for (std::size_t i = 0; i < c.vertices.size(); ++i) out << (i ? "-" : "") << c.vertices[i];
  return out.str();
}

}  // namespace

Decomposition decompose(const Graph& g, const Matching& a, const Matching& b) {
  require_host(g, a, "A");
  require_host(g, b, "B");
  Decomposition d;
  d.shared = edge_intersection(a.edges(), b.edges());

  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<Vertex> partner_a(n, kNone);
  std::vector<Vertex> partner_b(n, kNone);
  for (const auto& e : edge_difference(a.edges(), b.edges())) {
    partner_a[static_cast<std::size_t>(e.u)] = e.v;
    partner_a[static_cast<std::size_t>(e.v)] = e.u;
  }
  for (const auto& e : edge_difference(b.edges(), a.edges())) {
    partner_b[static_cast<std::size_t>(e.u)] = e.v;
    partner_b[static_cast<std::size_t>(e.v)] = e.u;
  }
  auto degree = [&](Vertex v) {
    return (partner_a[static_cast<std::size_t>(v)] != kNone) + (partner_b[static_cast<std::size_t>(v)] != kNone);
  };
  auto partner = [&](Vertex v, Side s) {
    return s == Side::a ? partner_a[static_cast<std::size_t>(v)] : partner_b[static_cast<std::size_t>(v)];
  };
  auto flip = [](Side s) { return s == Side::a ? Side::b : Side::a; };

  std::vector<char> seen(n, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (seen[static_cast<std::size_t>(v)] || degree(v) == 0) continue;

    // Collect the component; max degree 2 means a path or a cycle.
    std::vector<Vertex> members{v};
    seen[static_cast<std::size_t>(v)] = 1;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (Side s : {Side::a, Side::b}) {
        const Vertex w = partner(members[k], s);
        if (w != kNone && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          members.push_back(w);
        }
      }
    }
    std::vector<Vertex> ends;
    for (Vertex w : members) {
      if (degree(w) == 1) ends.push_back(w);
    }

    AlternatingComponent c;
    Vertex start = kNone;
    Side side = Side::a;
    if (ends.empty()) {
      c.kind = ComponentKind::cycle;
      start = *std::min_element(members.begin(), members.end());
      side = partner(start, Side::a) < partner(start, Side::b) ? Side::a : Side::b;
    } else {
      start = std::min(ends[0], ends[1]);
      side = partner(start, Side::a) != kNone ? Side::a : Side::b;
    }

    Vertex cur = start;
    c.vertices.push_back(cur);
    for (;;) {
      const Vertex next = partner(cur, side);
      if (next == kNone) break;
      c.edges.push_back(make_edge(cur, next));
      c.sides.push_back(side);
      if (next == start) break;  // cycle closed
      c.vertices.push_back(next);
      cur = next;
      side = flip(side);
    }

    if (c.kind == ComponentKind::cycle) {
      d.cycles.push_back(std::move(c));
    } else if (c.length() % 2 == 0) {
      c.kind = ComponentKind::even_path;
      d.even_paths.push_back(std::move(c));
    } else {
      c.kind = ComponentKind::odd_path;
      (c.start_side() == Side::a ? d.odd_paths_a : d.odd_paths_b).push_back(std::move(c));
    }
  }
  return d;
}

Verdict check_decomposition(const Graph& g, const Matching& a, const Matching& b, const Decomposition& d) {
  std::vector<std::string> problems;
  const auto a_only = edge_difference(a.edges(), b.edges());
  const auto b_only = edge_difference(b.edges(), a.edges());

  if (d.shared != edge_intersection(a.edges(), b.edges())) problems.push_back("shared edges differ from A n B");

  std::vector<Edge> covered(d.shared.begin(), d.shared.end());
  for (const auto& c : d.components()) {
    const bool cycle = c.kind == ComponentKind::cycle;
    if (c.edges.empty() || c.edges.size() != c.sides.size() ||
        c.vertices.size() != c.edges.size() + (cycle ? 0 : 1)) {
      problems.push_back("malformed " + describe(c));
      continue;
    }
    for (std::size_t i = 0; i < c.length(); ++i) {
      covered.push_back(c.edges[i]);
      const Vertex x = c.vertices[i];
      const Vertex y = cycle && i + 1 == c.length() ? c.vertices.front() : c.vertices[i + 1];
      if (c.edges[i] != make_edge(x, y) || !g.has_edge(x, y)) problems.push_back("broken walk in " + describe(c));
      const auto& pool = c.sides[i] == Side::a ? a_only : b_only;
      if (!edge_set_contains(pool, c.edges[i])) {
        problems.push_back(to_string(c.edges[i]) + " has the wrong side in " + describe(c));
      }
      if (i > 0 && c.sides[i] == c.sides[i - 1]) problems.push_back("sides repeat in " + describe(c));
    }
    if (cycle && (c.length() % 2 != 0 || c.length() < 4)) problems.push_back("bad cycle length in " + describe(c));
    if (!cycle) {
      const bool parity_ok = (c.length() % 2 == 0) == (c.kind == ComponentKind::even_path);
      if (!parity_ok) problems.push_back("kind/parity mismatch in " + describe(c));
      // maximality: no further A xor B edge at either end
      for (auto [end, own] : {std::pair{c.vertices.front(), c.edges.front()},
                              std::pair{c.vertices.back(), c.edges.back()}}) {
        for (const auto* pool : {&a_only, &b_only}) {
          for (const auto& e : *pool) {
            if (e.touches(end) && e != own) {
              problems.push_back(describe(c) + " extends by " + to_string(e));
            }
          }
        }
      }
    }
  }
  std::sort(covered.begin(), covered.end());
  if (std::adjacent_find(covered.begin(), covered.end()) != covered.end()) {
    problems.push_back("an edge appears in two places");
  }
  if (covered != edge_union(a.edges(), b.edges())) problems.push_back("edges of A u B not partitioned");
  for (const auto* family : {&d.odd_paths_a, &d.odd_paths_b}) {
    const Side want = family == &d.odd_paths_a ? Side::a : Side::b;
    for (const auto& c : *family) {
      if (c.length() % 2 == 0 || c.start_side() != want) problems.push_back("misfiled " + describe(c));
    }
  }
  return make_verdict("decomposition", problems);
}

Verdict check_property_1(const Decomposition& d) {
  std::vector<std::string> problems;
  for (const auto* family : {&d.cycles, &d.even_paths}) {
    for (const auto& c : *family) {
      if (c.count(Side::a) != c.count(Side::b)) problems.push_back("unbalanced " + describe(c));
    }
  }
  for (const auto* family : {&d.odd_paths_a, &d.odd_paths_b}) {
    for (const auto& c : *family) {
      const Side own = c.start_side();
      const Side other = own == Side::a ? Side::b : Side::a;
      if (c.count(own) != c.count(other) + 1) problems.push_back("odd path off by more than one: " + describe(c));
    }
  }
  return make_verdict("property_1", problems);
}

Verdict check_property_2(const Matching& a, const Matching& b, const Decomposition& d) {
  const auto lhs = static_cast<long>(a.size()) - static_cast<long>(b.size());
  const auto rhs = static_cast<long>(d.odd_paths_a.size()) - static_cast<long>(d.odd_paths_b.size());
  if (lhs == rhs) return {"property_2", Outcome::pass, {}};
  return {"property_2", Outcome::fail,
          "|A|-|B| = " + std::to_string(lhs) + " but |P_o^A|-|P_o^B| = " + std::to_string(rhs)};
}

Verdict check_property_3(const Graph& g, const Matching& m, const Matching& h) {
  const auto nu = max_matching(g).size();
  if (m.size() != nu) {
    return {"property_3", Outcome::precondition_violated,
            "M has " + std::to_string(m.size()) + " edges but nu = " + std::to_string(nu)};
  }
  const auto d = decompose(g, m, h);
  std::vector<std::string> problems;
  for (const auto& c : d.odd_paths_b) problems.push_back("H-started odd path " + describe(c));
  if (m.size() - h.size() != d.odd_paths_a.size()) {
    problems.push_back("|M|-|H| = " + std::to_string(m.size() - h.size()) +
                       " but |P_o^M| = " + std::to_string(d.odd_paths_a.size()));
  }
  return make_verdict("property_3", problems);
}

Verdict check_property_4(const Graph& g, const Matching& h, const Matching& h_prime) {
  const auto d = decompose(g, h, h_prime);
  std::vector<std::string> problems;
  for (const auto& c : d.odd_paths_b) problems.push_back("H'-started odd path " + describe(c));
  return make_verdict("property_4", problems);
}

TripleArtifacts derive_artifacts(const Graph& g, const CanonicalTriple& t) {
  TripleArtifacts art;
  art.m_h = decompose(g, t.m, t.h);
  art.h_hp = decompose(g, t.h, t.h_prime);

  for (const auto& p : art.m_h.odd_paths_a) {
    for (std::size_t i = 0; i < p.length(); ++i) {
      (p.sides[i] == Side::a ? art.m_a : art.h_a).push_back(p.edges[i]);
    }
  }
  std::sort(art.m_a.begin(), art.m_a.end());
  std::sort(art.h_a.begin(), art.h_a.end());

  const auto hh_components = art.h_hp.components();
  std::vector<std::string> problems;
  for (const auto& p : art.m_h.odd_paths_a) {
    std::vector<std::pair<Edge, Vertex>> ends{{p.edges.front(), p.vertices.front()}};
    if (p.length() > 1) ends.emplace_back(p.edges.back(), p.vertices.back());
    for (const auto& [edge, end] : ends) {
      if (!t.h_prime.contains(edge)) {
        problems.push_back("end-edge " + to_string(edge) + " of " + describe(p) + " is not in H'");
        continue;
      }
      auto owner = std::find_if(hh_components.begin(), hh_components.end(), [&](const auto& c) {
        return std::find(c.edges.begin(), c.edges.end(), edge) != c.edges.end();
      });
      if (owner == hh_components.end() || !owner->is_path()) {
        problems.push_back("end-edge " + to_string(edge) + " does not lie on an (H,H') path");
        continue;
      }
      if (owner->vertices.front() == end && owner->edges.front() == edge) {
        art.y_paths.push_back(*owner);
      } else if (owner->vertices.back() == end && owner->edges.back() == edge) {
        art.y_paths.push_back(owner->reversed());
      } else {
        problems.push_back("end-edge " + to_string(edge) + " is not an end of " + describe(*owner));
      }
    }
  }
  for (const auto& y : art.y_paths) art.h_y.push_back(y.edges.back());
  std::sort(art.h_y.begin(), art.h_y.end());
  art.h_y.erase(std::unique(art.h_y.begin(), art.h_y.end()), art.h_y.end());
  art.lemma_verdicts.push_back(make_verdict("y_construction", problems));
  return art;
}

bool LemmaReport::all_passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed(); });
}

std::size_t LemmaReport::passed_count() const {
  return static_cast<std::size_t>(std::count_if(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed(); }));
}

std::size_t LemmaReport::failed_count() const { return verdicts.size() - passed_count(); }

LemmaReport verify_lemmas(const Graph& g, const CanonicalTriple& t, const GraphInvariants& known) {
  LemmaReport report;
  report.invariants = known;
  auto& out = report.verdicts;
  const long nu = known.nu;
  const long alpha2 = known.alpha2;
  const long gap = nu - alpha2;
  const auto& M = t.m;
  const auto& H = t.h;
  const auto& Hp = t.h_prime;
  auto sz = [](const auto& set) { return static_cast<long>(set.size()); };

  {
    std::vector<std::string> problems;
    if (!edge_intersection(H.edges(), Hp.edges()).empty()) problems.push_back("H and H' share an edge");
    if (sz(M) != nu) problems.push_back("|M| = " + std::to_string(M.size()) + " but nu = " + std::to_string(nu));
    if (sz(H) + sz(Hp) != known.lambda2) problems.push_back("|H|+|H'| differs from lambda2");
    if (sz(H) != alpha2) problems.push_back("|H| differs from alpha2");
    out.push_back(make_verdict("triple", problems));
    if (!out.back().passed()) {
      out.back().outcome = Outcome::precondition_violated;
      return report;
    }
  }

  report.artifacts = derive_artifacts(g, t);
  const auto& art = report.artifacts;
  const Matching m_a(g, art.m_a);
  const auto d_mh = art.m_h;
  const auto d_hh = art.h_hp;
  const auto d_ah = decompose(g, m_a, Hp);

  {
    std::vector<std::string> problems;
    for (const auto& [name, d] : {std::pair{"(M,H)", &d_mh}, std::pair{"(H,H')", &d_hh}, std::pair{"(M_A,H')", &d_ah}}) {
      if (auto v = check_property_1(*d); !v.passed()) problems.push_back(std::string(name) + ": " + v.detail);
    }
    out.push_back(make_verdict("property_1", problems));
  }
  {
    std::vector<std::string> problems;
    for (const auto& [name, a, b, d] : {std::tuple{"(M,H)", &M, &H, &d_mh}, std::tuple{"(H,H')", &H, &Hp, &d_hh},
                                        std::tuple{"(M_A,H')", &m_a, &Hp, &d_ah}}) {
      if (auto v = check_property_2(*a, *b, *d); !v.passed()) problems.push_back(std::string(name) + ": " + v.detail);
    }
    out.push_back(make_verdict("property_2", problems));
  }
  out.push_back(check_property_3(g, M, H));
  out.push_back(check_property_4(g, H, Hp));

  {
    std::vector<std::string> problems;
    for (const auto& c : d_mh.cycles) problems.push_back("cycle " + describe(c));
    for (const auto& c : d_mh.even_paths) problems.push_back("even path " + describe(c));
    for (const auto& c : d_mh.odd_paths_b) problems.push_back("H-started " + describe(c));
    out.push_back(make_verdict("lemma_1", problems));
  }
  {
    const auto common = edge_intersection(M.edges(), H.edges());
    std::vector<std::string> problems;
    if (common != edge_difference(M.edges(), art.m_a)) problems.push_back("M n H != M \\ M_A");
    if (common != edge_difference(H.edges(), art.h_a)) problems.push_back("M n H != H \\ H_A");
    out.push_back(make_verdict("corollary_1", problems));
  }
  {
    std::vector<std::string> problems;
    for (const auto& e : edge_difference(art.m_a, Hp.edges())) {
      const auto touching = std::count_if(Hp.edges().begin(), Hp.edges().end(),
                                          [&](const Edge& f) { return e.adjacent_to(f); });
      if (touching != 2) {
        problems.push_back(to_string(e) + " meets " + std::to_string(touching) + " edges of H'");
      }
    }
    out.push_back(make_verdict("lemma_2", problems));
  }
  {
    std::vector<std::string> problems;
    for (const auto& c : d_ah.cycles) problems.push_back("cycle " + describe(c));
    for (const auto& c : d_ah.even_paths) problems.push_back("even path " + describe(c));
    for (const auto& c : d_ah.odd_paths_a) problems.push_back("M_A-started " + describe(c));
    out.push_back(make_verdict("lemma_3", problems));
  }
  const long odd_hp = sz(d_ah.odd_paths_b);
  {
    const long rhs = odd_hp + sz(art.h_a) + gap;
    std::vector<std::string> problems;
    if (sz(Hp) != rhs) {
      problems.push_back("|H'| = " + std::to_string(Hp.size()) + " but |P_o^{H'}(M_A,H')|+|H_A|+nu-alpha2 = " +
                         std::to_string(rhs));
    }
    out.push_back(make_verdict("lemma_4", problems));
  }
  {
    std::vector<std::string> problems;
    for (const auto& p : d_mh.odd_paths_a) {
      if (p.count(Side::a) < 3) problems.push_back(describe(p) + " has fewer than 3 M-edges");
      if (!Hp.contains(p.edges.front()) || !Hp.contains(p.edges.back())) {
        problems.push_back(describe(p) + " has an end-edge outside H'");
      }
    }
    out.push_back(make_verdict("lemma_5", problems));
  }
  {
    std::vector<std::string> problems;
    if (sz(art.h_a) < 2 * gap) problems.push_back("|H_A| = " + std::to_string(art.h_a.size()) + " < 2(nu-alpha2)");
    out.push_back(make_verdict("corollary_2", problems));
  }
  {
    std::set<Vertex> covered_by_hp;
    for (const auto& e : Hp.edges()) covered_by_hp.insert({e.u, e.v});
    std::vector<std::string> problems;
    for (const auto& p : d_mh.paths()) {
      for (Vertex w : p.vertices) {
        if (!covered_by_hp.count(w)) problems.push_back("vertex " + std::to_string(w) + " of " + describe(p));
      }
    }
    out.push_back(make_verdict("corollary_3", problems));
  }
  {
    std::vector<std::string> problems;
    for (const auto& v : art.lemma_verdicts) {
      if (!v.passed()) problems.push_back(v.detail);
    }
    std::set<EdgeList> distinct;
    for (const auto& y : art.y_paths) {
      distinct.insert(y.edge_set());
      if (y.length() % 2 != 0) problems.push_back("Y-path " + describe(y) + " has odd length");
      if (y.start_side() != Side::b) problems.push_back("Y-path " + describe(y) + " does not start in H'");
    }
    if (distinct.size() != art.y_paths.size()) problems.push_back("two end-edges launch the same Y-path");
    const auto common = edge_intersection(M.edges(), H.edges());
    for (const auto& e : art.h_y) {
      if (!edge_set_contains(common, e)) problems.push_back("H_Y edge " + to_string(e) + " not in M n H");
    }
    out.push_back(make_verdict("y_structure", problems));
  }
  {
    std::vector<std::string> problems;
    if (sz(art.y_paths) != 2 * gap) {
      problems.push_back("|Y| = " + std::to_string(art.y_paths.size()) + " but 2(nu-alpha2) = " + std::to_string(2 * gap));
    }
    for (const auto& y : art.y_paths) {
      if (y.length() < 4) problems.push_back("Y-path " + describe(y) + " shorter than 4");
    }
    out.push_back(make_verdict("lemma_6a", problems));
  }
  {
    std::vector<std::string> problems;
    if (odd_hp < gap) problems.push_back("|P_o^{H'}(M_A,H')| = " + std::to_string(odd_hp) + " < nu-alpha2");
    out.push_back(make_verdict("lemma_6b", problems));
  }
  {
    std::vector<std::string> problems;
    const long y = sz(art.y_paths);
    if (alpha2 < sz(Hp)) problems.push_back("alpha2 < |H'|");
    if (sz(Hp) < 2 * y) problems.push_back("|H'| < 2|Y|");
    if (2 * y != 4 * gap) problems.push_back("2|Y| != 4(nu-alpha2)");
    out.push_back(make_verdict("remark_1", problems));
  }
  {
    std::vector<std::string> problems;
    if (4 * nu > 5 * alpha2) problems.push_back("4 nu = " + std::to_string(4 * nu) + " > 5 alpha2 = " + std::to_string(5 * alpha2));
    out.push_back(make_verdict("theorem", problems));
  }
  return report;
}

LemmaReport verify_lemmas(const Graph& g, const CanonicalTriple& t) {
  const auto solved = solve_pair(g);
  if (!solved.solved()) throw BudgetExceeded("node budget exhausted while computing lambda2/alpha2");
  const GraphInvariants known{static_cast<int>(max_matching(g).size()), solved.result->lambda2,
                              solved.result->alpha2};
  return verify_lemmas(g, t, known);
}

}  // namespace pairmatch
