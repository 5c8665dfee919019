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
#include <string>
#include <vector>

#include "pairmatch/disjoint_pairs.hpp"
#include "pairmatch/graph.hpp"
#include "pairmatch/matching.hpp"

namespace pairmatch {

/// Which of the two matchings (A, B) passed to decompose() an edge comes from.
enum class Side { a, b };

enum class ComponentKind { cycle, even_path, odd_path };

const char* to_string(ComponentKind kind);

/// One connected component of A xor B: an alternating path or even cycle.
struct AlternatingComponent {
  ComponentKind kind = ComponentKind::odd_path;
  /// Traversal order. Paths list length+1 vertices; cycles list each vertex
  /// once, the closing edge returning to vertices.front().
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Side> sides;

  std::size_t length() const { return edges.size(); }
  bool is_path() const { return kind != ComponentKind::cycle; }
  Side start_side() const { return sides.front(); }
  std::size_t count(Side s) const;
  EdgeList edge_set() const;
  AlternatingComponent reversed() const;
};

/// A n B plus the components of A xor B, split into the families C(A,B),
/// P_e(A,B), P_o^A(A,B) and P_o^B(A,B).
struct Decomposition {
  EdgeList shared;
  std::vector<AlternatingComponent> cycles;
  std::vector<AlternatingComponent> even_paths;
  std::vector<AlternatingComponent> odd_paths_a;
  std::vector<AlternatingComponent> odd_paths_b;

  /// All components ordered by smallest vertex.
  std::vector<AlternatingComponent> components() const;
  std::vector<AlternatingComponent> paths() const;
  std::size_t component_edge_count() const;
};

/// Components are found in order of their smallest vertex. A path is walked
/// from its smaller end vertex; a cycle from its smallest vertex toward the
/// smaller of its two neighbours. An edge of A \ B with nothing of B \ A at
/// either end is an odd path of length 1 in P_o^A.
Decomposition decompose(const Graph& g, const Matching& a, const Matching& b);

enum class Outcome { pass, fail, precondition_violated };

const char* to_string(Outcome outcome);

/// Result of checking one statement on one instance. `detail` carries the
/// counterexample when the check fails.
struct Verdict {
  std::string statement;
  Outcome outcome = Outcome::pass;
  std::string detail;

  bool passed() const { return outcome == Outcome::pass; }
};

/// Partition, strict alternation and maximality of a decomposition of (a, b).
Verdict check_decomposition(const Graph& g, const Matching& a, const Matching& b, const Decomposition& d);

/// Cycles and even paths hold equally many A- and B-edges; odd paths hold one
/// more edge of their starting side.
Verdict check_property_1(const Decomposition& d);
/// |A| - |B| = |P_o^A| - |P_o^B|.
Verdict check_property_2(const Matching& a, const Matching& b, const Decomposition& d);
/// For maximum m: P_o^H(M,H) is empty and |M| - |H| = |P_o^M(M,H)|.
/// A non-maximum m gives precondition_violated.
Verdict check_property_3(const Graph& g, const Matching& m, const Matching& h);
/// For (h, h') in M2(G): P_o^{H'}(H,H') is empty.
Verdict check_property_4(const Graph& g, const Matching& h, const Matching& h_prime);

/// Sets derived from a canonical triple (H, H', M).
struct TripleArtifacts {
  Decomposition m_h;   // decompose(M, H)
  Decomposition h_hp;  // decompose(H, H')
  EdgeList m_a;        // M-edges on paths of P_o^M(M,H)
  EdgeList h_a;        // H-edges on those paths
  /// For each end-edge of each P_o^M(M,H) path, the maximal (H,H')-path that
  /// starts with it, oriented away from the odd path's end vertex.
  std::vector<AlternatingComponent> y_paths;
  EdgeList h_y;  // last edges of y_paths
  /// Problems met while building Y (an end-edge outside H', an end-edge not
  /// at the end of its (H,H') component).
  std::vector<Verdict> lemma_verdicts;
};

TripleArtifacts derive_artifacts(const Graph& g, const CanonicalTriple& t);

/// Known invariants of the host graph, so callers that already solved it can
/// skip recomputation.
struct GraphInvariants {
  int nu = 0;
  int lambda2 = 0;
  int alpha2 = 0;
};

struct LemmaReport {
  GraphInvariants invariants;
  TripleArtifacts artifacts;
  std::vector<Verdict> verdicts;

  bool all_passed() const;
  std::size_t passed_count() const;
  std::size_t failed_count() const;
};

/// Evaluates every structural statement behind the 5/4 bound on (g, t):
/// properties 1-4, lemmas 1-6, corollaries 1-3, the chain
/// alpha2 >= |H'| >= 2|Y| = 4(nu - alpha2) and 4 nu <= 5 alpha2.
LemmaReport verify_lemmas(const Graph& g, const CanonicalTriple& t, const GraphInvariants& known);
/// Same, computing nu, lambda2 and alpha2 first (throws BudgetExceeded).
LemmaReport verify_lemmas(const Graph& g, const CanonicalTriple& t);

}  // namespace pairmatch
