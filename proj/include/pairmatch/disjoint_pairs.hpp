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
#include <optional>
#include <stdexcept>
#include <vector>

#include "pairmatch/graph.hpp"
#include "pairmatch/matching.hpp"

namespace pairmatch {

/// Two edge-disjoint matchings of the same graph.
struct DisjointPair {
  Matching h;
  Matching h_prime;

  std::size_t total() const { return h.size() + h_prime.size(); }
  friend bool operator==(const DisjointPair&, const DisjointPair&) = default;
};

/// Checks both matchings against g and their disjointness.
bool is_disjoint_pair(const Graph& g, const DisjointPair& pair);

/// lambda2 = max |H|+|H'| over disjoint pairs; alpha2 = max larger side among
/// pairs attaining lambda2. The witness attains both with |h| = alpha2.
struct DisjointPairResult {
  int lambda2 = 0;
  int alpha2 = 0;
  DisjointPair witness;
};

enum class SolveStatus { solved, budget_exceeded };

const char* to_string(SolveStatus status);

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct PairSolveOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct PairSolve {
  SolveStatus status = SolveStatus::solved;
  std::optional<DisjointPairResult> result;  // set iff solved
  std::uint64_t nodes = 0;

  bool solved() const { return status == SolveStatus::solved; }
};

/// Exact branch-and-bound. Edges are grouped by vertex (vertices in order of
/// decreasing degree) and each is branched into H, H' or neither. A branch is
/// cut when the assigned total plus a bound on the undecided edges cannot beat
/// the incumbent; the bound counts fitting edges and the remaining per-vertex
/// capacity (one H edge and one H' edge per vertex). The first branched edge
/// never goes to H' (the H <-> H' swap symmetry). A second search fixes the
/// total at lambda2 and maximizes the larger side. Both searches share the
/// node budget; exceeding it yields budget_exceeded.
PairSolve solve_pair(const Graph& g, const PairSolveOptions& options = {});

inline constexpr std::size_t kPairOracleEdgeCeiling = 14;

/// Scans all 3^|E| assignments. Oracle for solve_pair.
DisjointPairResult solve_pair_bruteforce(const Graph& g);

/// Raised when an enumeration runs out of its node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationLimits {
  std::size_t edge_ceiling = kPairOracleEdgeCeiling;  // at most 64
  std::uint64_t node_budget = kDefaultNodeBudget;
};

/// Visits every (H, H') in M2(G): |H|+|H'| = lambda2 and |H| = alpha2. Pairs
/// are ordered, so for |H| = |H'| both orientations appear. Order is
/// depth-first over the sorted edge list with branches neither < H < H'.
void for_each_m2(const Graph& g, const std::function<void(const DisjointPair&)>& visit,
                 const EnumerationLimits& limits = {});
std::vector<DisjointPair> enumerate_m2(const Graph& g, const EnumerationLimits& limits = {});

/// (H, H') in M2(G) plus a maximum matching M such that |M n H| is largest,
/// then |M n H'| is largest.
struct CanonicalTriple {
  Matching h;
  Matching h_prime;
  Matching m;

  friend bool operator==(const CanonicalTriple&, const CanonicalTriple&) = default;
};

/// The maximizing triple; remaining ties go to the lexicographically smallest
/// (H, H', M) by sorted edge lists.
CanonicalTriple canonical_triple(const Graph& g, const EnumerationLimits& limits = {});

/// Every triple attaining the maximum of (|M n H|, |M n H'|), in the same
/// lexicographic order.
std::vector<CanonicalTriple> maximizing_triples(const Graph& g, const EnumerationLimits& limits = {});

}  // namespace pairmatch
