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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pairmatch/graph.hpp"

namespace pairmatch {

enum class MatchingFault { none, edge_not_in_graph, shared_vertex, duplicate_edge };

const char* to_string(MatchingFault fault);

struct MatchingCheck {
  MatchingFault fault = MatchingFault::none;
  Edge offending{};  // first edge found at fault

  bool ok() const { return fault == MatchingFault::none; }
  explicit operator bool() const { return ok(); }
};

/// True iff every edge of `edges` is an edge of g and no two share a vertex.
MatchingCheck is_matching(const Graph& g, std::span<const Edge> edges);

/// A validated matching of some host graph. The edge list is kept sorted, so
/// two matchings compare equal iff they hold the same edges.
class Matching {
 public:
  Matching() = default;
  /// Throws GraphError if `edges` is not a matching of g.
  Matching(const Graph& g, std::vector<Edge> edges);

  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const EdgeList& edges() const { return edges_; }
  bool contains(const Edge& e) const { return edge_set_contains(edges_, e); }
  /// Matched partner of v, if any.
  std::optional<Vertex> mate(Vertex v) const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  EdgeList edges_;
};

/// Odd-length path whose end vertices are unmatched and whose edges alternate
/// unmatched / matched.
struct AugmentingPath {
  std::vector<Vertex> vertices;
  /// Positions i such that edge (vertices[i], vertices[i+1]) is matched.
  std::vector<std::size_t> matched_positions;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

bool is_augmenting_path(const Graph& g, const Matching& m, const AugmentingPath& path);

/// m xor path; the result has one more edge.
Matching augment(const Graph& g, const Matching& m, const AugmentingPath& path);

/// Edmonds search with blossom shrinking from each unmatched vertex in
/// increasing order. std::nullopt certifies m is maximum (Berge).
std::optional<AugmentingPath> find_augmenting_path(const Graph& g, const Matching& m);

/// Maximum matching by repeated augmentation from the empty matching.
/// Deterministic: roots and neighbours are scanned in increasing order.
Matching max_matching(const Graph& g);

inline constexpr std::size_t kMatchingOracleEdgeCeiling = 24;

/// Exhaustive search over edge subsets, pruned on adjacency. Oracle only.
Matching max_matching_bruteforce(const Graph& g);

/// Calls `visit` with every matching of size `size` (edge index bitmasks,
/// bit i = g.edge(i)), in depth-first order over the sorted edge list with
/// "skip" explored before "take". Requires edge_count() <= 64.
void for_each_matching_of_size(const Graph& g, std::size_t size,
                               const std::function<void(std::uint64_t)>& visit);

std::vector<Matching> maximum_matchings(const Graph& g);

}  // namespace pairmatch
