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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pairmatch {

using Vertex = std::int32_t;

/// Undirected edge stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;

  constexpr bool touches(Vertex w) const { return u == w || v == w; }
  constexpr bool adjacent_to(const Edge& other) const {
    return *this != other && (touches(other.u) || touches(other.v));
  }
  constexpr Vertex other(Vertex w) const { return w == u ? v : u; }
};

/// Builds the canonical (smaller endpoint first) edge. Loops are not rejected
/// here; Graph construction does that.
constexpr Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(const Edge& e);

/// Sorted, duplicate-free list of edges. Used for every edge set (matchings,
/// symmetric differences, the derived sets of the lemma checks).
using EdgeList = std::vector<Edge>;

EdgeList edge_intersection(std::span<const Edge> a, std::span<const Edge> b);
EdgeList edge_difference(std::span<const Edge> a, std::span<const Edge> b);
EdgeList edge_union(std::span<const Edge> a, std::span<const Edge> b);
EdgeList edge_symmetric_difference(std::span<const Edge> a, std::span<const Edge> b);
bool edge_set_contains(std::span<const Edge> set, const Edge& e);
std::string to_string(std::span<const Edge> edges);

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive routine is asked to run above its size ceiling.
class CeilingExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built; the
/// constructor enforces no loops, no multi-edges and in-range endpoints.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex vertex_count, std::vector<Edge> edges = {});

  Vertex vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  /// Edges in lexicographic order; the position is the edge's index.
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_[index]; }
  std::optional<std::size_t> edge_index(const Edge& e) const;
  bool has_edge(const Edge& e) const { return edge_index(e).has_value(); }
  bool has_edge(Vertex a, Vertex b) const;

  /// Neighbours in increasing order.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

}  // namespace pairmatch
