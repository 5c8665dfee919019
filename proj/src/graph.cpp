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

#include "pairmatch/graph.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace pairmatch {

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

std::string to_string(std::span<const Edge> edges) {
  std::string out = "{";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ",";
    out += to_string(edges[i]);
  }
  return out + "}";
}

EdgeList edge_intersection(std::span<const Edge> a, std::span<const Edge> b) {
  EdgeList out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeList edge_difference(std::span<const Edge> a, std::span<const Edge> b) {
  EdgeList out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeList edge_union(std::span<const Edge> a, std::span<const Edge> b) {
  EdgeList out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeList edge_symmetric_difference(std::span<const Edge> a, std::span<const Edge> b) {
  EdgeList out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool edge_set_contains(std::span<const Edge> set, const Edge& e) {
  return std::binary_search(set.begin(), set.end(), e);
}

Graph::Graph(Vertex vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
  if (vertex_count < 0) throw GraphError("negative vertex count");
  for (auto& e : edges) {
    if (e.u == e.v) throw GraphError("loop edge at vertex " + std::to_string(e.u));
    e = make_edge(e.u, e.v);
    if (e.u < 0 || e.v >= n_) {
      throw GraphError("edge " + to_string(e) + " has an endpoint outside 0.." +
                       std::to_string(n_ - 1));
    }
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw GraphError("duplicate edge " + to_string(*dup));
  }
  edges_ = std::move(edges);
  adjacency_.assign(static_cast<std::size_t>(n_), {});
  for (const auto& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

std::optional<std::size_t> Graph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a == b) return false;
  return has_edge(make_edge(a, b));
}

}  // namespace pairmatch
