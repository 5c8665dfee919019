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

#include "pairmatch/matching.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "edge_mask.hpp"

namespace pairmatch {

const char* to_string(MatchingFault fault) {
  switch (fault) {
    case MatchingFault::none: return "none";
    case MatchingFault::edge_not_in_graph: return "edge_not_in_graph";
    case MatchingFault::shared_vertex: return "shared_vertex";
    case MatchingFault::duplicate_edge: return "duplicate_edge";
  }
  return "unknown";
}

MatchingCheck is_matching(const Graph& g, std::span<const Edge> edges) {
  std::vector<Edge> sorted;
  sorted.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u == e.v || !g.has_edge(e.u, e.v)) return {MatchingFault::edge_not_in_graph, e};
    sorted.push_back(make_edge(e.u, e.v));
  }
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    return {MatchingFault::duplicate_edge, *dup};
  }
  std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& e : sorted) {
    auto& cu = covered[static_cast<std::size_t>(e.u)];
    auto& cv = covered[static_cast<std::size_t>(e.v)];
    if (cu || cv) return {MatchingFault::shared_vertex, e};
    cu = cv = 1;
  }
  return {};
}

Matching::Matching(const Graph& g, std::vector<Edge> edges) {
  if (auto check = is_matching(g, edges); !check) {
    throw GraphError(std::string("not a matching: ") + to_string(check.fault) + " at " +
                     to_string(check.offending));
  }
  for (auto& e : edges) e = make_edge(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

std::optional<Vertex> Matching::mate(Vertex v) const {
  for (const auto& e : edges_) {
    if (e.touches(v)) return e.other(v);
  }
  return std::nullopt;
}

namespace {

constexpr Vertex kNone = -1;

/// Edmonds' blossom search over an explicit mate array. One instance is
/// reused for every root of a graph.
class BlossomSearch {
 public:
  explicit BlossomSearch(const Graph& g)
      : g_(g),
        n_(static_cast<std::size_t>(g.vertex_count())),
        mate_(n_, kNone),
        parent_(n_),
        base_(n_),
        in_tree_(n_),
        in_blossom_(n_),
        on_path_(n_) {}

  std::vector<Vertex>& mate() { return mate_; }

  /// Vertex sequence of an augmenting path starting at `root`, or empty.
  std::vector<Vertex> search(Vertex root) {
    std::fill(parent_.begin(), parent_.end(), kNone);
    std::fill(in_tree_.begin(), in_tree_.end(), 0);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<Vertex>(i);

    std::deque<Vertex> queue{root};
    in_tree_[idx(root)] = 1;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (const Vertex to : g_.neighbors(v)) {
        if (base_[idx(v)] == base_[idx(to)] || mate_[idx(v)] == to) continue;
        if (to == root || (mate_[idx(to)] != kNone && parent_[idx(mate_[idx(to)])] != kNone)) {
          // odd cycle: shrink the blossom onto its base
          const Vertex b = common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (in_blossom_[idx(base_[i])]) {
              base_[i] = b;
              if (!in_tree_[i]) {
                in_tree_[i] = 1;
                queue.push_back(static_cast<Vertex>(i));
              }
            }
          }
        } else if (parent_[idx(to)] == kNone) {
          parent_[idx(to)] = v;
          if (mate_[idx(to)] == kNone) return trace(to);
          in_tree_[idx(mate_[idx(to)])] = 1;
          queue.push_back(mate_[idx(to)]);
        }
      }
    }
    return {};
  }

  void apply(const std::vector<Vertex>& path) {
    for (std::size_t i = 0; i + 1 < path.size(); i += 2) {
      mate_[idx(path[i])] = path[i + 1];
      mate_[idx(path[i + 1])] = path[i];
    }
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  Vertex common_base(Vertex a, Vertex b) {
    std::fill(on_path_.begin(), on_path_.end(), 0);
    for (;;) {
      a = base_[idx(a)];
      on_path_[idx(a)] = 1;
      if (mate_[idx(a)] == kNone) break;
      a = parent_[idx(mate_[idx(a)])];
    }
    for (;;) {
      b = base_[idx(b)];
      if (on_path_[idx(b)]) return b;
      b = parent_[idx(mate_[idx(b)])];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[idx(v)] != b) {
      in_blossom_[idx(base_[idx(v)])] = 1;
      in_blossom_[idx(base_[idx(mate_[idx(v)])])] = 1;
      parent_[idx(v)] = child;
      child = mate_[idx(v)];
      v = parent_[idx(mate_[idx(v)])];
    }
  }

  // Walks parent/mate links from the free endpoint back to the root and
  // returns the path root-first.
  std::vector<Vertex> trace(Vertex end) const {
    std::vector<Vertex> path;
    Vertex v = end;
    while (v != kNone) {
      const Vertex pv = parent_[idx(v)];
      path.push_back(v);
      path.push_back(pv);
      v = mate_[idx(pv)];
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> in_tree_;
  std::vector<char> in_blossom_;
  std::vector<char> on_path_;
};

Matching from_mates(const Graph& g, const std::vector<Vertex>& mate) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < static_cast<Vertex>(mate.size()); ++v) {
    if (mate[static_cast<std::size_t>(v)] > v) edges.push_back({v, mate[static_cast<std::size_t>(v)]});
  }
  return Matching(g, std::move(edges));
}

void check_host(const Graph& g, const Matching& m) {
  if (auto check = is_matching(g, m.edges()); !check) {
    throw GraphError(std::string("matching does not belong to the graph: ") + to_string(check.fault));
  }
}

}  // namespace

bool is_augmenting_path(const Graph& g, const Matching& m, const AugmentingPath& path) {
  const auto& vs = path.vertices;
  if (vs.size() < 2 || vs.size() % 2 != 0) return false;
  std::vector<Vertex> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (m.mate(vs.front()) || m.mate(vs.back())) return false;
  std::vector<std::size_t> matched;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!g.has_edge(vs[i], vs[i + 1])) return false;
    const bool in_m = m.contains(make_edge(vs[i], vs[i + 1]));
    if (in_m != (i % 2 == 1)) return false;
    if (in_m) matched.push_back(i);
  }
  return matched == path.matched_positions;
}

Matching augment(const Graph& g, const Matching& m, const AugmentingPath& path) {
  if (!is_augmenting_path(g, m, path)) throw GraphError("not an augmenting path for this matching");
  EdgeList path_edges;
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    path_edges.push_back(make_edge(path.vertices[i], path.vertices[i + 1]));
  }
  std::sort(path_edges.begin(), path_edges.end());
  return Matching(g, edge_symmetric_difference(m.edges(), path_edges));
}

std::optional<AugmentingPath> find_augmenting_path(const Graph& g, const Matching& m) {
  check_host(g, m);
  BlossomSearch search(g);
  for (const auto& e : m.edges()) {
    search.mate()[static_cast<std::size_t>(e.u)] = e.v;
    search.mate()[static_cast<std::size_t>(e.v)] = e.u;
  }
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (search.mate()[static_cast<std::size_t>(root)] != kNone) continue;
    auto vertices = search.search(root);
    if (vertices.empty()) continue;
    AugmentingPath path{std::move(vertices), {}};
    for (std::size_t i = 1; i + 1 < path.vertices.size(); i += 2) path.matched_positions.push_back(i);
    return path;
  }
  return std::nullopt;
}

Matching max_matching(const Graph& g) {
  BlossomSearch search(g);
  // A root with no augmenting path never gains one later, so one pass suffices.
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (search.mate()[static_cast<std::size_t>(root)] != kNone) continue;
    if (auto path = search.search(root); !path.empty()) search.apply(path);
  }
  return from_mates(g, search.mate());
}

Matching max_matching_bruteforce(const Graph& g) {
  const std::size_t m = g.edge_count();
  if (m > kMatchingOracleEdgeCeiling) {
    throw CeilingExceeded("brute-force matching oracle supports at most " +
                          std::to_string(kMatchingOracleEdgeCeiling) + " edges, got " + std::to_string(m));
  }
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  detail::EdgeMask current = 0;
  detail::EdgeMask best = 0;
  int best_size = 0;

  auto rec = [&](auto&& self, std::size_t i, int size) -> void {
    if (size > best_size) {
      best_size = size;
      best = current;
    }
    if (i == m || size + static_cast<int>(m - i) <= best_size) return;
    const Edge& e = g.edge(i);
    auto& cu = used[static_cast<std::size_t>(e.u)];
    auto& cv = used[static_cast<std::size_t>(e.v)];
    if (!cu && !cv) {
      cu = cv = 1;
      current |= detail::EdgeMask{1} << i;
      self(self, i + 1, size + 1);
      current &= ~(detail::EdgeMask{1} << i);
      cu = cv = 0;
    }
    self(self, i + 1, size);
  };
  rec(rec, 0, 0);
  return detail::to_matching(g, best);
}

void for_each_matching_of_size(const Graph& g, std::size_t size,
                               const std::function<void(std::uint64_t)>& visit) {
  const std::size_t m = g.edge_count();
  if (m > 64) throw CeilingExceeded("matching enumeration supports at most 64 edges");
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  detail::EdgeMask current = 0;

  auto free_edges_from = [&](std::size_t i) {
    std::size_t count = 0;
    for (; i < m; ++i) {
      const Edge& e = g.edge(i);
      if (!used[static_cast<std::size_t>(e.u)] && !used[static_cast<std::size_t>(e.v)]) ++count;
    }
    return count;
  };

  auto rec = [&](auto&& self, std::size_t i, std::size_t taken) -> void {
    if (taken == size) {
      visit(current);
      return;
    }
    if (taken + free_edges_from(i) < size) return;
    const Edge& e = g.edge(i);
    self(self, i + 1, taken);
    auto& cu = used[static_cast<std::size_t>(e.u)];
    auto& cv = used[static_cast<std::size_t>(e.v)];
    if (!cu && !cv) {
      cu = cv = 1;
      current |= detail::EdgeMask{1} << i;
      self(self, i + 1, taken + 1);
      current &= ~(detail::EdgeMask{1} << i);
      cu = cv = 0;
    }
  };
  rec(rec, 0, 0);
}

std::vector<Matching> maximum_matchings(const Graph& g) {
  std::vector<Matching> out;
  for_each_matching_of_size(g, max_matching(g).size(),
                            [&](std::uint64_t mask) { out.push_back(detail::to_matching(g, mask)); });
  return out;
}

}  // namespace pairmatch
