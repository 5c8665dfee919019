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

// Bitmask view of edge subsets for the exhaustive routines. Bit i stands for
// g.edge(i); every caller has already checked edge_count() <= 64.

#include <bit>
#include <cstdint>
#include <span>

#include "pairmatch/graph.hpp"
#include "pairmatch/matching.hpp"

namespace pairmatch::detail {

using EdgeMask = std::uint64_t;

inline int count(EdgeMask m) { return std::popcount(m); }

inline EdgeList to_edges(const Graph& g, EdgeMask m) {
  EdgeList out;
  while (m) {
    out.push_back(g.edge(static_cast<std::size_t>(std::countr_zero(m))));
    m &= m - 1;
  }
  return out;
}

inline Matching to_matching(const Graph& g, EdgeMask m) { return Matching(g, to_edges(g, m)); }

inline EdgeMask to_mask(const Graph& g, std::span<const Edge> edges) {
  EdgeMask m = 0;
  for (const auto& e : edges) {
    if (auto i = g.edge_index(e)) m |= EdgeMask{1} << *i;
  }
  return m;
}

/// Lexicographic order of the sorted edge lists the masks stand for.
inline bool lex_less(EdgeMask a, EdgeMask b) {
  while (a && b) {
    const int x = std::countr_zero(a);
    const int y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

}  // namespace pairmatch::detail
