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

#include <cstdint>
#include <iterator>

#include "pairmatch/graph.hpp"

namespace pairmatch {

/// Path with `edges` edges on vertices 0..edges.
Graph gen_path(int edges);
/// Cycle C_k on 0..k-1; k >= 3.
Graph gen_cycle(int k);
Graph gen_complete(int n);
Graph gen_petersen();

/// G(n, p) random graph. The stream is std::mt19937_64 seeded with `seed`;
/// pairs are visited in graph6 column order ((0,1),(0,2),(1,2),(0,3),...)
/// and each draws one 64-bit word w, keeping the pair iff
/// (w >> 11) * 2^-53 < p. Both mt19937_64 and this conversion are fully
/// specified, so results are identical on every platform.
Graph gen_random(int n, double p, std::uint64_t seed);

/// Extremal family for nu/alpha2 = 5/4. `base` must have a perfect matching.
/// Each base vertex v gets four new vertices appended as a block
/// b = n + 4v: x1 = b, y1 = b+1, x2 = b+2, y2 = b+3, joined by the two
/// length-two paths v-x1-y1 and v-x2-y2.
Graph gen_tight_family(const Graph& base);

/// Base graph used for the k-th member of the built-in tight family:
/// K_2 for k = 1 and the cycle C_2k for k >= 2.
Graph tight_family_base(int k);

/// Gap family G_k with nu = k, lambda2 = k+1, alpha2 = k (k >= 2): a spider
/// with center 0, one pendant leaf 1 and k-1 legs 0-(2i)-(2i+1),
/// i = 1..k-1. 2k vertices, 2k-1 edges.
Graph gen_gap_family(int k);

/// Graph whose upper-triangle adjacency bitstring (graph6 column order, first
/// pair most significant) is `bits`.
Graph graph_from_pair_bits(int n, std::uint64_t bits);

inline constexpr int kEnumerationMaxVertices = 7;

/// All labeled simple graphs on n vertices (n <= 7), in lexicographic order
/// of their adjacency bitstrings: index i is graph_from_pair_bits(n, i).
class LabeledGraphs {
 public:
  explicit LabeledGraphs(int n);

  int vertex_count() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << pairs_; }
  Graph at(std::uint64_t index) const { return graph_from_pair_bits(n_, index); }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;

    iterator(const LabeledGraphs* owner, std::uint64_t index) : owner_(owner), index_(index) {}
    Graph operator*() const { return owner_->at(index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++index_;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    const LabeledGraphs* owner_;
    std::uint64_t index_;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

 private:
  int n_;
  int pairs_;
};

inline LabeledGraphs enumerate_graphs(int n) { return LabeledGraphs(n); }

}  // namespace pairmatch
