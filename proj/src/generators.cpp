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

#include "pairmatch/generators.hpp"

#include <random>
#include <string>

#include "pairmatch/matching.hpp"

namespace pairmatch {

Graph gen_path(int edges) {
  if (edges < 0) throw GraphError("path needs a non-negative edge count");
  std::vector<Edge> out;
  for (Vertex i = 0; i < edges; ++i) out.push_back({i, i + 1});
  return Graph(edges + 1, std::move(out));
}

Graph gen_cycle(int k) {
  if (k < 3) throw GraphError("cycle needs at least 3 edges, got " + std::to_string(k));
  std::vector<Edge> out;
  for (Vertex i = 0; i < k; ++i) out.push_back(make_edge(i, (i + 1) % k));
  return Graph(k, std::move(out));
}

Graph gen_complete(int n) {
  if (n < 0) throw GraphError("negative vertex count");
  std::vector<Edge> out;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) out.push_back({u, v});
  return Graph(n, std::move(out));
}

Graph gen_petersen() {
  std::vector<Edge> out;
  for (Vertex i = 0; i < 5; ++i) {
    out.push_back(make_edge(i, (i + 1) % 5));          // outer cycle
    out.push_back(make_edge(5 + i, 5 + (i + 2) % 5));  // inner pentagram
    out.push_back(make_edge(i, 5 + i));                // spokes
  }
  return Graph(10, std::move(out));
}

Graph gen_random(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw GraphError("edge probability must lie in [0,1]");
  if (n < 0) throw GraphError("negative vertex count");
  std::mt19937_64 rng(seed);
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  std::vector<Edge> out;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      const double draw = static_cast<double>(rng() >> 11) * kScale;
      if (draw < p) out.push_back({u, v});
    }
  }
  return Graph(n, std::move(out));
}

Graph gen_tight_family(const Graph& base) {
  const auto n = base.vertex_count();
  if (2 * max_matching(base).size() != static_cast<std::size_t>(n)) {
    throw GraphError("tight family base graph has no perfect matching");
  }
  std::vector<Edge> out(base.edges().begin(), base.edges().end());
  for (Vertex v = 0; v < n; ++v) {
    const Vertex b = n + 4 * v;
    out.push_back({v, b});
    out.push_back({b, b + 1});
    out.push_back({v, b + 2});
    out.push_back({b + 2, b + 3});
  }
  return Graph(5 * n, std::move(out));
}

Graph tight_family_base(int k) {
  if (k < 1) throw GraphError("tight family index starts at 1");
  return k == 1 ? gen_complete(2) : gen_cycle(2 * k);
}

Graph gen_gap_family(int k) {
  if (k < 2) throw GraphError("gap family needs k >= 2, got " + std::to_string(k));
  std::vector<Edge> out{{0, 1}};
  for (Vertex i = 1; i < k; ++i) {
    out.push_back({0, 2 * i});
    out.push_back({2 * i, 2 * i + 1});
  }
  return Graph(2 * k, std::move(out));
}

Graph graph_from_pair_bits(int n, std::uint64_t bits) {
  const int pairs = n * (n - 1) / 2;
  std::vector<Edge> out;
  int k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      if ((bits >> (pairs - 1 - k)) & 1) out.push_back({u, v});
    }
  }
  return Graph(n, std::move(out));
}

LabeledGraphs::LabeledGraphs(int n) : n_(n), pairs_(n * (n - 1) / 2) {
  if (n < 0 || n > kEnumerationMaxVertices) {
    throw CeilingExceeded("labeled enumeration supports 0.." + std::to_string(kEnumerationMaxVertices) +
                          " vertices, got " + std::to_string(n));
  }
}

}  // namespace pairmatch
