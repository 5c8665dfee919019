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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "pairmatch/generators.hpp"
#include "pairmatch/graph_io.hpp"
#include "pairmatch/matching.hpp"

namespace pairmatch {
namespace {

TEST(IsMatching, Examples) {
  const auto p4 = gen_path(3);
  EXPECT_TRUE(is_matching(p4, EdgeList{}));
  EXPECT_TRUE(is_matching(p4, EdgeList{{0, 1}, {2, 3}}));

  const EdgeList shared{{0, 1}, {1, 2}};
  const auto c1 = is_matching(p4, shared);
  EXPECT_EQ(c1.fault, MatchingFault::shared_vertex);

  const EdgeList foreign{{0, 2}};
  const auto c2 = is_matching(p4, foreign);
  EXPECT_EQ(c2.fault, MatchingFault::edge_not_in_graph);
  EXPECT_EQ(c2.offending, (Edge{0, 2}));

  const EdgeList twice{{0, 1}, {0, 1}};
  EXPECT_EQ(is_matching(p4, twice).fault, MatchingFault::duplicate_edge);
}

TEST(Matching, ValidatesAndReportsMates) {
  const auto p4 = gen_path(3);
  EXPECT_THROW(Matching(p4, {{0, 1}, {1, 2}}), GraphError);
  const Matching m(p4, {{2, 3}, {0, 1}});
  EXPECT_EQ(m.size(), 2u);
  EXPECT_EQ(m.edges().front(), (Edge{0, 1}));
  EXPECT_EQ(m.mate(3), 2);
  EXPECT_FALSE(Matching(p4, {{1, 2}}).mate(0).has_value());
}

TEST(AugmentingPath, PathOnFourVertices) {
  const auto p4 = gen_path(3);
  const Matching m(p4, {{1, 2}});
  const auto path = find_augmenting_path(p4, m);
  ASSERT_TRUE(path.has_value());
  EXPECT_EQ(path->vertices, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(path->matched_positions, (std::vector<std::size_t>{1}));
  EXPECT_TRUE(is_augmenting_path(p4, m, *path));
  EXPECT_EQ(augment(p4, m, *path), Matching(p4, {{0, 1}, {2, 3}}));
  EXPECT_FALSE(find_augmenting_path(p4, Matching(p4, {{0, 1}, {2, 3}})).has_value());
}

TEST(AugmentingPath, FiveCycle) {
  const auto c5 = gen_cycle(5);
  const Matching m(c5, {{0, 1}});
  const auto path = find_augmenting_path(c5, m);
  ASSERT_TRUE(path.has_value());
  EXPECT_TRUE(is_augmenting_path(c5, m, *path));
  EXPECT_EQ(augment(c5, m, *path).size(), 2u);
}

TEST(AugmentingPath, AroundOddCycle) {
  // Stem 0-6-1 into the 5-cycle 1..5, exit edge 4-7. Free vertices: 0, 7.
  const Graph g(8, {{0, 6}, {1, 6}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {4, 7}});
  const Matching m(g, {{1, 6}, {2, 3}, {4, 5}});
  const auto path = find_augmenting_path(g, m);
  ASSERT_TRUE(path.has_value());
  EXPECT_TRUE(is_augmenting_path(g, m, *path));
  EXPECT_EQ(augment(g, m, *path).size(), 4u);
}

TEST(AugmentingPath, RejectsInvalidPaths) {
  const auto p4 = gen_path(3);
  const Matching m(p4, {{1, 2}});
  EXPECT_FALSE(is_augmenting_path(p4, m, {{0, 1, 2}, {1}}));     // ends matched
  EXPECT_FALSE(is_augmenting_path(p4, m, {{0, 1}, {}}));         // 1 is matched
  EXPECT_FALSE(is_augmenting_path(p4, m, {{0, 2, 1, 3}, {1}}));  // not edges
}

TEST(MaxMatching, KnownValues) {
  EXPECT_EQ(max_matching(Graph(4)).size(), 0u);
  EXPECT_EQ(max_matching(gen_path(3)).size(), 2u);
  EXPECT_EQ(max_matching(gen_cycle(5)).size(), 2u);
  EXPECT_EQ(max_matching(gen_complete(7)).size(), 3u);
  EXPECT_EQ(max_matching(gen_petersen()).size(), 5u);
  EXPECT_EQ(max_matching(gen_tight_family(Graph(2, {{0, 1}}))).size(), 5u);
  EXPECT_EQ(max_matching(gen_gap_family(5)).size(), 5u);
}

TEST(MaxMatching, DeterministicForEqualInputs) {
  const auto g = gen_random(30, 0.15, 11);
  EXPECT_EQ(max_matching(g), max_matching(g));
}

TEST(MaxMatching, BruteForceCeiling) {
  EXPECT_THROW(max_matching_bruteforce(gen_complete(8)), CeilingExceeded);  // 28 edges
  EXPECT_EQ(max_matching_bruteforce(gen_petersen()).size(), 5u);
}

class RandomGraphs : public ::testing::TestWithParam<double> {};

TEST_P(RandomGraphs, AgreesWithOraclesAndHasBergeCertificate) {
  const double p = GetParam();
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    const auto g = gen_random(n, p, seed);
    if (g.edge_count() > 18) continue;
    const auto m = max_matching(g);
    ASSERT_TRUE(is_matching(g, m.edges()));
    const auto expected = static_cast<std::size_t>(oracle::nu(g));
    EXPECT_EQ(m.size(), expected) << encode_graph6(g);
    EXPECT_EQ(max_matching_bruteforce(g).size(), expected) << encode_graph6(g);
    EXPECT_LE(2 * m.size(), static_cast<std::size_t>(n));
    EXPECT_FALSE(find_augmenting_path(g, m).has_value()) << encode_graph6(g);
  }
}

INSTANTIATE_TEST_SUITE_P(Densities, RandomGraphs, ::testing::Values(0.2, 0.4, 0.6, 0.9));

TEST(AugmentingPath, FoundExactlyWhenMatchingIsNotMaximum) {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto g = gen_random(4 + static_cast<int>(seed % 12), 0.3, seed);
    const auto nu = max_matching(g).size();
    const auto m = oracle::random_matching(g, rng, 0.6);
    const auto path = find_augmenting_path(g, m);
    ASSERT_EQ(path.has_value(), m.size() < nu) << encode_graph6(g);
    if (path) {
      EXPECT_TRUE(is_augmenting_path(g, m, *path));
      EXPECT_EQ(path->length() % 2, 1u);
      EXPECT_EQ(augment(g, m, *path).size(), m.size() + 1);
    }
  }
}

TEST(MaxMatching, LargerGraphsHaveNoAugmentingPath) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = gen_random(60, 0.05, seed);
    const auto m = max_matching(g);
    EXPECT_FALSE(find_augmenting_path(g, m).has_value());
  }
}

TEST(MaximumMatchings, AllOfThemAndOnlyThem) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = gen_random(7, 0.45, seed);
    const auto all = maximum_matchings(g);
    const auto nu = static_cast<std::size_t>(oracle::nu(g));
    std::set<EdgeList> want;
    for (const auto& s : oracle::all_matchings(g)) {
      if (s.size() == nu) want.emplace(s.begin(), s.end());
    }
    std::set<EdgeList> got;
    for (const auto& m : all) {
      EXPECT_EQ(m.size(), nu);
      got.insert(m.edges());
    }
    EXPECT_EQ(got.size(), all.size());
    EXPECT_EQ(got, want);
  }
}

TEST(ForEachMatchingOfSize, CountsMatchings) {
  // K4 has 6 matchings of size 1 and 3 perfect matchings.
  const auto k4 = gen_complete(4);
  int ones = 0;
  int twos = 0;
  for_each_matching_of_size(k4, 1, [&](std::uint64_t) { ++ones; });
  for_each_matching_of_size(k4, 2, [&](std::uint64_t) { ++twos; });
  EXPECT_EQ(ones, 6);
  EXPECT_EQ(twos, 3);
}

}  // namespace
}  // namespace pairmatch
