// Copyright 2026 The matchembed Authors
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

#include "graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "error.hpp"
#include "generators.hpp"
#include "gtest/gtest.h"
#include "rng.hpp"
#include "test_util.hpp"

namespace matchembed {
namespace {

using testing::Complete;
using testing::Pairs;

TEST(EvaluateTest, SingleEdge) {
  const DenseGraph g = Complete(2, {{0, 1, 7.0}});
  const Matching m = Pairs(2, {{0, 1}});
  EXPECT_EQ(Evaluate(g, m, Objective::kMcm), 7.0);
  EXPECT_EQ(Evaluate(g, m, Objective::kBm), 7.0);
  EXPECT_EQ(Evaluate(g, m, Objective::kUm), 0.0);
}

TEST(EvaluateTest, MinDeviationDividesByVertexCount) {
  const DenseGraph g = Complete(4, {{0, 1, 1}, {2, 3, 2}, {0, 2, 9},
                                    {0, 3, 9}, {1, 2, 9}, {1, 3, 9}});
  EXPECT_DOUBLE_EQ(Evaluate(g, Pairs(4, {{0, 1}, {2, 3}}), Objective::kMdm),
                   -0.25);
}

TEST(EvaluateTest, RejectsIncompleteMatching) {
  const DenseGraph g = GenerateUniform(4, 1);
  try {
    Evaluate(g, Pairs(4, {{0, 1}}), Objective::kMcm);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "incomplete matching");
  }
}

TEST(EvaluateTest, RejectsOutOfRangeIndex) {
  EXPECT_THROW(Pairs(4, {{0, 5}}), Error);
  const DenseGraph g = GenerateUniform(4, 1);
  EXPECT_THROW(Evaluate(g, Pairs(6, {{0, 1}, {2, 3}, {4, 5}}),
                        Objective::kMcm),
               Error);
}

TEST(MatchingTest, RejectsSharedVertex) {
  EXPECT_THROW(Pairs(4, {{0, 1}, {1, 2}}), Error);
}

TEST(MatchingTest, CanonicalOrder) {
  const Matching a = Pairs(4, {{3, 2}, {1, 0}});
  const Matching b = Pairs(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.pairs().front().u, 0);
  EXPECT_TRUE(a.is_perfect());
}

TEST(SentinelTest, MissingEdgesGetTenNTimesMax) {
  const std::vector<WeightedEdge> edges = {
      {0, 1, 1}, {2, 3, 1}, {0, 2, 1}, {1, 3, 1}};
  const DenseGraph g = DenseGraph::CompleteWithSentinels(4, edges);
  EXPECT_EQ(g.weight(0, 3), 40.0);
  EXPECT_EQ(g.weight(1, 2), 40.0);
  EXPECT_TRUE(g.is_sentinel(0, 3));
  EXPECT_TRUE(g.is_sentinel(2, 1));
  EXPECT_FALSE(g.is_sentinel(0, 1));
  EXPECT_EQ(g.sentinel_count(), 2u);
}

TEST(SentinelTest, CompleteInputIsUnchanged) {
  const DenseGraph g = GenerateUniform(6, 3);
  const auto edges = g.GenuineEdges();
  const DenseGraph h = DenseGraph::CompleteWithSentinels(6, edges);
  EXPECT_EQ(g, h);
  EXPECT_FALSE(h.has_sentinels());
}

TEST(SentinelTest, OddVertexCount) {
  try {
    DenseGraph::CompleteWithSentinels(3, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "odd vertex count");
  }
}

TEST(SentinelTest, ContradictoryDuplicate) {
  const std::vector<WeightedEdge> edges = {{0, 1, 1}, {1, 0, 2}};
  EXPECT_THROW(DenseGraph::CompleteWithSentinels(2, edges), Error);
  const std::vector<WeightedEdge> same = {{0, 1, 1}, {1, 0, 1}};
  EXPECT_NO_THROW(DenseGraph::CompleteWithSentinels(2, same));
}

TEST(SentinelTest, UsesSentinelFlag) {
  const std::vector<WeightedEdge> edges = {{0, 1, 1}, {2, 3, 1}};
  const DenseGraph g = DenseGraph::CompleteWithSentinels(4, edges);
  EXPECT_FALSE(UsesSentinel(g, Pairs(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(UsesSentinel(g, Pairs(4, {{0, 2}, {1, 3}})));
}

TEST(DenseGraphTest, RejectsNegativeAndNonFinite) {
  const std::vector<WeightedEdge> neg = {{0, 1, -1}};
  EXPECT_THROW(DenseGraph::CompleteWithSentinels(2, neg), Error);
  const std::vector<WeightedEdge> inf = {
      {0, 1, std::numeric_limits<double>::infinity()}};
  EXPECT_THROW(DenseGraph::CompleteWithSentinels(2, inf), Error);
}

TEST(DenseGraphTest, BipartiteWithinPartitionEdgesAreSentinels) {
  const DenseGraph g = GenerateUniform(6, 9, /*bipartite=*/true);
  EXPECT_TRUE(g.is_sentinel(0, 1));
  EXPECT_TRUE(g.is_sentinel(3, 5));
  EXPECT_FALSE(g.is_sentinel(0, 3));
  EXPECT_FALSE(g.admissible(0, 2));
  const std::vector<WeightedEdge> inside = {{0, 1, 1.0}};
  EXPECT_THROW(DenseGraph::CompleteWithSentinels(4, inside, true), Error);
}

TEST(GraphFileTest, ParsesCommentsAndCompletesMissingPairs) {
  std::istringstream in(
      "# a comment\n"
      "n 4\n"
      "0 1 1.5  # trailing\n"
      "\n"
      "2 3 2e0\n");
  const DenseGraph g = ReadGraph(in);
  EXPECT_EQ(g.size(), 4);
  EXPECT_EQ(g.weight(0, 1), 1.5);
  EXPECT_EQ(g.weight(3, 2), 2.0);
  EXPECT_TRUE(g.is_sentinel(0, 2));
  EXPECT_EQ(g.weight(0, 2), 10.0 * 4 * 2.0);
}

TEST(GraphFileTest, BipartiteHeader) {
  std::istringstream in("n 4 bipartite\n0 2 1\n0 3 2\n1 2 3\n1 3 4\n");
  const DenseGraph g = ReadGraph(in);
  EXPECT_TRUE(g.bipartite());
  EXPECT_EQ(g.weight(1, 3), 4.0);
}

TEST(GraphFileTest, Errors) {
  std::istringstream missing("0 1 2\n");
  EXPECT_THROW(ReadGraph(missing), Error);
  std::istringstream odd("n 3\n");
  EXPECT_THROW(ReadGraph(odd), Error);
  std::istringstream junk("n 2\n0 1 abc\n");
  EXPECT_THROW(ReadGraph(junk), Error);
  std::istringstream extra("n 2\n0 1 2 3\n");
  EXPECT_THROW(ReadGraph(extra), Error);
}

TEST(GraphFileTest, WriteThenReadIsIdentity) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const DenseGraph g = GenerateLomax({2.0, 1.0, 10, seed % 2 == 1}, seed);
    std::stringstream s;
    WriteGraph(s, g);
    EXPECT_EQ(ReadGraph(s), g);
  }
}

// Property: UM >= 0 and BM >= MCM / (n/2) on every perfect matching.
TEST(EvaluatePropertyTest, ObjectiveBounds) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 2 + 2 * static_cast<int>(seed % 6);
    const DenseGraph g = GenerateUniform(n, seed);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    CounterRng rng(seed);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.NextBelow(i + 1)]);
    std::vector<VertexPair> pairs;
    for (int i = 0; i < n; i += 2) pairs.push_back({perm[i], perm[i + 1]});
    const Matching m(n, pairs);
    EXPECT_GE(Evaluate(g, m, Objective::kUm), 0.0);
    EXPECT_GE(Evaluate(g, m, Objective::kBm),
              Evaluate(g, m, Objective::kMcm) / (n / 2) * (1 - 1e-15));
  }
}

// Property: relabelling graph and matching together leaves every value fixed.
TEST(EvaluatePropertyTest, PermutationEquivariance) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 8;
    const DenseGraph g = GenerateUniform(n, seed);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    CounterRng rng(seed + 100);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.NextBelow(i + 1)]);
    const Matching m = Pairs(n, {{0, 5}, {1, 2}, {3, 7}, {4, 6}});
    std::vector<VertexPair> moved;
    for (const auto& p : m.pairs()) moved.push_back({perm[p.u], perm[p.v]});
    const DenseGraph h = g.Permuted(perm);
    const Matching mm(n, moved);
    for (Objective o : {Objective::kMcm, Objective::kBm, Objective::kUm,
                        Objective::kMdm}) {
      EXPECT_NEAR(Evaluate(g, m, o), Evaluate(h, mm, o), 1e-12);
    }
  }
}

}  // namespace
}  // namespace matchembed
