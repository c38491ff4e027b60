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

#include "greedy.hpp"

#include <cmath>

#include "exact.hpp"
#include "generators.hpp"
#include "gtest/gtest.h"
#include "kdtree.hpp"
#include "oracle.hpp"
#include "pipeline.hpp"
#include "rng.hpp"
#include "test_util.hpp"

namespace matchembed {
namespace {

using testing::Pairs;

PointSet RandomPoints(int n, int d, std::uint64_t seed, int grid = 0) {
  CounterRng rng(seed);
  std::vector<double> c(static_cast<std::size_t>(n) * d);
  // A coarse grid forces many exactly equal distances.
  for (double& x : c) {
    x = grid > 0 ? static_cast<double>(rng.NextBelow(grid)) : rng.NextDouble();
  }
  return PointSet(n, d, std::move(c));
}

TEST(GreedyTest, TwoVertices) {
  const DenseGraph g = testing::Complete(2, {{0, 1, 0.3}});
  const SolverReport r = GreedyMatch(g, Objective::kMcm);
  EXPECT_EQ(r.matching, Pairs(2, {{0, 1}}));
  EXPECT_EQ(r.value, 0.3);
}

TEST(GreedyTest, AdversarialLevelThreeTrace) {
  const SolverReport r =
      GreedyMatch(GenerateAdversarial(3).graph, Objective::kMcm);
  EXPECT_EQ(r.matching, Pairs(4, {{0, 3}, {1, 2}}));
  EXPECT_NEAR(r.value, 4.0, 1e-5);
}

TEST(GreedyTest, AdversarialRatioSequence) {
  const double expected[] = {2.0, 3.5, 5.75, 9.125, 14.1875, 21.78125};
  double previous = 0.0;
  for (int t = 3; t <= 8; ++t) {
    const DenseGraph g = GenerateAdversarial(t).graph;
    const double ratio =
        GreedyMatch(g, Objective::kMcm).value / BlossomMwpm(g).value;
    EXPECT_NEAR(ratio / expected[t - 3], 1.0, 1e-3) << "t " << t;
    EXPECT_NEAR(ratio, 2.0 * std::pow(1.5, t - 2) - 1.0, 1e-3 * ratio);
    EXPECT_GT(ratio, previous);
    previous = ratio;
  }
}

TEST(GreedyTest, NeverBeatsExact) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const DenseGraph g = GenerateUniform(12, seed, seed % 2 == 1);
    const SolverReport r = GreedyMatch(g, Objective::kMcm);
    EXPECT_TRUE(r.matching.is_perfect());
    EXPECT_GE(r.value, SolveExact(g, Objective::kMcm).value);
    for (Objective o : {Objective::kBm, Objective::kUm, Objective::kMdm})
      EXPECT_GE(GreedyMatch(g, o).value, BruteForceOptimum(g, o).value);
  }
}

TEST(GreedyTest, EqualWeightsMatchExact) {
  std::vector<WeightedEdge> e;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) e.push_back({i, j, 2.0});
  const DenseGraph g = DenseGraph::CompleteWithSentinels(8, e);
  EXPECT_EQ(GreedyMatch(g, Objective::kMcm).value, 8.0);
  EXPECT_EQ(GreedyMatch(g, Objective::kMcm).matching,
            Pairs(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}));
}

TEST(GreedyTest, BipartiteStaysAcross) {
  const DenseGraph g = GenerateUniform(10, 2, true);
  const SolverReport r = GreedyMatch(g, Objective::kMcm);
  for (const VertexPair& p : r.matching.pairs())
    EXPECT_TRUE(g.admissible(p.u, p.v));
}

TEST(GreedyTest, RandomizedTiesAreSeeded) {
  std::vector<WeightedEdge> e;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) e.push_back({i, j, 1.0});
  const DenseGraph g = DenseGraph::CompleteWithSentinels(10, e);
  const TieBreak a{TiePolicy::kRandomized, 7};
  EXPECT_EQ(GreedyMatch(g, Objective::kMcm, a).matching,
            GreedyMatch(g, Objective::kMcm, a).matching);
  bool differs = false;
  for (std::uint64_t s = 0; s < 10 && !differs; ++s) {
    differs = GreedyMatch(g, Objective::kMcm, {TiePolicy::kRandomized, s})
                  .matching != GreedyMatch(g, Objective::kMcm).matching;
  }
  EXPECT_TRUE(differs);
}

TEST(EuclideanGreedyTest, CollinearPairs) {
  const PointSet pts(4, 1, {0.0, 1.0, 10.0, 11.0});
  EXPECT_EQ(EuclideanGreedyMatch(pts), Pairs(4, {{0, 1}, {2, 3}}));
}

TEST(EuclideanGreedyTest, MatchesDenseGreedy) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    CounterRng size_rng(DeriveSeed(seed, {1}));
    const int n = 2 + 2 * static_cast<int>(size_rng.NextBelow(100));
    const int d = seed % 2 == 0 ? 2 : 10;
    const PointSet pts = RandomPoints(n, d, seed);
    const DenseGraph g = BuildSurrogate(pts, false).graph;
    ASSERT_EQ(EuclideanGreedyMatch(pts), GreedyMatch(g, Objective::kMcm).matching)
        << "seed " << seed << " n " << n << " d " << d;
  }
}

TEST(EuclideanGreedyTest, MatchesDenseGreedyUnderTies) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const PointSet pts = RandomPoints(40, seed % 2 == 0 ? 2 : 3, seed, 4);
    const DenseGraph g = BuildSurrogate(pts, false).graph;
    for (TiePolicy policy : {TiePolicy::kByIndex, TiePolicy::kRandomized}) {
      const TieBreak ties{policy, seed};
      ASSERT_EQ(EuclideanGreedyMatch(pts, ties),
                GreedyMatch(g, Objective::kMcm, ties).matching)
          << "seed " << seed;
    }
  }
}

TEST(KdTreeTest, NearestMatchesBruteForce) {
  const PointSet pts = RandomPoints(300, 3, 9);
  KdTree tree(pts, 4);
  CounterRng rng(5);
  for (int step = 0; step < 250; ++step) {
    const int q = static_cast<int>(rng.NextBelow(300));
    if (!tree.alive(q)) continue;
    const KdTree::Neighbor nn = tree.Nearest(q, {});
    int best = -1;
    double best_d = 0.0;
    for (int j = 0; j < 300; ++j) {
      if (j == q || !tree.alive(j)) continue;
      const double dist = Distance(pts[q], pts[j]);
      if (best < 0 || dist < best_d) {
        best = j;
        best_d = dist;
      }
    }
    EXPECT_EQ(nn.distance, best_d);
    EXPECT_EQ(nn.index, best);
    tree.Remove(q);
  }
}

}  // namespace
}  // namespace matchembed
