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

#include "exact.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"
#include "generators.hpp"
#include "gtest/gtest.h"
#include "oracle.hpp"
#include "rng.hpp"
#include "test_util.hpp"

namespace matchembed {
namespace {

using testing::Complete;
using testing::Pairs;

constexpr Objective kAll[] = {Objective::kMcm, Objective::kBm,
                              Objective::kUm, Objective::kMdm};

DenseGraph Assignment(double a, double b, double c, double d) {
  return Complete(4, {{0, 2, a}, {0, 3, b}, {1, 2, c}, {1, 3, d}}, true);
}

TEST(HungarianTest, TwoByTwo) {
  EXPECT_EQ(HungarianMcm(Assignment(1, 2, 2, 1)).value, 2.0);
  EXPECT_EQ(HungarianMcm(Assignment(1, 2, 2, 1)).matching,
            Pairs(4, {{0, 2}, {1, 3}}));
  EXPECT_EQ(HungarianMcm(Assignment(5, 5, 5, 5)).value, 10.0);
}

TEST(HungarianTest, RejectsGeneralGraph) {
  try {
    HungarianMcm(GenerateUniform(4, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "hungarian requires bipartition");
  }
}

TEST(HungarianTest, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const DenseGraph g = GenerateUniform(8, seed, true);
    EXPECT_EQ(HungarianMcm(g).value,
              BruteForceOptimum(g, Objective::kMcm).value);
  }
}

TEST(BlossomTest, FourCycle) {
  const DenseGraph g =
      Complete(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {3, 0, 2}});
  const SolverReport r = BlossomMwpm(g);
  EXPECT_EQ(r.value, 2.0);
  EXPECT_EQ(r.matching, Pairs(4, {{0, 1}, {2, 3}}));
  EXPECT_FALSE(r.uses_sentinel);
}

TEST(BlossomTest, TrianglePlusPendant) {
  const DenseGraph g = Complete(4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1},
                                    {0, 3, 10}, {1, 3, 10}, {2, 3, 1}});
  const SolverReport r = BlossomMwpm(g);
  EXPECT_EQ(r.value, 2.0);
  EXPECT_EQ(r.matching, Pairs(4, {{0, 1}, {2, 3}}));
}

TEST(BlossomTest, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 4 + 2 * static_cast<int>(seed % 7);
    const DenseGraph g = GenerateUniform(n, seed);
    EXPECT_EQ(BlossomMwpm(g).value,
              BruteForceOptimum(g, Objective::kMcm).value)
        << "seed " << seed;
  }
}

TEST(BlossomTest, SparseInputFallsBackToSentinels) {
  // A path 0-1-2-3 plus sentinels; the only genuine perfect matching is
  // {(0,1),(2,3)}.
  const std::vector<WeightedEdge> e = {{0, 1, 3}, {1, 2, 1}, {2, 3, 3}};
  const DenseGraph g = DenseGraph::CompleteWithSentinels(4, e);
  const SolverReport r = BlossomMwpm(g);
  EXPECT_EQ(r.value, 6.0);
  EXPECT_FALSE(r.uses_sentinel);
  // Two isolated edges in a 6-vertex graph force a sentinel.
  const std::vector<WeightedEdge> f = {{0, 1, 1}, {2, 3, 1}};
  const SolverReport s =
      BlossomMwpm(DenseGraph::CompleteWithSentinels(6, f));
  EXPECT_TRUE(s.uses_sentinel);
}

TEST(BlossomTest, PermutationInvariance) {
  const DenseGraph g = GenerateLomax({2.0, 1.0, 30}, 5);
  const double base = BlossomMwpm(g).value;
  std::vector<int> perm(30);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::uint64_t k = 0; k < 200; ++k) {
    CounterRng rng(DeriveSeed(17, {k}));
    for (int i = 29; i > 0; --i) std::swap(perm[i], perm[rng.NextBelow(i + 1)]);
    EXPECT_NEAR(BlossomMwpm(g.Permuted(perm)).value, base, 1e-9 * base);
  }
}

TEST(BlossomTest, LargeInstanceAgreesWithHungarian) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const DenseGraph g = GenerateLomax({2.0, 1.0, 100, true}, seed);
    EXPECT_NEAR(BlossomMwpm(g).value, HungarianMcm(g).value,
                1e-9 * HungarianMcm(g).value);
  }
}

TEST(CardinalityTest, Window) {
  const DenseGraph g = GenerateUniform(6, 3);
  EXPECT_EQ(MaxCardinalityMatching(g, {2.0, 3.0}).size(), 0u);
  EXPECT_TRUE(MaxCardinalityMatching(g, {0.0, 1.0}).is_perfect());
  const std::vector<WeightedEdge> path = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}};
  const DenseGraph p = DenseGraph::CompleteWithSentinels(4, path);
  const Matching m = MaxCardinalityMatching(p, {0.0, 1.0});
  EXPECT_EQ(m, Pairs(4, {{0, 1}, {2, 3}}));
}

TEST(CardinalityTest, OddCycleNeedsBlossom) {
  // Two triangles joined by one edge: perfect only via the bridge.
  const std::vector<WeightedEdge> e = {{0, 1, 1}, {1, 2, 1}, {0, 2, 1},
                                       {3, 4, 1}, {4, 5, 1}, {3, 5, 1},
                                       {2, 3, 1}};
  const DenseGraph g = DenseGraph::CompleteWithSentinels(6, e);
  const Matching m = MaxCardinalityMatching(g, {1.0, 1.0});
  EXPECT_TRUE(m.is_perfect());
  EXPECT_FALSE(UsesSentinel(g, m));
}

TEST(CardinalityTest, WarmStartGivesSameSize) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const DenseGraph g = GenerateUniform(12, seed, seed % 2 == 1);
    const Matching small = MaxCardinalityMatching(g, {0.0, 0.3});
    const Matching cold = MaxCardinalityMatching(g, {0.0, 0.6});
    const std::vector<int> mates = small.Mates();
    const Matching warm = MaxCardinalityMatching(g, {0.0, 0.6}, mates);
    EXPECT_EQ(cold.size(), warm.size());
  }
}

TEST(BottleneckTest, Examples) {
  EXPECT_EQ(BottleneckMatching(Complete(2, {{0, 1, 4}})).value, 4.0);
  const DenseGraph g = Complete(4, {{0, 1, 1}, {2, 3, 9}, {0, 2, 5},
                                    {0, 3, 5}, {1, 2, 5}, {1, 3, 5}});
  EXPECT_EQ(BottleneckMatching(g).value, 5.0);
  EXPECT_NEAR(BottleneckMatching(GenerateAdversarial(4).graph).value, 1.0,
              1e-12);
}

TEST(UniformMatchingTest, Examples) {
  std::vector<WeightedEdge> equal;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) equal.push_back({i, j, 2.5});
  EXPECT_EQ(UniformMatching(DenseGraph::CompleteWithSentinels(6, equal)).value,
            0.0);
  const DenseGraph g = Complete(4, {{0, 1, 1}, {2, 3, 10}, {0, 2, 5},
                                    {1, 3, 6}, {0, 3, 5}, {1, 2, 6}});
  EXPECT_EQ(UniformMatching(g).value, 1.0);
}

TEST(MinDeviationTest, Examples) {
  std::vector<WeightedEdge> equal;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) equal.push_back({i, j, 3.0});
  EXPECT_EQ(
      MinDeviationMatching(DenseGraph::CompleteWithSentinels(4, equal)).value,
      -1.5);
  const DenseGraph g = Complete(4, {{0, 1, 1}, {2, 3, 2}, {0, 2, 10},
                                    {0, 3, 10}, {1, 2, 10}, {1, 3, 10}});
  // {(0,1),(2,3)} scores 3/4 - 1 = -0.25, but the two heavy matchings score
  // 20/4 - 10 = -5 and win.
  EXPECT_EQ(Evaluate(g, Pairs(4, {{0, 1}, {2, 3}}), Objective::kMdm), -0.25);
  const SolverReport r = MinDeviationMatching(g);
  EXPECT_EQ(r.value, -5.0);
  EXPECT_EQ(r.matching, Pairs(4, {{0, 2}, {1, 3}}));
  EXPECT_EQ(BruteForceOptimum(g, Objective::kMdm).value, -5.0);
}

TEST(MinCostAboveTest, InfeasibleFloor) {
  const DenseGraph g = Complete(4, {{0, 1, 1}, {2, 3, 2}, {0, 2, 3},
                                    {0, 3, 3}, {1, 2, 3}, {1, 3, 3}});
  EXPECT_FALSE(MinCostPerfectAbove(g, 3.5).has_value());
  ASSERT_TRUE(MinCostPerfectAbove(g, 3.0).has_value());
}

// Oracle equivalence on every objective and graph kind.
TEST(SolveExactTest, OracleEquivalenceUniform) {
  for (bool bipartite : {false, true}) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const int n = 4 + 2 * static_cast<int>(seed % 4);
      const DenseGraph g = GenerateUniform(n, seed, bipartite);
      for (Objective o : kAll) {
        const SolverReport r = SolveExact(g, o);
        ASSERT_EQ(r.value, BruteForceOptimum(g, o).value)
            << ObjectiveName(o) << " seed " << seed << " bip " << bipartite;
        ASSERT_EQ(r.value, Evaluate(g, r.matching, o));
      }
    }
  }
}

TEST(SolveExactTest, OracleEquivalenceAdversarialAndLomax) {
  for (Objective o : kAll) {
    for (int t = 2; t <= 5; ++t) {
      const DenseGraph g = GenerateAdversarial(t).graph;
      EXPECT_EQ(SolveExact(g, o).value, BruteForceOptimum(g, o).value);
    }
    for (double alpha : {2.0, 50.0}) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        for (bool bip : {false, true}) {
          const DenseGraph g = GenerateLomax({alpha, 1.0, 12, bip}, seed);
          EXPECT_EQ(SolveExact(g, o).value, BruteForceOptimum(g, o).value);
        }
      }
    }
  }
}

TEST(SolveExactTest, OracleEquivalenceWithSentinels) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 6 + 2 * static_cast<int>(seed % 3);
    const DenseGraph full = GenerateUniform(n, seed, seed % 2 == 0);
    std::vector<WeightedEdge> kept;
    CounterRng rng(seed);
    for (const WeightedEdge& e : full.GenuineEdges())
      if (rng.NextDouble() < 0.4) kept.push_back(e);
    const DenseGraph g =
        DenseGraph::CompleteWithSentinels(n, kept, full.bipartite());
    for (Objective o : kAll) {
      const SolverReport r = SolveExact(g, o);
      EXPECT_EQ(r.value, BruteForceOptimum(g, o).value)
          << ObjectiveName(o) << " seed " << seed;
      EXPECT_EQ(r.uses_sentinel, UsesSentinel(g, r.matching));
    }
  }
}

TEST(SolveExactTest, ValuesAreInputWeights) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const DenseGraph g = GenerateUniform(10, seed);
    std::vector<double> w;
    for (const WeightedEdge& e : g.GenuineEdges()) w.push_back(e.weight);
    const double bm = BottleneckMatching(g).value;
    EXPECT_NE(std::find(w.begin(), w.end(), bm), w.end());
    const SolverReport um = UniformMatching(g);
    double lo = 1e300, hi = -1e300;
    for (const VertexPair& p : um.matching.pairs()) {
      lo = std::min(lo, g.weight(p.u, p.v));
      hi = std::max(hi, g.weight(p.u, p.v));
    }
    EXPECT_EQ(um.value, hi - lo);
  }
}

DenseGraph Transform(const DenseGraph& g, double scale, double shift) {
  std::vector<WeightedEdge> e = g.GenuineEdges();
  for (WeightedEdge& x : e) x.weight = x.weight * scale + shift;
  return DenseGraph::CompleteWithSentinels(g.size(), e, g.bipartite());
}

TEST(SolveExactTest, ShiftMonotonicity) {
  const double c = 0.5;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 10;
    const DenseGraph g = GenerateUniform(n, seed, seed % 2 == 1);
    const DenseGraph h = Transform(g, 1.0, c);
    EXPECT_NEAR(SolveExact(h, Objective::kMcm).value,
                SolveExact(g, Objective::kMcm).value + c * n / 2, 1e-9);
    EXPECT_NEAR(SolveExact(h, Objective::kBm).value,
                SolveExact(g, Objective::kBm).value + c, 1e-12);
    EXPECT_NEAR(SolveExact(h, Objective::kUm).value,
                SolveExact(g, Objective::kUm).value, 1e-12);
    EXPECT_NEAR(SolveExact(h, Objective::kMdm).value,
                SolveExact(g, Objective::kMdm).value + c * (0.5 - 1.0), 1e-9);
  }
}

TEST(SolveExactTest, ScalingInvariance) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const DenseGraph g = GenerateUniform(10, seed);
    const DenseGraph h = Transform(g, 4.0, 0.0);  // exact in binary
    for (Objective o : kAll) {
      const SolverReport a = SolveExact(g, o);
      const SolverReport b = SolveExact(h, o);
      EXPECT_EQ(b.value, 4.0 * a.value);
      EXPECT_EQ(Evaluate(g, b.matching, o), a.value);
    }
  }
}

}  // namespace
}  // namespace matchembed
