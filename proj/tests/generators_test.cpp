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

#include "generators.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "greedy.hpp"
#include "gtest/gtest.h"
#include "oracle.hpp"

namespace matchembed {
namespace {

TEST(AdversarialTest, LevelTwo) {
  const AdversarialInstance inst = GenerateAdversarial(2);
  EXPECT_EQ(inst.positions, (std::vector<double>{0.0, 1.0}));
  EXPECT_EQ(inst.graph.size(), 2);
  EXPECT_EQ(inst.graph.weight(0, 1), 1.0);
}

TEST(AdversarialTest, LevelThree) {
  const double eps = 1e-6;
  const AdversarialInstance inst = GenerateAdversarial(3, eps);
  ASSERT_EQ(inst.positions.size(), 4u);
  EXPECT_EQ(inst.positions[0], 0.0);
  EXPECT_EQ(inst.positions[1], 1.0);
  EXPECT_DOUBLE_EQ(inst.positions[2], 2 - eps);
  EXPECT_DOUBLE_EQ(inst.positions[3], 3 - eps);
  EXPECT_NEAR(BruteForceOptimum(inst.graph, Objective::kMcm).value, 2.0, 1e-12);
  const SolverReport greedy = GreedyMatch(inst.graph, Objective::kMcm);
  EXPECT_NEAR(greedy.value, 4.0, 1e-5);
  EXPECT_NEAR(greedy.value / 2.0, 2.0, 1e-5);
}

TEST(AdversarialTest, LevelFiveSpan) {
  const AdversarialInstance inst = GenerateAdversarial(5);
  EXPECT_EQ(inst.graph.size(), 16);
  EXPECT_NEAR(inst.span, 27.0, 1e-4);
  EXPECT_EQ(inst.graph.weight(0, 15), inst.span);
}

TEST(AdversarialTest, SizesAndSpans) {
  for (int t = 2; t <= 10; ++t) {
    const double eps = 1e-6;
    const AdversarialInstance inst = GenerateAdversarial(t, eps);
    EXPECT_EQ(inst.positions.size(), std::size_t{1} << (t - 1));
    EXPECT_TRUE(std::is_sorted(inst.positions.begin(), inst.positions.end()));
    EXPECT_DOUBLE_EQ(inst.span, std::pow(3 - eps, t - 2));
  }
}

TEST(AdversarialTest, LineStructure) {
  const AdversarialInstance inst = GenerateAdversarial(5);
  const DenseGraph& g = inst.graph;
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      for (int k = j + 1; k < g.size(); ++k)
        EXPECT_NEAR(g.weight(i, k), g.weight(i, j) + g.weight(j, k),
                    1e-12 * inst.span);
}

TEST(AdversarialTest, Errors) {
  EXPECT_THROW(GenerateAdversarial(1), Error);
  EXPECT_THROW(GenerateAdversarial(4, 0.0), Error);
  EXPECT_THROW(GenerateAdversarial(4, 0.01), Error);
  EXPECT_THROW(GenerateAdversarial(4, -1e-6), Error);
}

TEST(LomaxTest, InverseCdf) {
  for (double a : {2.0, 3.0, 50.0}) EXPECT_EQ(LomaxInverseCdf(0.0, a, 1.0), 0.0);
  EXPECT_NEAR(LomaxInverseCdf(0.5, 2.0, 1.0), 0.41421356237309515, 1e-15);
  EXPECT_NEAR(LomaxCdf(LomaxInverseCdf(0.3, 3.0, 2.0), 3.0, 2.0), 0.3, 1e-14);
}

TEST(LomaxTest, ConfigValidation) {
  EXPECT_THROW(GenerateLomax({0.0, 1.0, 10, false}, 1), Error);
  EXPECT_THROW(GenerateLomax({2.0, -1.0, 10, false}, 1), Error);
  EXPECT_THROW(GenerateLomax({2.0, 1.0, 9, false}, 1), Error);
}

std::vector<double> Weights(const DenseGraph& g) {
  std::vector<double> w;
  for (const WeightedEdge& e : g.GenuineEdges()) w.push_back(e.weight);
  return w;
}

TEST(LomaxTest, SampleMeanWithinThreeStandardErrors) {
  // alpha = 2 has infinite variance, so the standard error is estimated
  // from the sample itself.
  const std::vector<double> w = Weights(GenerateLomax({2.0, 1.0, 100}, 2026));
  ASSERT_EQ(w.size(), 4950u);
  double mean = 0.0;
  for (double x : w) mean += x;
  mean /= w.size();
  double var = 0.0;
  for (double x : w) var += (x - mean) * (x - mean);
  var /= w.size() - 1;
  EXPECT_LT(std::abs(mean - 1.0), 3.0 * std::sqrt(var / w.size()));
}

TEST(LomaxTest, KolmogorovSmirnov) {
  // Critical value for significance 0.001: sqrt(-ln(0.0005) / 2) / sqrt(N).
  for (double alpha : {2.0, 3.0, 5.0, 10.0, 50.0}) {
    std::vector<double> w = Weights(GenerateLomax({alpha, 1.0, 100}, 77));
    std::sort(w.begin(), w.end());
    const double n = static_cast<double>(w.size());
    double d = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const double f = LomaxCdf(w[i], alpha, 1.0);
      d = std::max({d, (i + 1) / n - f, f - i / n});
    }
    EXPECT_LT(d, std::sqrt(-std::log(0.0005) / 2.0) / std::sqrt(n))
        << "alpha " << alpha;
  }
}

TEST(LomaxTest, BipartiteOnlyCross) {
  const DenseGraph g = GenerateLomax({2.0, 1.0, 10, true}, 3);
  for (const WeightedEdge& e : g.GenuineEdges()) {
    EXPECT_LT(e.u, 5);
    EXPECT_GE(e.v, 5);
  }
  EXPECT_EQ(g.GenuineEdges().size(), 25u);
}

TEST(UniformTest, Basics) {
  const DenseGraph g = GenerateUniform(2, 5);
  EXPECT_GE(g.weight(0, 1), 0.0);
  EXPECT_LT(g.weight(0, 1), 1.0);
  EXPECT_EQ(GenerateUniform(12, 99), GenerateUniform(12, 99));
  EXPECT_NE(GenerateUniform(12, 99), GenerateUniform(12, 100));
  EXPECT_THROW(GenerateUniform(7, 1), Error);
}

TEST(GeneratorTest, Reproducible) {
  EXPECT_EQ(GenerateLomax({3.0, 1.0, 40}, 11), GenerateLomax({3.0, 1.0, 40}, 11));
  EXPECT_EQ(GenerateAdversarial(7).graph, GenerateAdversarial(7).graph);
}

}  // namespace
}  // namespace matchembed
