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

#include "oracle.hpp"

#include "error.hpp"
#include "generators.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace matchembed {
namespace {

using testing::Complete;
using testing::Pairs;

TEST(OracleTest, TwoVertices) {
  const DenseGraph g = Complete(2, {{0, 1, 3.5}});
  const OracleResult r = BruteForceOptimum(g, Objective::kMcm);
  EXPECT_EQ(r.matching, Pairs(2, {{0, 1}}));
  EXPECT_EQ(r.value, 3.5);
}

TEST(OracleTest, FourVerticesMcm) {
  const DenseGraph g = Complete(4, {{0, 1, 1}, {2, 3, 1}, {0, 2, 5},
                                    {1, 3, 5}, {0, 3, 5}, {1, 2, 5}});
  const OracleResult r = BruteForceOptimum(g, Objective::kMcm);
  EXPECT_EQ(r.value, 2.0);
  EXPECT_EQ(r.matching, Pairs(4, {{0, 1}, {2, 3}}));
}

TEST(OracleTest, AdversarialLevelFourMcm) {
  const AdversarialInstance inst = GenerateAdversarial(4);
  const OracleResult r = BruteForceOptimum(inst.graph, Objective::kMcm);
  EXPECT_NEAR(r.value, 4.0, 1e-5);
  EXPECT_EQ(r.matching, Pairs(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}));
}

TEST(OracleTest, TiesPickLexicographicallySmallest) {
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) edges.push_back({i, j, 1.0});
  const DenseGraph g = DenseGraph::CompleteWithSentinels(6, edges);
  for (Objective o : {Objective::kMcm, Objective::kBm, Objective::kUm,
                      Objective::kMdm}) {
    EXPECT_EQ(BruteForceOptimum(g, o).matching,
              Pairs(6, {{0, 1}, {2, 3}, {4, 5}}));
  }
}

TEST(OracleTest, BipartiteOnlyCrossPairs) {
  const DenseGraph g = GenerateUniform(8, 4, /*bipartite=*/true);
  const OracleResult r = BruteForceOptimum(g, Objective::kMcm);
  for (const VertexPair& p : r.matching.pairs()) {
    EXPECT_LT(p.u, 4);
    EXPECT_GE(p.v, 4);
  }
}

TEST(OracleTest, TooLarge) {
  const DenseGraph g = GenerateUniform(18, 1);
  try {
    BruteForceOptimum(g, Objective::kMcm);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "instance too large for oracle");
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

// An independent, unpruned enumeration cross-checks the pruned search.
void Enumerate(const DenseGraph& g, std::vector<int>& mate,
               std::vector<VertexPair>& pairs, Objective o, double& best) {
  const int n = g.size();
  int i = 0;
  while (i < n && mate[i] >= 0) ++i;
  if (i == n) {
    best = std::min(best, Evaluate(g, Matching(n, pairs), o));
    return;
  }
  for (int j = i + 1; j < n; ++j) {
    if (mate[j] >= 0 || !g.admissible(i, j)) continue;
    mate[i] = j;
    mate[j] = i;
    pairs.push_back({i, j});
    Enumerate(g, mate, pairs, o, best);
    pairs.pop_back();
    mate[i] = mate[j] = -1;
  }
}

TEST(OracleTest, MatchesUnprunedEnumeration) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 4 + 2 * static_cast<int>(seed % 4);
    const DenseGraph g = GenerateUniform(n, seed, seed % 3 == 0);
    for (Objective o : {Objective::kMcm, Objective::kBm, Objective::kUm,
                        Objective::kMdm}) {
      std::vector<int> mate(n, -1);
      std::vector<VertexPair> pairs;
      double best = std::numeric_limits<double>::infinity();
      Enumerate(g, mate, pairs, o, best);
      const OracleResult r = BruteForceOptimum(g, o);
      EXPECT_EQ(r.value, best) << "seed " << seed;
      EXPECT_EQ(Evaluate(g, r.matching, o), r.value);
    }
  }
}

}  // namespace
}  // namespace matchembed
