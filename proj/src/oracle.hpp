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
#ifndef MATCHEMBED_ORACLE_HPP_
#define MATCHEMBED_ORACLE_HPP_

#include "graph.hpp"

namespace matchembed {

struct OracleResult {
  Matching matching;
  double value = 0.0;
};

inline constexpr int kOracleMaxVertices = 16;

// Exhaustive search over every perfect matching (cross-partition ones only
// for bipartite graphs). Among equal values the lexicographically smallest
// canonical pair list wins. Sentinel edges are ordinary heavy edges here.
OracleResult BruteForceOptimum(const DenseGraph& graph, Objective objective);

}  // namespace matchembed

#endif  // MATCHEMBED_ORACLE_HPP_
