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

#ifndef MATCHEMBED_GREEDY_HPP_
#define MATCHEMBED_GREEDY_HPP_

#include <cstdint>

#include "graph.hpp"
#include "points.hpp"
#include "rng.hpp"
#include "solver_report.hpp"

namespace matchembed {

enum class TiePolicy { kByIndex, kRandomized };

// Total order used to break equal weights. Both greedy variants rank a pair
// by (weight, key, lower index, higher index); the key is zero under
// kByIndex and a seeded hash of the pair under kRandomized.
struct TieBreak {
  TiePolicy policy = TiePolicy::kByIndex;
  std::uint64_t seed = 0;

  std::uint64_t Key(int lo, int hi) const {
    if (policy == TiePolicy::kByIndex) return 0;
    return DeriveSeed(seed, {static_cast<std::uint64_t>(lo),
                             static_cast<std::uint64_t>(hi)});
  }
};

// Repeatedly adds the lightest edge whose endpoints are both exposed. The
// construction ignores the objective; `objective` only selects how the
// result is valued.
SolverReport GreedyMatch(const DenseGraph& graph, Objective objective,
                         TieBreak ties = {});

// Same matching as GreedyMatch on the points' Euclidean distance graph, but
// driven by a k-d tree over exposed points and a lazily revalidated heap of
// nearest-neighbour candidates instead of sorting all pairs.
Matching EuclideanGreedyMatch(const PointSet& points, TieBreak ties = {});

}  // namespace matchembed

#endif  // MATCHEMBED_GREEDY_HPP_
