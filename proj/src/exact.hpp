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

// Exact solvers for the four perfect-matching objectives.
//
// Sentinel edges take part as ordinary heavy edges, so every solver returns
// a perfect matching; UsesSentinel() on the result tells whether a genuine
// one exists. Bipartite graphs only ever match across the partition.

#ifndef MATCHEMBED_EXACT_HPP_
#define MATCHEMBED_EXACT_HPP_

#include <optional>
#include <span>

#include "graph.hpp"
#include "solver_report.hpp"

namespace matchembed {

// O(n^3) shortest-augmenting-path Hungarian method with potentials.
SolverReport HungarianMcm(const DenseGraph& graph);

// Minimum-cost perfect matching on any graph via the weighted blossom
// algorithm; the dual certificate is checked before returning.
SolverReport BlossomMwpm(const DenseGraph& graph);

struct WeightWindow {
  double lo = 0.0;
  double hi = 0.0;
  bool include_sentinels = false;

  bool Contains(const DenseGraph& g, int i, int j) const {
    if (!include_sentinels && g.is_sentinel(i, j)) return false;
    const double w = g.weight(i, j);
    return w >= lo && w <= hi;
  }
};

// Maximum-cardinality matching of the admissible edges with weight in the
// closed window. Hopcroft-Karp on bipartite graphs, Edmonds otherwise.
// A warm start (mates, -1 = exposed) is trimmed to the window and extended.
Matching MaxCardinalityMatching(const DenseGraph& graph,
                                const WeightWindow& window,
                                std::span<const int> warm_start = {});

SolverReport BottleneckMatching(const DenseGraph& graph);
SolverReport UniformMatching(const DenseGraph& graph);
SolverReport MinDeviationMatching(const DenseGraph& graph);

// Minimum-cost perfect matching restricted to edges with weight >= floor;
// nullopt when that subgraph has no perfect matching.
std::optional<Matching> MinCostPerfectAbove(const DenseGraph& graph,
                                            double floor);

// MCM dispatches to Hungarian (bipartite) or blossom (general).
SolverReport SolveExact(const DenseGraph& graph, Objective objective);

}  // namespace matchembed

#endif  // MATCHEMBED_EXACT_HPP_
