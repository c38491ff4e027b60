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
#include <limits>
#include <vector>

#include "blossom.hpp"
#include "cardinality.hpp"
#include "error.hpp"

namespace matchembed {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

SolverReport Finish(const DenseGraph& graph, Matching matching,
                    Objective objective, std::int64_t iterations,
                    const Stopwatch& watch) {
  SolverReport report;
  report.value = Evaluate(graph, matching, objective);
  report.uses_sentinel = UsesSentinel(graph, matching);
  report.matching = std::move(matching);
  report.iterations = iterations;
  report.wall_time = watch.Elapsed();
  return report;
}

// Distinct weights of admissible edges (sentinels included), ascending.
std::vector<double> DistinctWeights(const DenseGraph& graph) {
  std::vector<double> w;
  const int n = graph.size();
  w.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (graph.admissible(i, j)) w.push_back(graph.weight(i, j));
    }
  }
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

// Row i of the cost matrix is left vertex i, column j is right vertex
// half + j. Costs of +inf mark forbidden edges. Returns nullopt when no
// perfect matching avoids forbidden edges.
template <typename CostFn>
std::optional<Matching> Hungarian(const DenseGraph& graph, CostFn cost,
                                  std::int64_t* iterations) {
  const int h = graph.half();
  std::vector<double> u(h + 1, 0.0);
  std::vector<double> v(h + 1, 0.0);
  std::vector<int> p(h + 1, 0);
  std::vector<int> way(h + 1, 0);
  std::vector<double> minv(h + 1);
  std::vector<char> used(h + 1);
  for (int i = 1; i <= h; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      double delta = kInf;
      int j1 = -1;
      for (int j = 1; j <= h; ++j) {
        if (used[j]) continue;
        const double c = cost(i0 - 1, j - 1);
        if (c != kInf) {
          const double cur = c - u[i0] - v[j];
          if (cur < minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (j1 < 0) return std::nullopt;
      for (int j = 0; j <= h; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
      if (iterations) ++*iterations;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<VertexPair> pairs;
  pairs.reserve(h);
  for (int j = 1; j <= h; ++j) pairs.push_back({p[j] - 1, h + j - 1});
  return Matching(graph.size(), std::move(pairs));
}

std::optional<Matching> BlossomMinCost(const DenseGraph& graph, double floor,
                                       std::int64_t* iterations) {
  const int n = graph.size();
  std::vector<BlossomEdge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!graph.admissible(i, j)) continue;
      const double w = graph.weight(i, j);
      // Negation is exact, so maximising -w ranks matchings exactly by w.
      if (w >= floor) edges.push_back({i, j, -w});
    }
  }
  BlossomResult result = MaxWeightMatching(n, edges, /*max_cardinality=*/true);
  if (iterations) *iterations += result.stages;
  if (std::find(result.mate.begin(), result.mate.end(), -1) !=
      result.mate.end()) {
    return std::nullopt;
  }
  return Matching::FromMates(result.mate);
}

bool IsPerfect(std::span<const int> mate) {
  return std::find(mate.begin(), mate.end(), -1) == mate.end();
}

std::vector<int> WindowMates(const DenseGraph& graph, double lo, double hi,
                             std::span<const int> warm) {
  return MaxCardinalityMatching(graph, {lo, hi, /*include_sentinels=*/true},
                                warm)
      .Mates();
}

}  // namespace

SolverReport HungarianMcm(const DenseGraph& graph) {
  Require(graph.bipartite(), "hungarian requires bipartition");
  Stopwatch watch;
  std::int64_t iterations = 0;
  std::optional<Matching> m = Hungarian(
      graph, [&](int i, int j) { return graph.weight(i, graph.half() + j); },
      &iterations);
  Require(m.has_value(), "hungarian found no perfect matching",
          ErrorCode::kRuntime);
  return Finish(graph, std::move(*m), Objective::kMcm, iterations, watch);
}

SolverReport BlossomMwpm(const DenseGraph& graph) {
  Require(graph.size() % 2 == 0, "odd vertex count");
  Stopwatch watch;
  std::int64_t iterations = 0;
  std::optional<Matching> m = BlossomMinCost(graph, -kInf, &iterations);
  Require(m.has_value(), "blossom found no perfect matching",
          ErrorCode::kRuntime);
  return Finish(graph, std::move(*m), Objective::kMcm, iterations, watch);
}

Matching MaxCardinalityMatching(const DenseGraph& graph,
                                const WeightWindow& window,
                                std::span<const int> warm_start) {
  const int n = graph.size();
  Adjacency adj(n);
  if (window.lo <= window.hi) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (graph.admissible(i, j) && window.Contains(graph, i, j)) {
          adj[i].push_back(j);
        }
      }
    }
  }
  std::vector<int> mate(n, -1);
  if (!warm_start.empty()) {
    Require(static_cast<int>(warm_start.size()) == n,
            "warm start size mismatch");
    for (int i = 0; i < n; ++i) {
      const int j = warm_start[i];
      if (j >= 0 && warm_start[j] == i && graph.admissible(i, j) &&
          window.lo <= window.hi && window.Contains(graph, i, j)) {
        mate[i] = j;
      }
    }
  }
  if (graph.bipartite()) {
    HopcroftKarp(adj, graph.half(), mate);
  } else {
    EdmondsCardinality(adj, mate);
  }
  return Matching::FromMates(mate);
}

SolverReport BottleneckMatching(const DenseGraph& graph) {
  Require(graph.size() % 2 == 0, "odd vertex count");
  Stopwatch watch;
  const std::vector<double> w = DistinctWeights(graph);
  // Smallest index whose prefix {weight <= w[k]} has a perfect matching; the
  // last index always does because the graph is complete.
  std::size_t lo = 0;
  std::size_t hi = w.size() - 1;
  std::int64_t probes = 0;
  std::vector<int> best = WindowMates(graph, -kInf, w[hi], {});
  ++probes;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    std::vector<int> mate = WindowMates(graph, -kInf, w[mid], {});
    ++probes;
    if (IsPerfect(mate)) {
      hi = mid;
      best = std::move(mate);
    } else {
      lo = mid + 1;
    }
  }
  return Finish(graph, Matching::FromMates(best), Objective::kBm, probes,
                watch);
}

SolverReport UniformMatching(const DenseGraph& graph) {
  Require(graph.size() % 2 == 0, "odd vertex count");
  Stopwatch watch;
  const std::vector<double> w = DistinctWeights(graph);
  const std::size_t k = w.size();
  std::vector<int> mate(graph.size(), -1);
  std::vector<int> best;
  double best_width = kInf;
  std::int64_t probes = 0;
  std::size_t j = 0;
  // Two pointers: the smallest feasible upper end never moves left as the
  // lower end advances, and the matching found so far is reused because
  // only edges below the new lower end leave the window.
  for (std::size_t i = 0; i < k; ++i) {
    j = std::max(j, i);
    bool feasible = false;
    while (j < k) {
      mate = WindowMates(graph, w[i], w[j], mate);
      ++probes;
      if (IsPerfect(mate)) {
        feasible = true;
        break;
      }
      ++j;
    }
    if (!feasible) break;
    const double width = w[j] - w[i];
    if (width < best_width) {
      best_width = width;
      best = mate;
    }
  }
  return Finish(graph, Matching::FromMates(best), Objective::kUm, probes,
                watch);
}

std::optional<Matching> MinCostPerfectAbove(const DenseGraph& graph,
                                            double floor) {
  if (graph.bipartite()) {
    return Hungarian(
        graph,
        [&](int i, int j) {
          const double c = graph.weight(i, graph.half() + j);
          return c >= floor ? c : kInf;
        },
        nullptr);
  }
  return BlossomMinCost(graph, floor, nullptr);
}

// For a candidate minimum w0, the cheapest perfect matching using only edges
// of weight >= w0 scores cost/n - w0 or better under the true objective. The
// candidate equal to an optimal matching's own minimum reproduces at least
// that optimum, and every candidate's witness is a feasible matching, so the
// best true score over all witnesses is the optimum.
SolverReport MinDeviationMatching(const DenseGraph& graph) {
  Require(graph.size() % 2 == 0, "odd vertex count");
  Stopwatch watch;
  const std::vector<double> w = DistinctWeights(graph);

  // Feasibility of {weight >= w[k]} is monotone in k; find the last feasible.
  std::size_t lo = 0;
  std::size_t hi = w.size() - 1;
  std::int64_t iterations = 0;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    ++iterations;
    if (IsPerfect(WindowMates(graph, w[mid], kInf, {}))) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const std::size_t last = lo;

  std::optional<Matching> best;
  double best_value = kInf;
  for (std::size_t c = 0; c <= last; ++c) {
    std::optional<Matching> m = MinCostPerfectAbove(graph, w[c]);
    ++iterations;
    if (!m) continue;
    const double value = Evaluate(graph, *m, Objective::kMdm);
    if (value < best_value) {
      best_value = value;
      best = std::move(m);
    }
  }
  Require(best.has_value(), "no perfect matching found", ErrorCode::kRuntime);
  return Finish(graph, std::move(*best), Objective::kMdm, iterations, watch);
}

SolverReport SolveExact(const DenseGraph& graph, Objective objective) {
  switch (objective) {
    case Objective::kMcm:
      return graph.bipartite() ? HungarianMcm(graph) : BlossomMwpm(graph);
    case Objective::kBm: return BottleneckMatching(graph);
    case Objective::kUm: return UniformMatching(graph);
    case Objective::kMdm: return MinDeviationMatching(graph);
  }
  Fail(ErrorCode::kInvalidArgument, "unknown objective");
}

}  // namespace matchembed
