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

#include <algorithm>
#include <queue>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "kdtree.hpp"

namespace matchembed {
namespace {

struct Candidate {
  double weight;
  std::uint64_t key;
  int lo;
  int hi;

  friend bool operator<(const Candidate& a, const Candidate& b) {
    return std::tie(a.weight, a.key, a.lo, a.hi) <
           std::tie(b.weight, b.key, b.lo, b.hi);
  }
  friend bool operator>(const Candidate& a, const Candidate& b) {
    return b < a;
  }
};

}  // namespace

SolverReport GreedyMatch(const DenseGraph& graph, Objective objective,
                         TieBreak ties) {
  const int n = graph.size();
  Require(n % 2 == 0, "odd vertex count");
  Stopwatch watch;
  std::vector<Candidate> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (graph.admissible(i, j)) {
        edges.push_back({graph.weight(i, j), ties.Key(i, j), i, j});
      }
    }
  }
  std::sort(edges.begin(), edges.end());

  std::vector<char> exposed(n, 1);
  std::vector<VertexPair> pairs;
  pairs.reserve(n / 2);
  std::int64_t scanned = 0;
  for (const Candidate& e : edges) {
    ++scanned;
    if (!exposed[e.lo] || !exposed[e.hi]) continue;
    exposed[e.lo] = exposed[e.hi] = 0;
    pairs.push_back({e.lo, e.hi});
    if (2 * pairs.size() == static_cast<std::size_t>(n)) break;
  }

  SolverReport report;
  report.matching = Matching(n, std::move(pairs));
  report.value = Evaluate(graph, report.matching, objective);
  report.uses_sentinel = UsesSentinel(graph, report.matching);
  report.iterations = scanned;
  report.wall_time = watch.Elapsed();
  return report;
}

Matching EuclideanGreedyMatch(const PointSet& points, TieBreak ties) {
  const int n = points.count;
  Require(n % 2 == 0, "odd point count");
  for (double c : points.coords) {
    Require(std::isfinite(c), "point coordinates must be finite");
  }
  KdTree tree(points);

  // Entry for point p: its nearest exposed partner at push time. The partner
  // set only shrinks, so an entry whose two endpoints are still exposed is
  // exactly p's current best pair, and the heap minimum among such entries
  // is the globally lightest exposed pair.
  struct Entry {
    Candidate pair;
    int owner;
  };
  auto cmp = [](const Entry& a, const Entry& b) { return a.pair > b.pair; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);

  auto push_nearest = [&](int p) {
    const KdTree::Neighbor nb = tree.Nearest(p, ties);
    if (nb.index < 0) return;
    const int lo = std::min(p, nb.index);
    const int hi = std::max(p, nb.index);
    heap.push({{nb.distance, ties.Key(lo, hi), lo, hi}, p});
  };
  for (int p = 0; p < n; ++p) push_nearest(p);

  std::vector<VertexPair> pairs;
  pairs.reserve(n / 2);
  while (!heap.empty() && tree.live_count() > 0) {
    const Entry top = heap.top();
    heap.pop();
    const int lo = top.pair.lo;
    const int hi = top.pair.hi;
    if (tree.alive(lo) && tree.alive(hi)) {
      pairs.push_back({lo, hi});
      tree.Remove(lo);
      tree.Remove(hi);
    } else if (tree.alive(top.owner)) {
      push_nearest(top.owner);
    }
  }
  return Matching(n, std::move(pairs));
}

}  // namespace matchembed
