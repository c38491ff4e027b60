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

#include <algorithm>
#include <limits>
#include <vector>

#include "error.hpp"

namespace matchembed {
namespace {

// Pairs are appended in increasing order of their lower endpoint, which is
// exactly the canonical order Evaluate() sums in, so the running sum here is
// bit-identical to the final evaluation. Every objective's partial value is
// non-decreasing as edges are added (weights are non-negative), which makes
// "partial >= best" a safe prune.
class Enumerator {
 public:
  Enumerator(const DenseGraph& graph, Objective objective)
      : g_(graph),
        objective_(objective),
        n_(graph.size()),
        mate_(static_cast<std::size_t>(n_), -1) {}

  void Run() { Recurse(0, 0.0, 0.0, 0.0); }
  const std::vector<VertexPair>& best() const { return best_; }

 private:
  double Score(double sum, double max, double min) const {
    switch (objective_) {
      case Objective::kMcm: return sum;
      case Objective::kBm: return max;
      case Objective::kUm: return max - min;
      case Objective::kMdm: return sum / n_ - min;
    }
    return sum;
  }

  void Recurse(int depth, double sum, double max, double min) {
    int i = 0;
    while (i < n_ && mate_[i] >= 0) ++i;
    if (i == n_) {
      const double score = Score(sum, max, min);
      if (score < best_score_) {
        best_score_ = score;
        best_ = current_;
      }
      return;
    }
    for (int j = i + 1; j < n_; ++j) {
      if (mate_[j] >= 0 || !g_.admissible(i, j)) continue;
      const double w = g_.weight(i, j);
      const double nsum = sum + w;
      const double nmax = depth == 0 ? w : std::max(max, w);
      const double nmin = depth == 0 ? w : std::min(min, w);
      if (Score(nsum, nmax, nmin) >= best_score_) continue;
      mate_[i] = j;
      mate_[j] = i;
      current_.push_back({i, j});
      Recurse(depth + 1, nsum, nmax, nmin);
      current_.pop_back();
      mate_[i] = mate_[j] = -1;
    }
  }

  const DenseGraph& g_;
  Objective objective_;
  int n_;
  std::vector<int> mate_;
  std::vector<VertexPair> current_;
  std::vector<VertexPair> best_;
  double best_score_ = std::numeric_limits<double>::infinity();
};

}  // namespace

OracleResult BruteForceOptimum(const DenseGraph& graph, Objective objective) {
  Require(graph.size() <= kOracleMaxVertices, "instance too large for oracle",
          ErrorCode::kTooLarge);
  Enumerator e(graph, objective);
  e.Run();
  OracleResult result;
  result.matching = Matching(graph.size(), e.best());
  result.value = Evaluate(graph, result.matching, objective);
  return result;
}

}  // namespace matchembed
