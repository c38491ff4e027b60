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

#include <cmath>
#include <functional>

#include "error.hpp"
#include "rng.hpp"

namespace matchembed {

AdversarialInstance GenerateAdversarial(int level, double epsilon) {
  Require(level >= 2, "adversarial level t must be >= 2");
  Require(level <= kMaxAdversarialLevel,
          "adversarial level t must be <= " +
              std::to_string(kMaxAdversarialLevel),
          ErrorCode::kTooLarge);
  Require(epsilon > 0.0 && epsilon < 0.01,
          "adversarial epsilon must lie in (0, 0.01)");

  AdversarialInstance inst;
  inst.level = level;
  inst.epsilon = epsilon;
  inst.positions = {0.0, 1.0};
  double span = 1.0;
  for (int k = 2; k < level; ++k) {
    const double shift = (2.0 - epsilon) * span;
    const std::size_t count = inst.positions.size();
    for (std::size_t i = 0; i < count; ++i) {
      inst.positions.push_back(inst.positions[i] + shift);
    }
    span = (3.0 - epsilon) * span;
  }
  inst.span = inst.positions.back() - inst.positions.front();

  const int n = static_cast<int>(inst.positions.size());
  std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = inst.positions[j] - inst.positions[i];
      w[static_cast<std::size_t>(i) * n + j] = d;
      w[static_cast<std::size_t>(j) * n + i] = d;
    }
  }
  inst.graph = DenseGraph::FromMatrix(n, std::move(w));
  return inst;
}

double LomaxInverseCdf(double u, double shape, double scale) {
  return scale * (std::pow(1.0 - u, -1.0 / shape) - 1.0);
}

double LomaxCdf(double x, double shape, double scale) {
  if (x <= 0.0) return 0.0;
  return 1.0 - std::pow(1.0 + x / scale, -shape);
}

namespace {

// Draws one weight per admissible pair in (i, j) row-major order, i < j.
DenseGraph SampleEdges(int n, bool bipartite, std::uint64_t seed,
                       const std::function<double(double)>& transform) {
  Require(n > 0 && n % 2 == 0, "odd vertex count");
  CounterRng rng(seed);
  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (bipartite && (i < n / 2) == (j < n / 2)) continue;
      edges.push_back({i, j, transform(rng.NextDouble())});
    }
  }
  return DenseGraph::CompleteWithSentinels(n, edges, bipartite);
}

}  // namespace

DenseGraph GenerateLomax(const LomaxConfig& config, std::uint64_t seed) {
  Require(config.shape > 0.0 && std::isfinite(config.shape),
          "Lomax shape must be positive");
  Require(config.scale > 0.0 && std::isfinite(config.scale),
          "Lomax scale must be positive");
  const double shape = config.shape;
  const double scale = config.scale;
  return SampleEdges(config.n, config.bipartite, seed, [=](double u) {
    return LomaxInverseCdf(u, shape, scale);
  });
}

DenseGraph GenerateUniform(int n, std::uint64_t seed, bool bipartite) {
  return SampleEdges(n, bipartite, seed, [](double u) { return u; });
}

}  // namespace matchembed
