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
#ifndef MATCHEMBED_GENERATORS_HPP_
#define MATCHEMBED_GENERATORS_HPP_

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace matchembed {

inline constexpr double kDefaultAdversarialEpsilon = 1e-6;
inline constexpr int kMaxAdversarialLevel = 13;

// Points on a line built by recursive doubling:
//   Q_2 = {0, 1},  Q_{k+1} = Q_k  u  (Q_k + (2 - eps) * span_k),
//   span_2 = 1,    span_{k+1} = (3 - eps) * span_k.
// The gap between the two copies is (1 - eps) * span_k, slightly shorter than
// the copies' own extreme edge, so greedy always matches the inner pair first
// and is dragged into one span-length edge per level.
struct AdversarialInstance {
  int level = 0;
  double epsilon = 0.0;
  std::vector<double> positions;  // ascending, size 2^(level-1)
  double span = 0.0;              // positions.back() - positions.front()
  DenseGraph graph;               // w(i, j) = |pos_i - pos_j|
};

AdversarialInstance GenerateAdversarial(
    int level, double epsilon = kDefaultAdversarialEpsilon);

struct LomaxConfig {
  double shape = 2.0;  // alpha
  double scale = 1.0;  // lambda
  int n = 100;
  bool bipartite = false;
};

// Inverse CDF of Lomax(alpha, lambda): lambda * ((1 - u)^(-1/alpha) - 1).
double LomaxInverseCdf(double u, double shape, double scale);
double LomaxCdf(double x, double shape, double scale);

DenseGraph GenerateLomax(const LomaxConfig& config, std::uint64_t seed);

// i.i.d. Uniform[0, 1) weights.
DenseGraph GenerateUniform(int n, std::uint64_t seed, bool bipartite = false);

}  // namespace matchembed

#endif  // MATCHEMBED_GENERATORS_HPP_
