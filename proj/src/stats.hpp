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

#ifndef MATCHEMBED_STATS_HPP_
#define MATCHEMBED_STATS_HPP_

#include <span>

namespace matchembed {

// Two-sided critical value t_{1 - alpha/2, df}.
double StudentTCritical(double confidence, int df);

struct MeanInterval {
  int count = 0;
  double mean = 0.0;
  double stddev = 0.0;      // sample standard deviation (n - 1)
  double half_width = 0.0;  // t_{0.975, n-1} * s / sqrt(n)
};

// Requires at least two samples.
MeanInterval MeanConfidence95(std::span<const double> samples);

}  // namespace matchembed

#endif  // MATCHEMBED_STATS_HPP_
