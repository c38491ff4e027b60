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

#include "stats.hpp"

#include <cmath>

#include <boost/math/distributions/students_t.hpp>

#include "error.hpp"

namespace matchembed {

double StudentTCritical(double confidence, int df) {
  Require(df >= 1, "t critical value needs df >= 1");
  Require(confidence > 0.0 && confidence < 1.0, "confidence must be in (0, 1)");
  const boost::math::students_t dist(df);
  return boost::math::quantile(dist, 0.5 + confidence / 2.0);
}

MeanInterval MeanConfidence95(std::span<const double> samples) {
  Require(samples.size() >= 2, "confidence interval needs at least two samples");
  MeanInterval m;
  m.count = static_cast<int>(samples.size());
  double sum = 0.0;
  for (double x : samples) sum += x;
  m.mean = sum / m.count;
  double ss = 0.0;
  for (double x : samples) ss += (x - m.mean) * (x - m.mean);
  m.stddev = std::sqrt(ss / (m.count - 1));
  m.half_width =
      StudentTCritical(0.95, m.count - 1) * m.stddev / std::sqrt(m.count);
  return m;
}

}  // namespace matchembed
