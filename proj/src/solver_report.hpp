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

#ifndef MATCHEMBED_SOLVER_REPORT_HPP_
#define MATCHEMBED_SOLVER_REPORT_HPP_

#include <chrono>
#include <cstdint>

#include "graph.hpp"

namespace matchembed {

struct SolverReport {
  Matching matching;
  // Always Evaluate(graph, matching, objective) on the graph that was solved.
  double value = 0.0;
  // Algorithm-specific: augmentations, feasibility probes, MCM subsolves...
  std::int64_t iterations = 0;
  std::chrono::nanoseconds wall_time{0};
  bool uses_sentinel = false;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::chrono::nanoseconds Elapsed() const {
    return std::chrono::steady_clock::now() - start_;
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace matchembed

#endif  // MATCHEMBED_SOLVER_REPORT_HPP_
