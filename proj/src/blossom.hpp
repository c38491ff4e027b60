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
#ifndef MATCHEMBED_BLOSSOM_HPP_
#define MATCHEMBED_BLOSSOM_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace matchembed {

struct BlossomEdge {
  int u = 0;
  int v = 0;
  double weight = 0.0;
};

struct BlossomResult {
  std::vector<int> mate;  // partner vertex or -1
  std::int64_t stages = 0;
  // Largest violation of dual feasibility / tightness seen by the
  // certificate check, in edge-slack units (2 * weight scale).
  double max_certificate_violation = 0.0;
};

// Edmonds' primal-dual blossom algorithm, O(n^3), maximising total weight.
// With max_cardinality set, the result is a maximum-weight matching among
// the maximum-cardinality ones (weights may then be negative). The dual
// solution is re-checked on return; a violation above
// certificate_tolerance * max|w| raises an Error.
BlossomResult MaxWeightMatching(int n, std::span<const BlossomEdge> edges,
                                bool max_cardinality,
                                double certificate_tolerance = 1e-9);

}  // namespace matchembed

#endif  // MATCHEMBED_BLOSSOM_HPP_
