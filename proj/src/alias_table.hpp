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

#ifndef MATCHEMBED_ALIAS_TABLE_HPP_
#define MATCHEMBED_ALIAS_TABLE_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace matchembed {

class CounterRng;

// Walker/Vose alias table: O(K) build, O(1) draws from a discrete
// distribution proportional to non-negative weights.
class AliasTable {
 public:
  AliasTable() = default;
  explicit AliasTable(std::span<const double> weights);

  std::size_t size() const { return prob_.size(); }
  bool empty() const { return prob_.empty(); }

  // Consumes two uniforms from rng.
  std::size_t Sample(CounterRng& rng) const;
  std::size_t Sample(double u_column, double u_coin) const;

  // Probability the table assigns to outcome i (for tests).
  double Probability(std::size_t i) const;

 private:
  std::vector<double> prob_;
  std::vector<std::uint32_t> alias_;
};

}  // namespace matchembed

#endif  // MATCHEMBED_ALIAS_TABLE_HPP_
