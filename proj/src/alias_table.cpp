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

#include "alias_table.hpp"

#include <cmath>
#include <numeric>

#include "error.hpp"
#include "rng.hpp"

namespace matchembed {

AliasTable::AliasTable(std::span<const double> weights) {
  const std::size_t k = weights.size();
  Require(k > 0, "alias table needs at least one outcome");
  double total = 0.0;
  for (double w : weights) {
    Require(w >= 0.0 && std::isfinite(w),
            "alias weights must be finite and non-negative");
    total += w;
  }
  Require(total > 0.0, "alias weights sum to zero");

  prob_.resize(k);
  alias_.resize(k);
  std::vector<double> scaled(k);
  std::vector<std::uint32_t> small;
  std::vector<std::uint32_t> large;
  for (std::size_t i = 0; i < k; ++i) {
    scaled[i] = weights[i] * static_cast<double>(k) / total;
    alias_[i] = static_cast<std::uint32_t>(i);
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  }
  while (!small.empty() && !large.empty()) {
    const std::uint32_t s = small.back();
    small.pop_back();
    const std::uint32_t l = large.back();
    prob_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  // Leftovers are 1 up to rounding.
  for (std::uint32_t i : large) prob_[i] = 1.0;
  for (std::uint32_t i : small) prob_[i] = 1.0;
}

std::size_t AliasTable::Sample(double u_column, double u_coin) const {
  const std::size_t k = prob_.size();
  std::size_t column = static_cast<std::size_t>(u_column * static_cast<double>(k));
  if (column >= k) column = k - 1;
  return u_coin < prob_[column] ? column : alias_[column];
}

std::size_t AliasTable::Sample(CounterRng& rng) const {
  const double a = rng.NextDouble();
  const double b = rng.NextDouble();
  return Sample(a, b);
}

double AliasTable::Probability(std::size_t i) const {
  const double k = static_cast<double>(prob_.size());
  double p = prob_[i] / k;
  for (std::size_t c = 0; c < prob_.size(); ++c) {
    if (alias_[c] == i && c != i) p += (1.0 - prob_[c]) / k;
  }
  return p;
}

}  // namespace matchembed
