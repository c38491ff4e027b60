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

#ifndef MATCHEMBED_POINTS_HPP_
#define MATCHEMBED_POINTS_HPP_

#include <cmath>
#include <span>
#include <vector>

#include "error.hpp"

namespace matchembed {

// count x dim coordinates, row-major.
struct PointSet {
  int count = 0;
  int dim = 0;
  std::vector<double> coords;

  PointSet() = default;
  PointSet(int count_, int dim_, std::vector<double> coords_)
      : count(count_), dim(dim_), coords(std::move(coords_)) {
    Require(count >= 0 && dim >= 1, "point set needs dim >= 1");
    Require(coords.size() == static_cast<std::size_t>(count) * dim,
            "point set coordinate count mismatch");
  }

  std::span<const double> operator[](int i) const {
    return {coords.data() + static_cast<std::size_t>(i) * dim,
            static_cast<std::size_t>(dim)};
  }
};

// The one Euclidean distance routine: every surrogate weight and every
// spatial-index comparison goes through it, so both agree to the bit.
inline double SquaredDistance(std::span<const double> a,
                              std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return s;
}

inline double Distance(std::span<const double> a, std::span<const double> b) {
  return std::sqrt(SquaredDistance(a, b));
}

}  // namespace matchembed

#endif  // MATCHEMBED_POINTS_HPP_
