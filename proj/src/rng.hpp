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
// Counter-based random streams. Output k of a stream is a fixed function of
// (key, k), so results never depend on which thread drew them or in which
// order independent streams were consumed.

#ifndef MATCHEMBED_RNG_HPP_
#define MATCHEMBED_RNG_HPP_

#include <cstdint>
#include <initializer_list>

namespace matchembed {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finalizer.
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Hash of an ordered tuple of 64-bit values; used to key substreams.
constexpr std::uint64_t DeriveSeed(std::uint64_t seed,
                                   std::initializer_list<std::uint64_t> keys) {
  std::uint64_t h = Mix64(seed + kGolden);
  for (std::uint64_t k : keys) h = Mix64(h ^ (Mix64(k + kGolden) + kGolden));
  return h;
}

class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t key) : key_(key) {}

  constexpr std::uint64_t NextU64() {
    ++counter_;
    return Mix64(key_ + counter_ * kGolden);
  }

  // Uniform on [0, 1) with 53 random bits.
  constexpr double NextDouble() {
    return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound), bound > 0. Lemire's multiply-shift;
  // the residual bias is below 2^-32 for the bounds used here.
  std::uint64_t NextBelow(std::uint64_t bound) {
    const unsigned __int128 m =
        static_cast<unsigned __int128>(NextU64()) * bound;
    return static_cast<std::uint64_t>(m >> 64);
  }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace matchembed

#endif  // MATCHEMBED_RNG_HPP_
