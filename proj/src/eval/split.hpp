// Copyright 2026 The Model Hub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

namespace hub::eval {

// SplitMix64 (Steele, Lea, Flood). Fixed constants so masks reproduce across
// implementations.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

private:
  std::uint64_t state_;
};

struct SplitMask {
  std::int64_t n = 0;
  std::vector<std::int64_t> secret_indices; // sorted
  std::uint64_t seed = 0;
  double secret_fraction = 0.0;

  std::vector<std::int64_t> public_indices() const;
  bool operator==(const SplitMask &) const = default;
};

inline constexpr std::int64_t kMaxEvalLabels = 1'000'000;

// Fisher-Yates over 0..n-1 (i from n-1 down to 1, j = below(i+1)); the first
// llround(f*n) shuffled indices are secret. Rejects n < 2, f outside (0,1),
// and fractions that leave either side empty.
SplitMask make_split(std::int64_t n, double secret_fraction, std::uint64_t seed);

// All indices public.
SplitMask experiment_mask(std::int64_t n);

nlohmann::json to_json(const SplitMask &mask);
SplitMask split_from_json(const nlohmann::json &j);

} // namespace hub::eval
