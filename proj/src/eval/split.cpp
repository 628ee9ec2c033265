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

#include "eval/split.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "common/error.hpp"

namespace hub::eval {

std::vector<std::int64_t> SplitMask::public_indices() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(n) - secret_indices.size());
  auto it = secret_indices.begin();
  for (std::int64_t i = 0; i < n; ++i) {
    if (it != secret_indices.end() && *it == i) {
      ++it;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

SplitMask make_split(std::int64_t n, double secret_fraction, std::uint64_t seed) {
  if (n < 2)
    fail(ErrorCode::validation_error, "a secret split needs at least 2 evaluation labels",
         {{"field", "n"}, {"value", n}});
  if (n > kMaxEvalLabels)
    fail(ErrorCode::validation_error, "too many evaluation labels",
         {{"field", "n"}, {"value", n}, {"max", kMaxEvalLabels}});
  if (!(secret_fraction > 0.0 && secret_fraction < 1.0))
    fail(ErrorCode::validation_error, "secret_fraction must lie strictly between 0 and 1",
         {{"field", "secret_fraction"}, {"value", secret_fraction}});

  const auto k = static_cast<std::int64_t>(std::llround(secret_fraction * static_cast<double>(n)));
  if (k <= 0 || k >= n)
    fail(ErrorCode::validation_error,
         "secret_fraction leaves the public or secret side empty for this many labels",
         {{"field", "secret_fraction"}, {"value", secret_fraction}, {"n", n}, {"secret_count", k}});

  std::vector<std::int64_t> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  SplitMix64 rng(seed);
  for (std::int64_t i = n - 1; i >= 1; --i) {
    const auto j = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
  }

  SplitMask mask;
  mask.n = n;
  mask.seed = seed;
  mask.secret_fraction = secret_fraction;
  mask.secret_indices.assign(idx.begin(), idx.begin() + k);
  std::sort(mask.secret_indices.begin(), mask.secret_indices.end());
  return mask;
}

SplitMask experiment_mask(std::int64_t n) {
  SplitMask mask;
  mask.n = n;
  return mask;
}

nlohmann::json to_json(const SplitMask &mask) {
  return {{"n", mask.n},
          {"secret_indices", mask.secret_indices},
          {"seed", mask.seed},
          {"secret_fraction", mask.secret_fraction}};
}

SplitMask split_from_json(const nlohmann::json &j) {
  SplitMask mask;
  mask.n = j.at("n").get<std::int64_t>();
  mask.secret_indices = j.at("secret_indices").get<std::vector<std::int64_t>>();
  mask.seed = j.at("seed").get<std::uint64_t>();
  mask.secret_fraction = j.at("secret_fraction").get<double>();
  return mask;
}

} // namespace hub::eval
