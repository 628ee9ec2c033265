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

#include <optional>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "common/types.hpp"
#include "eval/split.hpp"
#include "metrics/metrics.hpp"

namespace hub::eval {

// Ground truth or predictions: class labels for classification, reals for
// regression.
using Values = std::variant<std::vector<Label>, std::vector<double>>;

// Reads a JSON array for `task`. Non-numbers on a regression track are a
// type_mismatch; an empty array is a validation error.
Values values_from_json(TaskType task, const nlohmann::json &array, std::string_view field);
nlohmann::json values_to_json(const Values &values);
std::size_t values_size(const Values &values);

struct Scores {
  metrics::MetricReport public_report;
  std::optional<metrics::MetricReport> secret_report; // competitions only
};

// Experiments (empty mask) score every index into public_report. Competitions
// score the public and secret partitions separately.
Scores score_submission(TaskType task, const Values &eval_labels, const SplitMask &mask,
                        const Values &predictions);

} // namespace hub::eval
