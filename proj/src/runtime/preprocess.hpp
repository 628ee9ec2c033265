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

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "common/types.hpp"

namespace hub::runtime {

enum class ColumnType { numeric, categorical };

struct Column {
  std::string name;
  ColumnType type = ColumnType::numeric;
  bool operator==(const Column &) const = default;
};

enum class StepKind { standard_scale, min_max, one_hot, constant_impute, passthrough };

struct Step {
  StepKind kind = StepKind::passthrough;
  std::string column;
  double mean = 0, std = 1;   // standard_scale
  double min = 0, max = 1;    // min_max
  std::vector<Label> categories; // one_hot
  nlohmann::json value;       // constant_impute
  bool operator==(const Step &) const = default;
};

// Declarative tabular input pipeline:
//   {"columns": [{"name": "age", "type": "numeric"}, ...],
//    "steps":   [{"kind": "standard_scale", "column": "age", "mean": 3, "std": 2}, ...]}
// constant_impute fills a missing or null value for later steps and emits
// nothing; every other step appends its output to the feature row in step
// order.
struct PreprocessSpec {
  std::vector<Column> columns;
  std::vector<Step> steps;

  std::int64_t output_width() const;
  const Column *column(std::string_view name) const;
  bool operator==(const PreprocessSpec &) const = default;
};

// Throws spec_invalid for anything that would only fail later (zero std,
// empty range, unknown columns, unconsumed columns, impute after use).
PreprocessSpec parse_preprocess_spec(const nlohmann::json &j);
nlohmann::json to_json(const PreprocessSpec &spec);

// One record (column -> value object) to a feature row. Errors name the
// offending column.
std::vector<double> apply_preprocess(const PreprocessSpec &spec, const nlohmann::json &record);

} // namespace hub::runtime
