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

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "common/types.hpp"
#include "runtime/interpreter.hpp"
#include "runtime/preprocess.hpp"

namespace hub::runtime {

// Sorted distinct labels. Mixed integer/string labels are a validation error.
std::vector<Label> derive_label_map(std::span<const Label> y_train);

// Raw graph output [batch, ...] to one JSON prediction per batch row.
// Classification: float outputs take the argmax of each row (lowest index on
// ties), integer outputs are read as indices; either is mapped through
// label_map when it is nonempty. Regression: one scalar per row.
std::vector<nlohmann::json> postprocess(TaskType task, const std::vector<Label> &label_map, const TensorValue &raw);

struct RuntimeConfig {
  InputType input_type = InputType::tabular;
  TaskType task_type = TaskType::classification;
  std::optional<PreprocessSpec> preprocess; // required for tabular
  std::vector<Label> label_map;
  std::int64_t version = 0;
  std::string model_id;
};

struct PredictResult {
  std::vector<nlohmann::json> predictions; // null where the row failed
  nlohmann::json errors = nlohmann::json::array();
};

// A deployable model: graph + preprocessing + label mapping. Immutable once
// loaded; predict() is safe from any number of threads.
class RuntimeModel {
public:
  // Validates everything that could otherwise fail on every request.
  static std::shared_ptr<const RuntimeModel> load(std::span<const std::byte> onnx_bytes, RuntimeConfig config);
  static std::shared_ptr<const RuntimeModel> load(onnx::Model model, RuntimeConfig config);

  // Rows are evaluated one at a time so each row's result is independent of
  // its batch. Throws only if every row fails.
  PredictResult predict(const nlohmann::json &rows) const;

  // {"rows": [...]} or {"instances": [...]} per input type, answered with
  // {"model_version", "model_id", "predictions", "errors"}.
  nlohmann::json predict_body(const nlohmann::json &body) const;

  const RuntimeConfig &config() const { return config_; }
  const onnx::ValueInfo &input() const { return executor_->inputs().front(); }

private:
  RuntimeModel(std::unique_ptr<Executor> executor, RuntimeConfig config);
  TensorValue row_tensor(const nlohmann::json &row) const;

  std::unique_ptr<Executor> executor_;
  RuntimeConfig config_;
  ElemType input_type_ = ElemType::f32;
};

} // namespace hub::runtime
