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

#include "runtime/runtime_model.hpp"

#include <algorithm>
#include <cmath>

#include "common/error.hpp"

namespace hub::runtime {

using nlohmann::json;

std::vector<Label> derive_label_map(std::span<const Label> y_train) {
  if (y_train.empty()) fail(ErrorCode::validation_error, "y_train labels must not be empty", {{"field", "y_train"}});
  std::vector<Label> labels(y_train.begin(), y_train.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.front().index() != labels.back().index())
    fail(ErrorCode::validation_error, "y_train mixes integer and string labels", {{"field", "y_train"}});
  return labels;
}

namespace {

json map_index(const std::vector<Label> &label_map, std::int64_t idx) {
  if (label_map.empty()) return idx;
  if (idx < 0 || idx >= static_cast<std::int64_t>(label_map.size()))
    fail(ErrorCode::validation_error,
         "model produced class index " + std::to_string(idx) + " outside the label map of " +
             std::to_string(label_map.size()),
         {{"index", idx}, {"labels", label_map.size()}});
  return label_to_json(label_map[static_cast<std::size_t>(idx)]);
}

} // namespace

std::vector<json> postprocess(TaskType task, const std::vector<Label> &label_map, const TensorValue &raw) {
  if (raw.rank() == 0) fail(ErrorCode::shape_error, "model output has no batch dimension");
  const auto batch = raw.shape()[0];
  const auto width = batch == 0 ? 0 : static_cast<std::int64_t>(raw.size()) / batch;
  std::vector<json> out;
  out.reserve(static_cast<std::size_t>(batch));

  if (task == TaskType::regression) {
    if (width != 1)
      fail(ErrorCode::validation_error,
           "regression output must have one value per row, got shape " + raw.shape_string());
    const auto values = raw.to_doubles();
    for (double v : values) out.emplace_back(v);
    return out;
  }

  if (raw.type() == ElemType::i64) {
    if (width != 1)
      fail(ErrorCode::validation_error, "index output must have one value per row, got shape " + raw.shape_string());
    for (auto idx : raw.values<std::int64_t>()) out.push_back(map_index(label_map, idx));
    return out;
  }

  if (!label_map.empty() && width != static_cast<std::int64_t>(label_map.size()))
    fail(ErrorCode::validation_error,
         "output width " + std::to_string(width) + " does not match the " + std::to_string(label_map.size()) +
             " labels in the label map",
         {{"output_width", width}, {"labels", label_map.size()}});
  const auto values = raw.to_doubles();
  for (std::int64_t r = 0; r < batch; ++r) {
    const auto first = values.begin() + r * width;
    const auto best = std::max_element(first, first + width); // first maximum wins ties
    out.push_back(map_index(label_map, best - first));
  }
  return out;
}

RuntimeModel::RuntimeModel(std::unique_ptr<Executor> executor, RuntimeConfig config)
    : executor_(std::move(executor)), config_(std::move(config)) {}

std::shared_ptr<const RuntimeModel> RuntimeModel::load(std::span<const std::byte> onnx_bytes, RuntimeConfig config) {
  return load(onnx::parse_model(onnx_bytes), std::move(config));
}

std::shared_ptr<const RuntimeModel> RuntimeModel::load(onnx::Model model, RuntimeConfig config) {
  auto exec = std::make_unique<Interpreter>(std::move(model));
  if (exec->inputs().size() != 1)
    fail(ErrorCode::validation_error,
         "deployable models need exactly one runtime input, found " + std::to_string(exec->inputs().size()));
  if (exec->outputs().empty()) fail(ErrorCode::graph_invalid, "model declares no outputs");
  const auto &in = exec->inputs().front();
  const auto in_type = elem_type_from_onnx(in.elem_type);
  if (in_type == ElemType::i64)
    fail(ErrorCode::validation_error, "model input '" + in.name + "' must be floating point", {{"input", in.name}});

  if (config.input_type == InputType::tabular) {
    if (!config.preprocess)
      fail(ErrorCode::spec_invalid, "tabular playgrounds need a preprocessor spec", {{"field", "preprocessor"}});
    const auto width = config.preprocess->output_width();
    if (in.shape) {
      const auto &s = *in.shape;
      if (s.size() != 2 || (s[1].known() && s[1].value != width))
        fail(ErrorCode::shape_error,
             "preprocessor emits " + std::to_string(width) + " features but input '" + in.name +
                 "' does not accept [batch," + std::to_string(width) + "]",
             {{"input", in.name}, {"preprocessed_width", width}});
    }
  } else if (in.shape && in.shape->size() < 2) {
    fail(ErrorCode::shape_error, "image input '" + in.name + "' needs a batch dimension plus pixel dims",
         {{"input", in.name}});
  }

  if (config.task_type == TaskType::classification && !config.label_map.empty()) {
    const auto &out = exec->outputs().front();
    if (out.shape && !out.shape->empty() && out.elem_type != onnx::kInt64) {
      const auto &last = out.shape->back();
      if (last.known() && last.value != static_cast<std::int64_t>(config.label_map.size()))
        fail(ErrorCode::validation_error,
             "output width " + std::to_string(last.value) + " does not match the " +
                 std::to_string(config.label_map.size()) + " labels in the label map",
             {{"output_width", last.value}, {"labels", config.label_map.size()}});
    }
  }

  auto rm = std::shared_ptr<RuntimeModel>(new RuntimeModel(std::move(exec), std::move(config)));
  rm->input_type_ = in_type;
  return rm;
}

namespace {

void nested_shape(const json &v, std::size_t depth, std::vector<std::int64_t> &shape, std::vector<double> &flat) {
  if (v.is_array()) {
    if (depth == shape.size())
      shape.push_back(static_cast<std::int64_t>(v.size()));
    else if (shape[depth] != static_cast<std::int64_t>(v.size()))
      fail(ErrorCode::shape_error, "instance is a ragged array");
    for (const auto &e : v) nested_shape(e, depth + 1, shape, flat);
    return;
  }
  if (!v.is_number() || v.is_boolean()) fail(ErrorCode::type_mismatch, "instance values must be numbers");
  if (depth != shape.size()) fail(ErrorCode::shape_error, "instance is a ragged array");
  flat.push_back(v.get<double>());
}

TensorValue make_tensor(ElemType type, std::vector<std::int64_t> shape, const std::vector<double> &flat) {
  if (type == ElemType::f64) return TensorValue(std::move(shape), flat);
  return TensorValue(std::move(shape), std::vector<float>(flat.begin(), flat.end()));
}

} // namespace

TensorValue RuntimeModel::row_tensor(const json &row) const {
  if (config_.input_type == InputType::tabular) {
    auto features = apply_preprocess(*config_.preprocess, row);
    const auto width = static_cast<std::int64_t>(features.size());
    return make_tensor(input_type_, {1, width}, features);
  }
  std::vector<std::int64_t> shape{1};
  std::vector<double> flat;
  if (!row.is_array()) fail(ErrorCode::type_mismatch, "each instance must be a nested numeric array");
  nested_shape(row, 1, shape, flat);
  return make_tensor(input_type_, std::move(shape), flat);
}

PredictResult RuntimeModel::predict(const json &rows) const {
  if (!rows.is_array() || rows.empty())
    fail(ErrorCode::validation_error, "at least one row is required", {{"pointer", "/rows"}});
  PredictResult result;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    try {
      auto outputs = executor_->run({row_tensor(rows[i])});
      auto preds = postprocess(config_.task_type, config_.label_map, outputs.front());
      if (preds.size() != 1) fail(ErrorCode::shape_error, "model changed the batch size of a single row");
      result.predictions.push_back(std::move(preds.front()));
    } catch (const Error &e) {
      json err = e.to_json();
      err["index"] = i;
      result.errors.push_back(std::move(err));
      result.predictions.emplace_back(nullptr);
    }
  }
  if (result.errors.size() == rows.size())
    fail(ErrorCode::validation_error, "all " + std::to_string(rows.size()) + " rows failed",
         {{"errors", result.errors}});
  return result;
}

json RuntimeModel::predict_body(const json &body) const {
  const char *key = config_.input_type == InputType::tabular ? "rows" : "instances";
  if (!body.is_object() || !body.contains(key) || !body[key].is_array())
    fail(ErrorCode::malformed_body, std::string("request body must be an object with a '") + key + "' array",
         {{"pointer", std::string("/") + key}});
  auto r = predict(body[key]);
  return {{"model_version", config_.version},
          {"model_id", config_.model_id},
          {"predictions", r.predictions},
          {"errors", r.errors}};
}

} // namespace hub::runtime
