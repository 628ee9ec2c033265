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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "onnx/model.hpp"

namespace hub::onnx {

struct TensorSignature {
  std::string name;
  std::string elem_type; // dtype_name(), "undefined" when not declared
  std::optional<Shape> shape;

  bool operator==(const TensorSignature &) const = default;
};

struct WeightInfo {
  int input_index = 0;
  std::string elem_type;
  std::vector<std::int64_t> dims;

  bool operator==(const WeightInfo &) const = default;
};

struct NodeSummary {
  std::string op_type;
  std::string domain;
  std::string name;
  // Attribute name -> value. Scalars and lists map to JSON scalars and
  // arrays; tensors to {"tensor": {"elem_type", "dims"}}; subgraphs to
  // {"graph": count}.
  nlohmann::json attributes = nlohmann::json::object();
  // Statically inferred shape of the first output; nullopt means "dynamic".
  std::optional<Shape> output_shape;
  // Inputs backed by initializers, i.e. the layer's parameters.
  std::vector<WeightInfo> weights;

  std::int64_t parameter_count() const;
  bool operator==(const NodeSummary &) const = default;
};

struct OnnxModelSummary {
  std::string producer;
  std::string producer_version;
  std::int64_t ir_version = 0;
  std::int64_t opset = 0;
  std::string graph_name;
  std::vector<TensorSignature> inputs;
  std::vector<TensorSignature> outputs;
  std::vector<NodeSummary> nodes;
  std::int64_t parameter_count = 0;
  std::int64_t memory_size_bytes = 0;
  std::map<std::string, std::int64_t> op_histogram;

  bool operator==(const OnnxModelSummary &) const = default;
};

OnnxModelSummary extract_summary(const Model &model);

// Compact "Gemm:2 Relu:1 Softmax:1" form used in leaderboard columns.
std::string op_histogram_headline(const OnnxModelSummary &summary);

// Shapes serialize as arrays whose entries are integers (fixed), strings
// (symbolic) or null (unknown); a missing shape is the string "dynamic".
nlohmann::json shape_to_json(const std::optional<Shape> &shape);
std::optional<Shape> shape_from_json(const nlohmann::json &j);
std::string shape_to_string(const std::optional<Shape> &shape);

nlohmann::json to_json(const NodeSummary &node);
nlohmann::json to_json(const OnnxModelSummary &summary);
NodeSummary node_summary_from_json(const nlohmann::json &j);
OnnxModelSummary summary_from_json(const nlohmann::json &j);

} // namespace hub::onnx
