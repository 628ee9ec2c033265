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

#include "runtime/interpreter.hpp"

#include <unordered_map>

#include "common/error.hpp"

namespace hub::runtime {

namespace {

std::string declared_shape_string(const onnx::Shape &shape) {
  std::string s = "[";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) s += ',';
    s += shape[i].known() ? std::to_string(shape[i].value) : (shape[i].param.empty() ? "?" : shape[i].param);
  }
  return s + "]";
}

} // namespace

void check_feed(const onnx::ValueInfo &declared, const TensorValue &value) {
  if (declared.elem_type != onnx_dtype(value.type()))
    fail(ErrorCode::type_mismatch,
         "input '" + declared.name + "' expects " + std::string(onnx::dtype_name(declared.elem_type)) + ", got " +
             std::string(to_string(value.type())),
         {{"input", declared.name}});
  if (!declared.shape) return;
  const auto &want = *declared.shape;
  bool ok = want.size() == value.shape().size();
  for (std::size_t i = 0; ok && i < want.size(); ++i)
    if (want[i].known() && want[i].value != value.shape()[i]) ok = false;
  if (!ok)
    fail(ErrorCode::shape_error,
         "input '" + declared.name + "' expects shape " + declared_shape_string(want) + ", got " +
             value.shape_string(),
         {{"input", declared.name}, {"expected", declared_shape_string(want)}, {"actual", value.shape()}});
}

Interpreter::Interpreter(onnx::Model model) : model_(std::move(model)) {
  opset_ = model_.opset();
  const auto &g = model_.graph;

  std::unordered_map<std::string, int> slot_of;
  auto slot = [&](const std::string &name) {
    auto [it, inserted] = slot_of.emplace(name, static_cast<int>(slot_of.size()));
    if (inserted) constants_.emplace_back();
    return it->second;
  };

  for (const auto &t : g.initializers) constants_[static_cast<std::size_t>(slot(t.name))] =
      std::make_shared<const TensorValue>(tensor_from_onnx(t));
  for (const auto *vi : g.runtime_inputs()) {
    elem_type_from_onnx(vi->elem_type);
    inputs_.push_back(*vi);
    input_slots_.push_back(slot(vi->name));
  }

  for (const auto &node : g.nodes) check_node_supported(node);
  for (const auto &node : g.nodes) {
    if (node.outputs.size() != 1)
      fail(ErrorCode::unsupported_op, node.op_type + " '" + node.name + "' must have exactly one output",
           {{"op_type", node.op_type}, {"node", node.name}});
    if (node.op_type == "Constant") {
      constants_[static_cast<std::size_t>(slot(node.outputs[0]))] =
          std::make_shared<const TensorValue>(constant_value(node));
      continue;
    }
    Step step{&node, find_op(node.domain, node.op_type), {}, 0};
    for (const auto &in : node.inputs) step.inputs.push_back(in.empty() ? -1 : slot(in));
    step.output = slot(node.outputs[0]);
    steps_.push_back(std::move(step));
  }
  for (const auto &out : g.outputs) output_slots_.push_back(slot(out.name));
}

std::vector<TensorValue> Interpreter::run(std::vector<TensorValue> feeds) const {
  if (feeds.size() != inputs_.size())
    fail(ErrorCode::validation_error,
         "model expects " + std::to_string(inputs_.size()) + " inputs, got " + std::to_string(feeds.size()));
  std::vector<std::shared_ptr<const TensorValue>> env = constants_;
  for (std::size_t i = 0; i < feeds.size(); ++i) {
    check_feed(inputs_[i], feeds[i]);
    env[static_cast<std::size_t>(input_slots_[i])] = std::make_shared<const TensorValue>(std::move(feeds[i]));
  }

  std::vector<const TensorValue *> args;
  for (const auto &step : steps_) {
    args.clear();
    for (int s : step.inputs) args.push_back(s < 0 ? nullptr : env[static_cast<std::size_t>(s)].get());
    env[static_cast<std::size_t>(step.output)] = std::make_shared<const TensorValue>(step.fn(*step.node, args, opset_));
  }

  std::vector<TensorValue> outputs;
  for (int s : output_slots_) outputs.push_back(*env[static_cast<std::size_t>(s)]);
  return outputs;
}

} // namespace hub::runtime
