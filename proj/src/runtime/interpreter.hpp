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
#include <string>
#include <utility>
#include <vector>

#include "onnx/model.hpp"
#include "runtime/ops.hpp"
#include "runtime/tensor.hpp"

namespace hub::runtime {

// Something that can evaluate a loaded graph. The built-in interpreter is the
// only implementation shipped; an external runtime can be slotted in behind
// the same interface for ops outside the built-in set.
class Executor {
public:
  virtual ~Executor() = default;
  // Feeds in runtime-input order; returns graph outputs in declaration order.
  virtual std::vector<TensorValue> run(std::vector<TensorValue> feeds) const = 0;
  virtual const std::vector<onnx::ValueInfo> &inputs() const = 0;
  virtual const std::vector<onnx::ValueInfo> &outputs() const = 0;
};

// Evaluates nodes in topological order over the supported op set. Immutable
// after construction; run() is reentrant.
class Interpreter final : public Executor {
public:
  // Throws unsupported_op naming the first op outside the set.
  explicit Interpreter(onnx::Model model);
  Interpreter(const Interpreter &) = delete; // steps point into model_
  Interpreter &operator=(const Interpreter &) = delete;

  std::vector<TensorValue> run(std::vector<TensorValue> feeds) const override;
  const std::vector<onnx::ValueInfo> &inputs() const override { return inputs_; }
  const std::vector<onnx::ValueInfo> &outputs() const override { return model_.graph.outputs; }
  std::int64_t opset() const { return opset_; }

private:
  struct Step {
    const onnx::Node *node;
    OpFn fn;
    std::vector<int> inputs; // slot per input, -1 for omitted optionals
    int output;
  };

  onnx::Model model_;
  std::int64_t opset_ = 0;
  std::vector<onnx::ValueInfo> inputs_;
  std::vector<int> input_slots_;
  std::vector<int> output_slots_;
  std::vector<std::shared_ptr<const TensorValue>> constants_; // indexed by slot
  std::vector<Step> steps_;
};

// Runtime feed checks: element type must match; rank and every fixed dim of the
// declared shape must match. Symbolic and unknown dims accept any size.
void check_feed(const onnx::ValueInfo &declared, const TensorValue &value);

} // namespace hub::runtime
