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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "onnx/model.hpp"
#include "runtime/tensor.hpp"

namespace hub::runtime {

// Inputs are positional; an omitted optional input is nullptr.
using OpFn = TensorValue (*)(const onnx::Node &node, std::span<const TensorValue *const> inputs,
                             std::int64_t opset);

// nullptr if the op is outside the interpreter's set.
OpFn find_op(std::string_view domain, std::string_view op_type);

// Op types of the default domain, sorted.
std::vector<std::string> supported_ops();

// Load-time attribute checks (Cast target type and the like). Throws
// unsupported_op.
void check_node_supported(const onnx::Node &node);

// Value of a Constant node from whichever value* attribute it carries.
TensorValue constant_value(const onnx::Node &node);

} // namespace hub::runtime
