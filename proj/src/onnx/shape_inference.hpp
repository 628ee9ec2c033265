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
#include <vector>

#include "onnx/model.hpp"

namespace hub::onnx {

struct InferredValue {
  int elem_type = kUndefined;
  std::optional<Shape> shape;
};

// Static shape propagation over the interpreter's op set. Entry i holds the
// inferred first output of graph.nodes[i]; ops outside the set, or inputs
// whose shape cannot be determined, yield shape == nullopt.
std::vector<InferredValue> infer_node_shapes(const Model &model);

// Numpy-style multidirectional broadcast of two shapes. Returns nullopt when
// the shapes are provably incompatible.
std::optional<Shape> broadcast_shapes(const Shape &a, const Shape &b);

} // namespace hub::onnx
