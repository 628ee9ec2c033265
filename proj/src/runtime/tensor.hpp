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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "onnx/model.hpp"

namespace hub::runtime {

enum class ElemType { f32, f64, i64 };

std::string_view to_string(ElemType t);
// Throws unsupported_op for element types the interpreter cannot hold.
ElemType elem_type_from_onnx(int dtype);
int onnx_dtype(ElemType t);

// Dense row-major tensor; the buffer length always equals the shape product.
class TensorValue {
public:
  using Data = std::variant<std::vector<float>, std::vector<double>, std::vector<std::int64_t>>;

  TensorValue() : data_(std::vector<float>{}) {}
  TensorValue(std::vector<std::int64_t> shape, Data data);

  ElemType type() const { return static_cast<ElemType>(data_.index()); }
  const std::vector<std::int64_t> &shape() const { return shape_; }
  std::int64_t rank() const { return static_cast<std::int64_t>(shape_.size()); }
  std::size_t size() const;
  const Data &data() const { return data_; }
  template <typename T> const std::vector<T> &values() const { return std::get<std::vector<T>>(data_); }

  std::vector<double> to_doubles() const;
  std::string shape_string() const;

  bool operator==(const TensorValue &) const = default;

private:
  std::vector<std::int64_t> shape_;
  Data data_;
};

std::int64_t shape_product(const std::vector<std::int64_t> &shape);
std::string shape_string(const std::vector<std::int64_t> &shape);

TensorValue tensor_from_onnx(const onnx::Tensor &t);

} // namespace hub::runtime
