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

#include "runtime/tensor.hpp"

#include "common/error.hpp"

namespace hub::runtime {

std::string_view to_string(ElemType t) {
  switch (t) {
  case ElemType::f32: return "float32";
  case ElemType::f64: return "float64";
  case ElemType::i64: return "int64";
  }
  return "?";
}

ElemType elem_type_from_onnx(int dtype) {
  switch (dtype) {
  case onnx::kFloat: return ElemType::f32;
  case onnx::kDouble: return ElemType::f64;
  case onnx::kInt64: return ElemType::i64;
  default:
    fail(ErrorCode::unsupported_op,
         "element type " + std::string(onnx::dtype_name(dtype)) + " is not supported by the runtime",
         {{"dtype", onnx::dtype_name(dtype)}});
  }
}

int onnx_dtype(ElemType t) {
  switch (t) {
  case ElemType::f32: return onnx::kFloat;
  case ElemType::f64: return onnx::kDouble;
  case ElemType::i64: return onnx::kInt64;
  }
  return onnx::kUndefined;
}

std::int64_t shape_product(const std::vector<std::int64_t> &shape) {
  std::int64_t n = 1;
  for (auto d : shape) n *= d;
  return n;
}

std::string shape_string(const std::vector<std::int64_t> &shape) {
  std::string s = "[";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(shape[i]);
  }
  return s + "]";
}

TensorValue::TensorValue(std::vector<std::int64_t> shape, Data data) : shape_(std::move(shape)), data_(std::move(data)) {
  for (auto d : shape_)
    if (d < 0) fail(ErrorCode::shape_error, "negative dimension in " + runtime::shape_string(shape_));
  const auto n = static_cast<std::size_t>(shape_product(shape_));
  if (n != size())
    fail(ErrorCode::shape_error,
         "buffer of " + std::to_string(size()) + " elements does not fit shape " + runtime::shape_string(shape_));
}

std::size_t TensorValue::size() const {
  return std::visit([](const auto &v) { return v.size(); }, data_);
}

std::vector<double> TensorValue::to_doubles() const {
  return std::visit([](const auto &v) { return std::vector<double>(v.begin(), v.end()); }, data_);
}

std::string TensorValue::shape_string() const { return runtime::shape_string(shape_); }

TensorValue tensor_from_onnx(const onnx::Tensor &t) {
  switch (elem_type_from_onnx(t.data_type)) {
  case ElemType::f32: return TensorValue(t.dims, t.to_floats());
  case ElemType::f64: return TensorValue(t.dims, t.to_doubles());
  case ElemType::i64: return TensorValue(t.dims, t.to_int64s());
  }
  fail(ErrorCode::internal_error, "unreachable");
}

} // namespace hub::runtime
