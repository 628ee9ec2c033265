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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

// In-memory view of the subset of the ONNX protobuf schema the hub reads.
// Field numbers follow onnx/onnx.proto.
namespace hub::onnx {

// TensorProto.DataType values.
enum DataType : int {
  kUndefined = 0,
  kFloat = 1,
  kUint8 = 2,
  kInt8 = 3,
  kUint16 = 4,
  kInt16 = 5,
  kInt32 = 6,
  kInt64 = 7,
  kString = 8,
  kBool = 9,
  kFloat16 = 10,
  kDouble = 11,
  kUint32 = 12,
  kUint64 = 13,
  kComplex64 = 14,
  kComplex128 = 15,
  kBfloat16 = 16,
};

std::string_view dtype_name(int dtype);
// Element width in bytes; 0 for strings and unknown types.
std::size_t dtype_size(int dtype);

// AttributeProto.AttributeType values.
enum AttributeType : int {
  kAttrUndefined = 0,
  kAttrFloat = 1,
  kAttrInt = 2,
  kAttrString = 3,
  kAttrTensor = 4,
  kAttrGraph = 5,
  kAttrFloats = 6,
  kAttrInts = 7,
  kAttrStrings = 8,
  kAttrTensors = 9,
  kAttrGraphs = 10,
  kAttrSparseTensor = 11,
  kAttrSparseTensors = 12,
  kAttrTypeProto = 13,
  kAttrTypeProtos = 14,
};

struct Tensor {
  std::string name;
  int data_type = kUndefined;
  std::vector<std::int64_t> dims;

  // Exactly one payload representation is normally populated.
  std::string raw_data;
  std::vector<float> float_data;
  std::vector<std::int64_t> int32_data; // widened on decode
  std::vector<std::int64_t> int64_data;
  std::vector<double> double_data;
  std::vector<std::int64_t> uint64_data;
  std::vector<std::string> string_data;
  bool external = false;

  std::int64_t element_count() const;
  // Bytes of stored payload: raw length, or element count times element width
  // for typed fields, or summed string lengths.
  std::int64_t payload_bytes() const;

  // Decoded numeric payload; throws graph_invalid on size mismatch or
  // unsupported element types.
  std::vector<float> to_floats() const;
  std::vector<double> to_doubles() const;
  std::vector<std::int64_t> to_int64s() const;
};

// One dimension: a fixed size, a symbolic name, or unknown.
struct Dim {
  std::int64_t value = -1;
  std::string param;

  static Dim fixed(std::int64_t v) { return Dim{v, {}}; }
  static Dim symbol(std::string p) { return Dim{-1, std::move(p)}; }
  static Dim unknown() { return Dim{}; }

  bool known() const { return value >= 0; }
  bool symbolic() const { return value < 0 && !param.empty(); }
  bool operator==(const Dim &) const = default;
};

using Shape = std::vector<Dim>;

struct ValueInfo {
  std::string name;
  int elem_type = kUndefined;
  std::optional<Shape> shape;
};

struct Attribute {
  std::string name;
  int type = kAttrUndefined;
  float f = 0;
  std::int64_t i = 0;
  std::string s;
  std::optional<Tensor> t;
  std::vector<float> floats;
  std::vector<std::int64_t> ints;
  std::vector<std::string> strings;
  std::vector<Tensor> tensors;
  int graph_count = 0; // subgraphs are counted, not decoded
};

struct Node {
  std::string name;
  std::string op_type;
  std::string domain;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<Attribute> attributes;

  const Attribute *attr(std::string_view n) const;
  std::int64_t attr_int(std::string_view n, std::int64_t fallback) const;
  float attr_float(std::string_view n, float fallback) const;
};

struct Graph {
  std::string name;
  std::vector<Node> nodes;
  std::vector<Tensor> initializers;
  std::vector<ValueInfo> inputs;
  std::vector<ValueInfo> outputs;
  std::vector<ValueInfo> value_info;

  const Tensor *initializer(std::string_view n) const;
  // Graph inputs that are not backed by an initializer.
  std::vector<const ValueInfo *> runtime_inputs() const;
};

struct OpsetId {
  std::string domain;
  std::int64_t version = 0;
};

struct Model {
  std::int64_t ir_version = 0;
  std::string producer_name;
  std::string producer_version;
  std::string domain;
  std::int64_t model_version = 0;
  std::vector<OpsetId> opset_import;
  Graph graph;

  // Version of the default ("" / "ai.onnx") operator set, 0 if absent.
  std::int64_t opset() const;
};

// Wire decoding only. Throws onnx_parse_error on malformed input.
Model decode_model(std::span<const std::byte> bytes);

// Decodes, then checks that every node input resolves to a graph input,
// initializer or earlier node output, and reorders nodes topologically
// (stable with respect to file order). Throws graph_invalid on dangling
// references, duplicate outputs or cycles.
Model parse_model(std::span<const std::byte> bytes);

void validate_graph(Graph &graph);

} // namespace hub::onnx
