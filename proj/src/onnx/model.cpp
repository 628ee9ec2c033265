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

#include "onnx/model.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "common/error.hpp"
#include "onnx/wire.hpp"

namespace hub::onnx {

using wire::Field;
using wire::Reader;
using wire::WireType;

std::string_view dtype_name(int dtype) {
  switch (dtype) {
  case kFloat: return "float32";
  case kUint8: return "uint8";
  case kInt8: return "int8";
  case kUint16: return "uint16";
  case kInt16: return "int16";
  case kInt32: return "int32";
  case kInt64: return "int64";
  case kString: return "string";
  case kBool: return "bool";
  case kFloat16: return "float16";
  case kDouble: return "float64";
  case kUint32: return "uint32";
  case kUint64: return "uint64";
  case kComplex64: return "complex64";
  case kComplex128: return "complex128";
  case kBfloat16: return "bfloat16";
  default: return "undefined";
  }
}

std::size_t dtype_size(int dtype) {
  switch (dtype) {
  case kUint8:
  case kInt8:
  case kBool: return 1;
  case kUint16:
  case kInt16:
  case kFloat16:
  case kBfloat16: return 2;
  case kFloat:
  case kInt32:
  case kUint32: return 4;
  case kInt64:
  case kDouble:
  case kUint64:
  case kComplex64: return 8;
  case kComplex128: return 16;
  default: return 0;
  }
}

// ---------------------------------------------------------------------------
// Tensor

std::int64_t Tensor::element_count() const {
  std::int64_t n = 1;
  for (auto d : dims) n *= d;
  return n;
}

std::int64_t Tensor::payload_bytes() const {
  if (!raw_data.empty()) return static_cast<std::int64_t>(raw_data.size());
  if (data_type == kString) {
    std::int64_t total = 0;
    for (const auto &s : string_data) total += static_cast<std::int64_t>(s.size());
    return total;
  }
  if (external) return element_count() * static_cast<std::int64_t>(dtype_size(data_type));
  std::size_t typed = float_data.size() + int32_data.size() + int64_data.size() +
                      double_data.size() + uint64_data.size();
  if (data_type == kComplex64 || data_type == kComplex128) typed /= 2;
  return static_cast<std::int64_t>(typed * dtype_size(data_type));
}

namespace {

template <typename T> T load_le(const char *p) {
  T v;
  std::memcpy(&v, p, sizeof v);
  return v;
}

[[noreturn]] void bad_tensor(const Tensor &t, const std::string &why) {
  fail(ErrorCode::graph_invalid, "tensor '" + t.name + "': " + why);
}

// Numeric payload as doubles (ints go through to_int64s for exactness).
std::vector<double> numeric_values(const Tensor &t) {
  const auto count = static_cast<std::size_t>(t.element_count());
  std::vector<double> out;
  out.reserve(count);
  if (t.external) bad_tensor(t, "external data is not supported");
  if (!t.raw_data.empty()) {
    const std::size_t width = dtype_size(t.data_type);
    if (width == 0 || t.raw_data.size() != count * width)
      bad_tensor(t, "raw_data size does not match dims");
    const char *p = t.raw_data.data();
    for (std::size_t i = 0; i < count; ++i, p += width) {
      switch (t.data_type) {
      case kFloat: out.push_back(load_le<float>(p)); break;
      case kDouble: out.push_back(load_le<double>(p)); break;
      case kInt64: out.push_back(static_cast<double>(load_le<std::int64_t>(p))); break;
      case kInt32: out.push_back(load_le<std::int32_t>(p)); break;
      case kInt16: out.push_back(load_le<std::int16_t>(p)); break;
      case kInt8: out.push_back(load_le<std::int8_t>(p)); break;
      case kUint8:
      case kBool: out.push_back(load_le<std::uint8_t>(p)); break;
      case kUint16: out.push_back(load_le<std::uint16_t>(p)); break;
      case kUint32: out.push_back(load_le<std::uint32_t>(p)); break;
      case kUint64: out.push_back(static_cast<double>(load_le<std::uint64_t>(p))); break;
      default: bad_tensor(t, "unsupported element type " + std::string(dtype_name(t.data_type)));
      }
    }
    return out;
  }
  switch (t.data_type) {
  case kFloat: out.assign(t.float_data.begin(), t.float_data.end()); break;
  case kDouble: out.assign(t.double_data.begin(), t.double_data.end()); break;
  case kInt64:
    for (auto v : t.int64_data) out.push_back(static_cast<double>(v));
    break;
  case kInt32:
  case kInt16:
  case kInt8:
  case kUint8:
  case kUint16:
  case kBool:
    for (auto v : t.int32_data) out.push_back(static_cast<double>(v));
    break;
  case kUint32:
  case kUint64:
    for (auto v : t.uint64_data) out.push_back(static_cast<double>(static_cast<std::uint64_t>(v)));
    break;
  default: bad_tensor(t, "unsupported element type " + std::string(dtype_name(t.data_type)));
  }
  if (out.size() != count) bad_tensor(t, "element count does not match dims");
  return out;
}

} // namespace

std::vector<double> Tensor::to_doubles() const { return numeric_values(*this); }

std::vector<float> Tensor::to_floats() const {
  if (data_type == kFloat && raw_data.empty() && !external) {
    if (float_data.size() != static_cast<std::size_t>(element_count()))
      bad_tensor(*this, "element count does not match dims");
    return float_data;
  }
  auto d = numeric_values(*this);
  return {d.begin(), d.end()};
}

std::vector<std::int64_t> Tensor::to_int64s() const {
  if (data_type == kInt64 && !external) {
    const auto count = static_cast<std::size_t>(element_count());
    if (!raw_data.empty()) {
      if (raw_data.size() != count * 8) bad_tensor(*this, "raw_data size does not match dims");
      std::vector<std::int64_t> out(count);
      std::memcpy(out.data(), raw_data.data(), count * 8);
      return out;
    }
    if (int64_data.size() != count) bad_tensor(*this, "element count does not match dims");
    return int64_data;
  }
  auto d = numeric_values(*this);
  std::vector<std::int64_t> out;
  out.reserve(d.size());
  for (double v : d) out.push_back(static_cast<std::int64_t>(v));
  return out;
}

// ---------------------------------------------------------------------------
// Decoding

namespace {

Tensor decode_tensor(std::span<const std::byte> bytes) {
  Tensor t;
  Reader r(bytes);
  Field f;
  while (r.next(f)) {
    switch (f.number) {
    case 1: wire::append_varints(f, t.dims); break;
    case 2: t.data_type = static_cast<int>(f.scalar); break;
    case 4: wire::append_floats(f, t.float_data); break;
    case 5: {
      std::vector<std::int64_t> tmp;
      wire::append_varints(f, tmp);
      for (auto v : tmp) t.int32_data.push_back(static_cast<std::int32_t>(v));
      break;
    }
    case 6: t.string_data.push_back(f.str()); break;
    case 7: wire::append_varints(f, t.int64_data); break;
    case 8: t.name = f.str(); break;
    case 9: t.raw_data = f.str(); break;
    case 10: wire::append_doubles(f, t.double_data); break;
    case 11: wire::append_varints(f, t.uint64_data); break;
    case 13: t.external = true; break;
    case 14:
      if (f.scalar == 1) t.external = true;
      break;
    default: break;
    }
  }
  for (auto d : t.dims)
    if (d < 0) fail(ErrorCode::onnx_parse_error, "tensor '" + t.name + "' has a negative dim");
  return t;
}

Dim decode_dim(std::span<const std::byte> bytes) {
  Dim d;
  Reader r(bytes);
  Field f;
  while (r.next(f)) {
    if (f.number == 1) d.value = f.as_int64();
    else if (f.number == 2) d.param = f.str();
  }
  return d;
}

void decode_tensor_type(std::span<const std::byte> bytes, ValueInfo &vi) {
  Reader r(bytes);
  Field f;
  while (r.next(f)) {
    if (f.number == 1) {
      vi.elem_type = static_cast<int>(f.scalar);
    } else if (f.number == 2) {
      Shape shape;
      Reader sr(f.bytes);
      Field df;
      while (sr.next(df))
        if (df.number == 1) shape.push_back(decode_dim(df.bytes));
      vi.shape = std::move(shape);
    }
  }
}

ValueInfo decode_value_info(std::span<const std::byte> bytes) {
  ValueInfo vi;
  Reader r(bytes);
  Field f;
  while (r.next(f)) {
    if (f.number == 1) {
      vi.name = f.str();
    } else if (f.number == 2) {
      Reader tr(f.bytes);
      Field tf;
      while (tr.next(tf))
        if (tf.number == 1) decode_tensor_type(tf.bytes, vi);
    }
  }
  return vi;
}

Attribute decode_attribute(std::span<const std::byte> bytes) {
  Attribute a;
  bool has_f = false, has_i = false, has_s = false;
  Reader r(bytes);
  Field f;
  while (r.next(f)) {
    switch (f.number) {
    case 1: a.name = f.str(); break;
    case 2: a.f = f.as_float(); has_f = true; break;
    case 3: a.i = f.as_int64(); has_i = true; break;
    case 4: a.s = f.str(); has_s = true; break;
    case 5: a.t = decode_tensor(f.bytes); break;
    case 6: ++a.graph_count; break;
    case 7: wire::append_floats(f, a.floats); break;
    case 8: wire::append_varints(f, a.ints); break;
    case 9: a.strings.push_back(f.str()); break;
    case 10: a.tensors.push_back(decode_tensor(f.bytes)); break;
    case 11: ++a.graph_count; break;
    case 20: a.type = static_cast<int>(f.scalar); break;
    default: break;
    }
  }
  if (a.type == kAttrUndefined) {
    // IR < 2 files omit the type tag; infer it from the populated field.
    if (has_f) a.type = kAttrFloat;
    else if (has_i) a.type = kAttrInt;
    else if (has_s) a.type = kAttrString;
    else if (a.t) a.type = kAttrTensor;
    else if (!a.floats.empty()) a.type = kAttrFloats;
    else if (!a.ints.empty()) a.type = kAttrInts;
    else if (!a.strings.empty()) a.type = kAttrStrings;
    else if (!a.tensors.empty()) a.type = kAttrTensors;
    else if (a.graph_count) a.type = kAttrGraph;
  }
  return a;
}

Node decode_node(std::span<const std::byte> bytes) {
  Node n;
  Reader r(bytes);
  Field f;
  while (r.next(f)) {
    switch (f.number) {
    case 1: n.inputs.push_back(f.str()); break;
    case 2: n.outputs.push_back(f.str()); break;
    case 3: n.name = f.str(); break;
    case 4: n.op_type = f.str(); break;
    case 5: n.attributes.push_back(decode_attribute(f.bytes)); break;
    case 7: n.domain = f.str(); break;
    default: break;
    }
  }
  if (n.op_type.empty()) fail(ErrorCode::onnx_parse_error, "node '" + n.name + "' has no op_type");
  return n;
}

Graph decode_graph(std::span<const std::byte> bytes) {
  Graph g;
  Reader r(bytes);
  Field f;
  while (r.next(f)) {
    if (f.type != WireType::bytes) continue;
    switch (f.number) {
    case 1: g.nodes.push_back(decode_node(f.bytes)); break;
    case 2: g.name = f.str(); break;
    case 5: g.initializers.push_back(decode_tensor(f.bytes)); break;
    case 11: g.inputs.push_back(decode_value_info(f.bytes)); break;
    case 12: g.outputs.push_back(decode_value_info(f.bytes)); break;
    case 13: g.value_info.push_back(decode_value_info(f.bytes)); break;
    default: break;
    }
  }
  return g;
}

} // namespace

Model decode_model(std::span<const std::byte> bytes) {
  if (bytes.empty()) fail(ErrorCode::onnx_parse_error, "empty model file");
  Model m;
  bool has_graph = false;
  Reader r(bytes);
  Field f;
  while (r.next(f)) {
    switch (f.number) {
    case 1: m.ir_version = f.as_int64(); break;
    case 2: m.producer_name = f.str(); break;
    case 3: m.producer_version = f.str(); break;
    case 4: m.domain = f.str(); break;
    case 5: m.model_version = f.as_int64(); break;
    case 7:
      if (f.type != WireType::bytes) fail(ErrorCode::onnx_parse_error, "graph field has wrong wire type");
      m.graph = decode_graph(f.bytes);
      has_graph = true;
      break;
    case 8: {
      if (f.type != WireType::bytes) fail(ErrorCode::onnx_parse_error, "opset_import has wrong wire type");
      OpsetId id;
      Reader or_(f.bytes);
      Field of;
      while (or_.next(of)) {
        if (of.number == 1) id.domain = of.str();
        else if (of.number == 2) id.version = of.as_int64();
      }
      m.opset_import.push_back(std::move(id));
      break;
    }
    default: break;
    }
  }
  if (!has_graph) fail(ErrorCode::onnx_parse_error, "model has no graph");
  if (m.opset_import.empty()) fail(ErrorCode::onnx_parse_error, "model declares no opset_import");
  return m;
}

std::int64_t Model::opset() const {
  for (const auto &o : opset_import)
    if (o.domain.empty() || o.domain == "ai.onnx") return o.version;
  return 0;
}

const Attribute *Node::attr(std::string_view n) const {
  for (const auto &a : attributes)
    if (a.name == n) return &a;
  return nullptr;
}

std::int64_t Node::attr_int(std::string_view n, std::int64_t fallback) const {
  const Attribute *a = attr(n);
  return a ? a->i : fallback;
}

float Node::attr_float(std::string_view n, float fallback) const {
  const Attribute *a = attr(n);
  return a ? a->f : fallback;
}

const Tensor *Graph::initializer(std::string_view n) const {
  for (const auto &t : initializers)
    if (t.name == n) return &t;
  return nullptr;
}

std::vector<const ValueInfo *> Graph::runtime_inputs() const {
  std::unordered_set<std::string> init;
  for (const auto &t : initializers) init.insert(t.name);
  std::vector<const ValueInfo *> out;
  for (const auto &vi : inputs)
    if (!init.count(vi.name)) out.push_back(&vi);
  return out;
}

// ---------------------------------------------------------------------------
// Validation

void validate_graph(Graph &graph) {
  std::unordered_set<std::string> available;
  for (const auto &vi : graph.inputs) available.insert(vi.name);
  for (const auto &t : graph.initializers) available.insert(t.name);

  std::unordered_map<std::string, std::size_t> producer;
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    for (const auto &out : graph.nodes[i].outputs) {
      if (out.empty()) continue;
      if (available.count(out) || !producer.emplace(out, i).second)
        fail(ErrorCode::graph_invalid, "tensor '" + out + "' is produced more than once",
             {{"tensor", out}});
    }
  }

  const std::size_t n = graph.nodes.size();
  std::vector<std::size_t> pending(n, 0);
  std::vector<std::vector<std::size_t>> consumers(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::set<std::size_t> deps;
    for (const auto &in : graph.nodes[i].inputs) {
      if (in.empty() || available.count(in)) continue;
      auto it = producer.find(in);
      if (it == producer.end())
        fail(ErrorCode::graph_invalid,
             "node '" + graph.nodes[i].name + "' (" + graph.nodes[i].op_type +
                 ") consumes undeclared tensor '" + in + "'",
             {{"node", graph.nodes[i].name}, {"tensor", in}});
      deps.insert(it->second);
    }
    pending[i] = deps.size();
    for (auto d : deps) consumers[d].push_back(i);
  }

  // Kahn's algorithm, always releasing the earliest ready node in file order.
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (pending[i] == 0) ready.push(i);
  std::vector<Node> ordered;
  ordered.reserve(n);
  while (!ready.empty()) {
    const std::size_t i = ready.top();
    ready.pop();
    ordered.push_back(std::move(graph.nodes[i]));
    for (auto c : consumers[i])
      if (--pending[c] == 0) ready.push(c);
  }
  if (ordered.size() != n) fail(ErrorCode::graph_invalid, "graph contains a cycle");
  graph.nodes = std::move(ordered);

  for (const auto &out : graph.outputs)
    if (!available.count(out.name) && !producer.count(out.name))
      fail(ErrorCode::graph_invalid, "graph output '" + out.name + "' is never produced",
           {{"tensor", out.name}});
}

Model parse_model(std::span<const std::byte> bytes) {
  Model m = decode_model(bytes);
  validate_graph(m.graph);
  return m;
}

} // namespace hub::onnx
