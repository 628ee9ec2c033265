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

#include "onnx/summary.hpp"

#include <sstream>

#include "common/error.hpp"
#include "onnx/shape_inference.hpp"

namespace hub::onnx {

using nlohmann::json;

namespace {

json tensor_descriptor(const Tensor &t) {
  return {{"tensor", {{"elem_type", std::string(dtype_name(t.data_type))}, {"dims", t.dims}}}};
}

json attribute_value(const Attribute &a) {
  switch (a.type) {
  case kAttrFloat: return static_cast<double>(a.f);
  case kAttrInt: return a.i;
  case kAttrString: return a.s;
  case kAttrTensor: return a.t ? tensor_descriptor(*a.t) : json(nullptr);
  case kAttrGraph:
  case kAttrGraphs: return {{"graph", a.graph_count}};
  case kAttrFloats: {
    json arr = json::array();
    for (float f : a.floats) arr.push_back(static_cast<double>(f));
    return arr;
  }
  case kAttrInts: return a.ints;
  case kAttrStrings: return a.strings;
  case kAttrTensors: {
    json arr = json::array();
    for (const auto &t : a.tensors) arr.push_back(tensor_descriptor(t));
    return arr;
  }
  default: return nullptr;
  }
}

TensorSignature signature(const ValueInfo &vi) {
  return {vi.name, std::string(dtype_name(vi.elem_type)), vi.shape};
}

} // namespace

std::int64_t NodeSummary::parameter_count() const {
  std::int64_t total = 0;
  for (const auto &w : weights) {
    std::int64_t n = 1;
    for (auto d : w.dims) n *= d;
    total += n;
  }
  return total;
}

OnnxModelSummary extract_summary(const Model &model) {
  const Graph &g = model.graph;
  OnnxModelSummary s;
  s.producer = model.producer_name;
  s.producer_version = model.producer_version;
  s.ir_version = model.ir_version;
  s.opset = model.opset();
  s.graph_name = g.name;

  for (const ValueInfo *vi : g.runtime_inputs()) s.inputs.push_back(signature(*vi));
  for (const auto &vi : g.outputs) s.outputs.push_back(signature(vi));

  for (const auto &t : g.initializers) {
    s.parameter_count += t.element_count();
    s.memory_size_bytes += t.payload_bytes();
  }

  const auto inferred = infer_node_shapes(model);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const Node &node = g.nodes[i];
    NodeSummary ns;
    ns.op_type = node.op_type;
    ns.domain = node.domain;
    ns.name = node.name;
    for (const auto &a : node.attributes) ns.attributes[a.name] = attribute_value(a);
    ns.output_shape = inferred[i].shape;
    for (std::size_t k = 0; k < node.inputs.size(); ++k) {
      if (const Tensor *t = node.inputs[k].empty() ? nullptr : g.initializer(node.inputs[k]))
        ns.weights.push_back({static_cast<int>(k), std::string(dtype_name(t->data_type)), t->dims});
    }
    ++s.op_histogram[node.op_type];
    s.nodes.push_back(std::move(ns));
  }
  return s;
}

std::string op_histogram_headline(const OnnxModelSummary &summary) {
  std::string out;
  for (const auto &[op, count] : summary.op_histogram) {
    if (!out.empty()) out += ' ';
    out += op + ":" + std::to_string(count);
  }
  return out;
}

json shape_to_json(const std::optional<Shape> &shape) {
  if (!shape) return "dynamic";
  json arr = json::array();
  for (const auto &d : *shape) {
    if (d.known()) arr.push_back(d.value);
    else if (d.symbolic()) arr.push_back(d.param);
    else arr.push_back(nullptr);
  }
  return arr;
}

std::optional<Shape> shape_from_json(const json &j) {
  if (j.is_string()) return std::nullopt;
  Shape s;
  for (const auto &d : j) {
    if (d.is_number_integer()) s.push_back(Dim::fixed(d.get<std::int64_t>()));
    else if (d.is_string()) s.push_back(Dim::symbol(d.get<std::string>()));
    else s.push_back(Dim::unknown());
  }
  return s;
}

std::string shape_to_string(const std::optional<Shape> &shape) {
  if (!shape) return "dynamic";
  std::string out = "[";
  for (std::size_t i = 0; i < shape->size(); ++i) {
    if (i) out += ',';
    const Dim &d = (*shape)[i];
    out += d.known() ? std::to_string(d.value) : d.symbolic() ? d.param : "?";
  }
  return out + "]";
}

json to_json(const NodeSummary &n) {
  json weights = json::array();
  for (const auto &w : n.weights)
    weights.push_back({{"input_index", w.input_index}, {"elem_type", w.elem_type}, {"dims", w.dims}});
  return {{"op_type", n.op_type},
          {"domain", n.domain},
          {"name", n.name},
          {"attributes", n.attributes},
          {"output_shape", shape_to_json(n.output_shape)},
          {"weights", weights},
          {"parameter_count", n.parameter_count()}};
}

json to_json(const OnnxModelSummary &s) {
  auto sigs = [](const std::vector<TensorSignature> &v) {
    json arr = json::array();
    for (const auto &t : v)
      arr.push_back({{"name", t.name}, {"elem_type", t.elem_type}, {"shape", shape_to_json(t.shape)}});
    return arr;
  };
  json nodes = json::array();
  for (const auto &n : s.nodes) nodes.push_back(to_json(n));
  return {{"producer", s.producer},
          {"producer_version", s.producer_version},
          {"ir_version", s.ir_version},
          {"opset", s.opset},
          {"graph_name", s.graph_name},
          {"inputs", sigs(s.inputs)},
          {"outputs", sigs(s.outputs)},
          {"nodes", nodes},
          {"parameter_count", s.parameter_count},
          {"memory_size_bytes", s.memory_size_bytes},
          {"op_histogram", s.op_histogram}};
}

NodeSummary node_summary_from_json(const json &j) {
  NodeSummary n;
  n.op_type = j.at("op_type").get<std::string>();
  n.domain = j.value("domain", "");
  n.name = j.value("name", "");
  n.attributes = j.value("attributes", json::object());
  n.output_shape = shape_from_json(j.at("output_shape"));
  for (const auto &w : j.value("weights", json::array()))
    n.weights.push_back({w.at("input_index").get<int>(), w.at("elem_type").get<std::string>(),
                         w.at("dims").get<std::vector<std::int64_t>>()});
  return n;
}

OnnxModelSummary summary_from_json(const json &j) {
  OnnxModelSummary s;
  s.producer = j.at("producer").get<std::string>();
  s.producer_version = j.value("producer_version", "");
  s.ir_version = j.value("ir_version", 0);
  s.opset = j.at("opset").get<std::int64_t>();
  s.graph_name = j.value("graph_name", "");
  auto sigs = [](const json &arr) {
    std::vector<TensorSignature> out;
    for (const auto &t : arr)
      out.push_back({t.at("name").get<std::string>(), t.at("elem_type").get<std::string>(),
                     shape_from_json(t.at("shape"))});
    return out;
  };
  s.inputs = sigs(j.at("inputs"));
  s.outputs = sigs(j.at("outputs"));
  for (const auto &n : j.at("nodes")) s.nodes.push_back(node_summary_from_json(n));
  s.parameter_count = j.at("parameter_count").get<std::int64_t>();
  s.memory_size_bytes = j.at("memory_size_bytes").get<std::int64_t>();
  s.op_histogram = j.at("op_histogram").get<std::map<std::string, std::int64_t>>();
  return s;
}

} // namespace hub::onnx
