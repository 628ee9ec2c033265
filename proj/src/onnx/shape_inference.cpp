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

#include "onnx/shape_inference.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace hub::onnx {

namespace {

using Values = std::unordered_map<std::string, InferredValue>;
using Constants = std::unordered_map<std::string, std::vector<std::int64_t>>;

Dim broadcast_dim(const Dim &a, const Dim &b, bool &ok) {
  if (a.known() && b.known()) {
    if (a.value == b.value || b.value == 1) return a;
    if (a.value == 1) return b;
    ok = false;
    return Dim::unknown();
  }
  if (a.known()) return a.value == 1 ? b : a;
  if (b.known()) return b.value == 1 ? a : b;
  if (a.symbolic() && a == b) return a;
  return Dim::unknown();
}

// Product of dims; symbolic only when a single symbol times known ones.
Dim product(const Shape &s, std::size_t begin, std::size_t end) {
  std::int64_t known = 1;
  const Dim *symbol = nullptr;
  for (std::size_t i = begin; i < end; ++i) {
    if (s[i].known()) {
      known *= s[i].value;
    } else if (s[i].symbolic() && !symbol) {
      symbol = &s[i];
    } else {
      return Dim::unknown();
    }
  }
  if (!symbol) return Dim::fixed(known);
  return known == 1 ? *symbol : Dim::unknown();
}

std::int64_t normalize_axis(std::int64_t axis, std::int64_t rank) {
  return axis < 0 ? axis + rank : axis;
}

std::optional<Shape> input_shape(const Values &values, const Node &node, std::size_t i) {
  if (i >= node.inputs.size()) return std::nullopt;
  auto it = values.find(node.inputs[i]);
  if (it == values.end()) return std::nullopt;
  return it->second.shape;
}

int input_type(const Values &values, const Node &node, std::size_t i) {
  if (i >= node.inputs.size()) return kUndefined;
  auto it = values.find(node.inputs[i]);
  return it == values.end() ? kUndefined : it->second.elem_type;
}

std::optional<Shape> infer_matmul(const Shape &a0, const Shape &b0) {
  if (a0.empty() || b0.empty()) return std::nullopt;
  Shape a = a0, b = b0;
  const bool a_vec = a.size() == 1, b_vec = b.size() == 1;
  if (a_vec) a.insert(a.begin(), Dim::fixed(1));
  if (b_vec) b.push_back(Dim::fixed(1));
  Shape batch_a(a.begin(), a.end() - 2), batch_b(b.begin(), b.end() - 2);
  auto batch = broadcast_shapes(batch_a, batch_b);
  if (!batch) return std::nullopt;
  Shape out = *batch;
  if (!a_vec) out.push_back(a[a.size() - 2]);
  if (!b_vec) out.push_back(b.back());
  return out;
}

std::optional<Shape> infer_reshape(const Node &node, const Shape &in,
                                   const std::vector<std::int64_t> &target) {
  const bool allow_zero = node.attr_int("allowzero", 0) != 0;
  Shape out;
  int infer_at = -1;
  for (std::size_t i = 0; i < target.size(); ++i) {
    const auto t = target[i];
    if (t == 0 && !allow_zero) {
      if (i >= in.size()) return std::nullopt;
      out.push_back(in[i]);
    } else if (t == -1) {
      if (infer_at >= 0) return std::nullopt;
      infer_at = static_cast<int>(i);
      out.push_back(Dim::unknown());
    } else if (t >= 0) {
      out.push_back(Dim::fixed(t));
    } else {
      return std::nullopt;
    }
  }
  if (infer_at < 0) return out;

  // Cancel input dims that were copied through by a 0 at the same position,
  // then the remaining input product over the remaining output product gives
  // the -1 dim.
  std::int64_t in_known = 1, out_known = 1;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const bool copied = i < target.size() && target[i] == 0 && !allow_zero;
    if (copied) continue;
    if (!in[i].known()) return out;
    in_known *= in[i].value;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (static_cast<int>(i) == infer_at) continue;
    const bool copied = target[i] == 0 && !allow_zero;
    if (copied) continue;
    out_known *= out[i].value;
  }
  if (out_known != 0 && in_known % out_known == 0) out[infer_at] = Dim::fixed(in_known / out_known);
  return out;
}

InferredValue infer_node(const Node &node, const Values &values, const Constants &constants) {
  const std::string &op = node.op_type;
  InferredValue out;
  out.elem_type = input_type(values, node, 0);
  if (!node.domain.empty() && node.domain != "ai.onnx") {
    out.elem_type = kUndefined;
    return out;
  }

  if (op == "Relu" || op == "Sigmoid" || op == "Tanh" || op == "Softmax" || op == "Identity") {
    out.shape = input_shape(values, node, 0);
  } else if (op == "Cast") {
    out.shape = input_shape(values, node, 0);
    out.elem_type = static_cast<int>(node.attr_int("to", kUndefined));
  } else if (op == "Add" || op == "Sub" || op == "Mul" || op == "Div") {
    auto a = input_shape(values, node, 0), b = input_shape(values, node, 1);
    if (a && b) out.shape = broadcast_shapes(*a, *b);
  } else if (op == "Gemm") {
    auto a = input_shape(values, node, 0), b = input_shape(values, node, 1);
    if (a && b && a->size() == 2 && b->size() == 2) {
      const Dim m = node.attr_int("transA", 0) ? (*a)[1] : (*a)[0];
      const Dim n = node.attr_int("transB", 0) ? (*b)[0] : (*b)[1];
      out.shape = Shape{m, n};
    }
  } else if (op == "MatMul") {
    auto a = input_shape(values, node, 0), b = input_shape(values, node, 1);
    if (a && b) out.shape = infer_matmul(*a, *b);
  } else if (op == "Reshape") {
    auto in = input_shape(values, node, 0);
    auto it = node.inputs.size() > 1 ? constants.find(node.inputs[1]) : constants.end();
    if (in && it != constants.end()) out.shape = infer_reshape(node, *in, it->second);
  } else if (op == "Flatten") {
    if (auto in = input_shape(values, node, 0)) {
      const auto rank = static_cast<std::int64_t>(in->size());
      const auto axis = normalize_axis(node.attr_int("axis", 1), rank);
      if (axis >= 0 && axis <= rank)
        out.shape = Shape{product(*in, 0, static_cast<std::size_t>(axis)),
                          product(*in, static_cast<std::size_t>(axis), in->size())};
    }
  } else if (op == "Transpose") {
    if (auto in = input_shape(values, node, 0)) {
      std::vector<std::int64_t> perm;
      if (const Attribute *p = node.attr("perm")) perm = p->ints;
      else
        for (auto i = static_cast<std::int64_t>(in->size()) - 1; i >= 0; --i) perm.push_back(i);
      if (perm.size() == in->size()) {
        Shape s;
        for (auto p : perm) {
          if (p < 0 || p >= static_cast<std::int64_t>(in->size())) return out;
          s.push_back((*in)[static_cast<std::size_t>(p)]);
        }
        out.shape = s;
      }
    }
  } else if (op == "Concat") {
    std::vector<Shape> shapes;
    for (std::size_t i = 0; i < node.inputs.size(); ++i) {
      auto s = input_shape(values, node, i);
      if (!s) return out;
      shapes.push_back(*s);
    }
    if (shapes.empty()) return out;
    const auto rank = static_cast<std::int64_t>(shapes[0].size());
    const auto axis = normalize_axis(node.attr_int("axis", 0), rank);
    if (axis < 0 || axis >= rank) return out;
    Shape s = shapes[0];
    std::int64_t total = 0;
    bool known = true;
    for (const auto &sh : shapes) {
      if (static_cast<std::int64_t>(sh.size()) != rank) return out;
      const Dim &d = sh[static_cast<std::size_t>(axis)];
      if (d.known()) total += d.value;
      else known = false;
    }
    s[static_cast<std::size_t>(axis)] = known ? Dim::fixed(total) : Dim::unknown();
    out.shape = s;
  } else if (op == "Constant") {
    out.elem_type = kUndefined;
    if (const Attribute *a = node.attr("value"); a && a->t) {
      out.elem_type = a->t->data_type;
      Shape s;
      for (auto d : a->t->dims) s.push_back(Dim::fixed(d));
      out.shape = s;
    } else if (node.attr("value_float")) {
      out = {kFloat, Shape{}};
    } else if (node.attr("value_int")) {
      out = {kInt64, Shape{}};
    } else if (const Attribute *fs = node.attr("value_floats")) {
      out = {kFloat, Shape{Dim::fixed(static_cast<std::int64_t>(fs->floats.size()))}};
    } else if (const Attribute *is = node.attr("value_ints")) {
      out = {kInt64, Shape{Dim::fixed(static_cast<std::int64_t>(is->ints.size()))}};
    }
  } else if (op == "ArgMax") {
    out.elem_type = kInt64;
    if (auto in = input_shape(values, node, 0)) {
      const auto rank = static_cast<std::int64_t>(in->size());
      const auto axis = normalize_axis(node.attr_int("axis", 0), rank);
      if (axis >= 0 && axis < rank) {
        Shape s = *in;
        if (node.attr_int("keepdims", 1)) s[static_cast<std::size_t>(axis)] = Dim::fixed(1);
        else s.erase(s.begin() + axis);
        out.shape = s;
      }
    }
  } else {
    out.elem_type = kUndefined;
  }
  return out;
}

void record_constant(const Node &node, Constants &constants) {
  if (node.op_type != "Constant" || node.outputs.empty()) return;
  if (const Attribute *a = node.attr("value"); a && a->t && a->t->data_type == kInt64) {
    try {
      constants[node.outputs[0]] = a->t->to_int64s();
    } catch (...) {
    }
  } else if (const Attribute *is = node.attr("value_ints")) {
    constants[node.outputs[0]] = is->ints;
  }
}

} // namespace

std::optional<Shape> broadcast_shapes(const Shape &a, const Shape &b) {
  const std::size_t rank = std::max(a.size(), b.size());
  Shape out(rank);
  bool ok = true;
  for (std::size_t i = 0; i < rank; ++i) {
    const Dim da = i < rank - a.size() ? Dim::fixed(1) : a[i - (rank - a.size())];
    const Dim db = i < rank - b.size() ? Dim::fixed(1) : b[i - (rank - b.size())];
    out[i] = broadcast_dim(da, db, ok);
  }
  if (!ok) return std::nullopt;
  return out;
}

std::vector<InferredValue> infer_node_shapes(const Model &model) {
  const Graph &g = model.graph;
  Values values;
  Constants constants;
  for (const auto &vi : g.inputs) values[vi.name] = {vi.elem_type, vi.shape};
  for (const auto &t : g.initializers) {
    Shape s;
    for (auto d : t.dims) s.push_back(Dim::fixed(d));
    values[t.name] = {t.data_type, s};
    if (t.data_type == kInt64) {
      try {
        constants[t.name] = t.to_int64s();
      } catch (...) {
      }
    }
  }

  std::vector<InferredValue> result;
  result.reserve(g.nodes.size());
  for (const auto &node : g.nodes) {
    InferredValue v = infer_node(node, values, constants);
    record_constant(node, constants);
    if (!node.outputs.empty() && !node.outputs[0].empty()) values[node.outputs[0]] = v;
    for (std::size_t i = 1; i < node.outputs.size(); ++i) values[node.outputs[i]] = {};
    result.push_back(std::move(v));
  }
  return result;
}

} // namespace hub::onnx
