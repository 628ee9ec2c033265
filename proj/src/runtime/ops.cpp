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

#include "runtime/ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <type_traits>

#include "common/error.hpp"

namespace hub::runtime {

using onnx::Node;
using Shape = std::vector<std::int64_t>;
using Inputs = std::span<const TensorValue *const>;

namespace {

template <typename V> using elem_t = typename std::decay_t<V>::value_type;

template <typename T> using acc_t = std::conditional_t<std::is_integral_v<T>, std::int64_t, double>;

[[noreturn]] void shape_fail(const Node &node, const std::string &msg, const std::vector<Shape> &shapes) {
  nlohmann::json shape_list = nlohmann::json::array();
  std::string text;
  for (const auto &s : shapes) {
    shape_list.push_back(s);
    text += (text.empty() ? " " : " vs ") + shape_string(s);
  }
  fail(ErrorCode::shape_error, node.op_type + " '" + node.name + "': " + msg + text,
       {{"node", node.name}, {"op_type", node.op_type}, {"shapes", shape_list}});
}

[[noreturn]] void type_fail(const Node &node, const std::string &msg) {
  fail(ErrorCode::type_mismatch, node.op_type + " '" + node.name + "': " + msg,
       {{"node", node.name}, {"op_type", node.op_type}});
}

const TensorValue &need(const Node &node, Inputs in, std::size_t i) {
  if (i >= in.size() || !in[i])
    fail(ErrorCode::graph_invalid, node.op_type + " '" + node.name + "' is missing input " + std::to_string(i),
         {{"node", node.name}});
  return *in[i];
}

std::int64_t normalize_axis(const Node &node, std::int64_t axis, std::int64_t rank, const Shape &shape,
                            bool allow_rank = false) {
  const std::int64_t hi = allow_rank ? rank : rank - 1;
  if (axis < -rank || axis > hi) shape_fail(node, "axis " + std::to_string(axis) + " out of range for", {shape});
  return axis < 0 ? axis + rank : axis;
}

std::int64_t product(const Shape &s, std::size_t from, std::size_t to) {
  std::int64_t p = 1;
  for (std::size_t i = from; i < to; ++i) p *= s[i];
  return p;
}

Shape row_major_strides(const Shape &s) {
  Shape st(s.size(), 1);
  for (std::size_t i = s.size(); i-- > 1;) st[i - 1] = st[i] * s[i];
  return st;
}

Shape broadcast_shape(const Node &node, const Shape &a, const Shape &b) {
  const std::size_t r = std::max(a.size(), b.size());
  Shape out(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::int64_t da = i < r - a.size() ? 1 : a[i - (r - a.size())];
    const std::int64_t db = i < r - b.size() ? 1 : b[i - (r - b.size())];
    if (da != db && da != 1 && db != 1) shape_fail(node, "shapes do not broadcast:", {a, b});
    out[i] = da == 1 ? db : da;
  }
  return out;
}

// Strides of `in` viewed at the rank of `out`, 0 along broadcast dimensions.
Shape broadcast_strides(const Shape &in, const Shape &out) {
  const auto own = row_major_strides(in);
  Shape st(out.size(), 0);
  const std::size_t off = out.size() - in.size();
  for (std::size_t i = 0; i < in.size(); ++i) st[off + i] = in[i] == 1 ? 0 : own[i];
  return st;
}

// Calls fn(out_index, offset_a, offset_b) over every element of `out`.
template <typename F> void for_each_broadcast(const Shape &out, const Shape &sa, const Shape &sb, F fn) {
  const auto n = product(out, 0, out.size());
  if (n == 0) return;
  std::vector<std::int64_t> idx(out.size(), 0);
  std::int64_t oa = 0, ob = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    fn(i, oa, ob);
    for (std::size_t d = out.size(); d-- > 0;) {
      ++idx[d];
      oa += sa[d];
      ob += sb[d];
      if (idx[d] < out[d]) break;
      oa -= sa[d] * out[d];
      ob -= sb[d] * out[d];
      idx[d] = 0;
    }
  }
}

template <typename F> TensorValue binary(const Node &node, Inputs in, F f) {
  const auto &a = need(node, in, 0);
  const auto &b = need(node, in, 1);
  if (a.type() != b.type())
    type_fail(node, "operand types differ (" + std::string(to_string(a.type())) + " vs " +
                        std::string(to_string(b.type())) + ")");
  const auto out = broadcast_shape(node, a.shape(), b.shape());
  const auto sa = broadcast_strides(a.shape(), out);
  const auto sb = broadcast_strides(b.shape(), out);
  return std::visit(
      [&](const auto &av) -> TensorValue {
        using T = elem_t<decltype(av)>;
        const auto &bv = b.values<T>();
        std::vector<T> y(static_cast<std::size_t>(product(out, 0, out.size())));
        for_each_broadcast(out, sa, sb, [&](std::int64_t i, std::int64_t ia, std::int64_t ib) {
          y[static_cast<std::size_t>(i)] = f(av[static_cast<std::size_t>(ia)], bv[static_cast<std::size_t>(ib)]);
        });
        return TensorValue(out, std::move(y));
      },
      a.data());
}

template <typename F> TensorValue unary(const Node &node, Inputs in, bool float_only, F f) {
  const auto &x = need(node, in, 0);
  if (float_only && x.type() == ElemType::i64) type_fail(node, "requires a floating-point input");
  return std::visit(
      [&](const auto &xv) -> TensorValue {
        using T = elem_t<decltype(xv)>;
        std::vector<T> y(xv.size());
        for (std::size_t i = 0; i < xv.size(); ++i) y[i] = static_cast<T>(f(xv[i]));
        return TensorValue(x.shape(), std::move(y));
      },
      x.data());
}

TensorValue op_add(const Node &n, Inputs in, std::int64_t) {
  return binary(n, in, [](auto a, auto b) { return a + b; });
}
TensorValue op_sub(const Node &n, Inputs in, std::int64_t) {
  return binary(n, in, [](auto a, auto b) { return a - b; });
}
TensorValue op_mul(const Node &n, Inputs in, std::int64_t) {
  return binary(n, in, [](auto a, auto b) { return a * b; });
}
TensorValue op_div(const Node &n, Inputs in, std::int64_t) {
  return binary(n, in, [&n](auto a, auto b) {
    if constexpr (std::is_integral_v<decltype(a)>)
      if (b == 0)
        fail(ErrorCode::validation_error, "Div '" + n.name + "': integer division by zero", {{"node", n.name}});
    return a / b;
  });
}

TensorValue op_relu(const Node &n, Inputs in, std::int64_t) {
  return unary(n, in, false, [](auto x) { return x > 0 ? x : decltype(x){0}; });
}
TensorValue op_sigmoid(const Node &n, Inputs in, std::int64_t) {
  return unary(n, in, true, [](auto x) {
    const double v = static_cast<double>(x);
    return v >= 0 ? 1.0 / (1.0 + std::exp(-v)) : std::exp(v) / (1.0 + std::exp(v));
  });
}
TensorValue op_tanh(const Node &n, Inputs in, std::int64_t) {
  return unary(n, in, true, [](auto x) { return std::tanh(static_cast<double>(x)); });
}
TensorValue op_identity(const Node &n, Inputs in, std::int64_t) { return need(n, in, 0); }

TensorValue op_gemm(const Node &node, Inputs in, std::int64_t) {
  const auto &a = need(node, in, 0);
  const auto &b = need(node, in, 1);
  const TensorValue *c = in.size() > 2 ? in[2] : nullptr;
  if (a.type() != b.type() || (c && c->type() != a.type())) type_fail(node, "operand types differ");
  if (a.rank() != 2 || b.rank() != 2) shape_fail(node, "expects 2-D operands, got", {a.shape(), b.shape()});
  const bool ta = node.attr_int("transA", 0) != 0;
  const bool tb = node.attr_int("transB", 0) != 0;
  const double alpha = node.attr_float("alpha", 1.0f);
  const double beta = node.attr_float("beta", 1.0f);
  const auto M = ta ? a.shape()[1] : a.shape()[0];
  const auto K = ta ? a.shape()[0] : a.shape()[1];
  const auto Kb = tb ? b.shape()[1] : b.shape()[0];
  const auto N = tb ? b.shape()[0] : b.shape()[1];
  if (K != Kb) shape_fail(node, "inner dimensions differ:", {a.shape(), b.shape()});
  const Shape out{M, N};
  Shape sc;
  if (c) {
    if (c->rank() > 2) shape_fail(node, "bias does not broadcast to the output:", {c->shape(), out});
    for (std::size_t i = 0; i < c->shape().size(); ++i) {
      const auto d = c->shape()[i];
      const auto o = out[out.size() - c->shape().size() + i];
      if (d != 1 && d != o) shape_fail(node, "bias does not broadcast to the output:", {c->shape(), out});
    }
    sc = broadcast_strides(c->shape(), out);
  }
  return std::visit(
      [&](const auto &av) -> TensorValue {
        using T = elem_t<decltype(av)>;
        const auto &bv = b.values<T>();
        std::vector<T> y(static_cast<std::size_t>(M * N));
        for (std::int64_t i = 0; i < M; ++i)
          for (std::int64_t j = 0; j < N; ++j) {
            double acc = 0;
            for (std::int64_t k = 0; k < K; ++k) {
              const auto x = av[static_cast<std::size_t>(ta ? k * M + i : i * K + k)];
              const auto w = bv[static_cast<std::size_t>(tb ? j * K + k : k * N + j)];
              acc += static_cast<double>(x) * static_cast<double>(w);
            }
            double v = alpha * acc;
            if (c) v += beta * static_cast<double>(c->values<T>()[static_cast<std::size_t>(i * sc[0] + j * sc[1])]);
            y[static_cast<std::size_t>(i * N + j)] = static_cast<T>(v);
          }
        return TensorValue(out, std::move(y));
      },
      a.data());
}

TensorValue op_matmul(const Node &node, Inputs in, std::int64_t) {
  const auto &a = need(node, in, 0);
  const auto &b = need(node, in, 1);
  if (a.type() != b.type()) type_fail(node, "operand types differ");
  if (a.rank() == 0 || b.rank() == 0) shape_fail(node, "scalar operands are not allowed:", {a.shape(), b.shape()});
  Shape as = a.shape(), bs = b.shape();
  const bool a_vec = as.size() == 1, b_vec = bs.size() == 1;
  if (a_vec) as.insert(as.begin(), 1);
  if (b_vec) bs.push_back(1);
  const auto M = as[as.size() - 2], K = as.back(), K2 = bs[bs.size() - 2], N = bs.back();
  if (K != K2) shape_fail(node, "inner dimensions differ:", {a.shape(), b.shape()});
  const Shape ba(as.begin(), as.end() - 2), bb(bs.begin(), bs.end() - 2);
  const Shape batch = broadcast_shape(node, ba, bb);
  // Batch strides counted in whole matrices.
  Shape sa = broadcast_strides(ba, batch), sb = broadcast_strides(bb, batch);
  for (auto &s : sa) s *= M * K;
  for (auto &s : sb) s *= K * N;

  Shape out = batch;
  if (!a_vec) out.push_back(M);
  if (!b_vec) out.push_back(N);

  return std::visit(
      [&](const auto &av) -> TensorValue {
        using T = elem_t<decltype(av)>;
        using Acc = acc_t<T>;
        const auto &bv = b.values<T>();
        std::vector<T> y(static_cast<std::size_t>(product(batch, 0, batch.size()) * M * N));
        std::size_t w = 0;
        auto matmul = [&](std::int64_t, std::int64_t oa, std::int64_t ob) {
          for (std::int64_t i = 0; i < M; ++i)
            for (std::int64_t j = 0; j < N; ++j) {
              Acc acc = 0;
              for (std::int64_t k = 0; k < K; ++k)
                acc += static_cast<Acc>(av[static_cast<std::size_t>(oa + i * K + k)]) *
                       static_cast<Acc>(bv[static_cast<std::size_t>(ob + k * N + j)]);
              y[w++] = static_cast<T>(acc);
            }
        };
        if (batch.empty())
          matmul(0, 0, 0);
        else
          for_each_broadcast(batch, sa, sb, matmul);
        return TensorValue(out, std::move(y));
      },
      a.data());
}

TensorValue op_softmax(const Node &node, Inputs in, std::int64_t opset) {
  const auto &x = need(node, in, 0);
  if (x.type() == ElemType::i64) type_fail(node, "requires a floating-point input");
  const auto &s = x.shape();
  const auto rank = x.rank();
  if (rank == 0) shape_fail(node, "needs at least one dimension:", {s});
  std::int64_t outer, len, inner;
  if (opset >= 13) {
    const auto axis = normalize_axis(node, node.attr_int("axis", -1), rank, s);
    outer = product(s, 0, static_cast<std::size_t>(axis));
    len = s[static_cast<std::size_t>(axis)];
    inner = product(s, static_cast<std::size_t>(axis) + 1, s.size());
  } else {
    // Older opsets flatten to [prod(before axis), prod(from axis)].
    const auto axis = normalize_axis(node, node.attr_int("axis", 1), rank, s, true);
    outer = product(s, 0, static_cast<std::size_t>(axis));
    len = product(s, static_cast<std::size_t>(axis), s.size());
    inner = 1;
  }
  return std::visit(
      [&](const auto &xv) -> TensorValue {
        using T = elem_t<decltype(xv)>;
        std::vector<T> y(xv.size());
        std::vector<double> e(static_cast<std::size_t>(len));
        for (std::int64_t o = 0; o < outer; ++o)
          for (std::int64_t p = 0; p < inner; ++p) {
            const auto at = [&](std::int64_t k) { return static_cast<std::size_t>((o * len + k) * inner + p); };
            double mx = -std::numeric_limits<double>::infinity();
            for (std::int64_t k = 0; k < len; ++k) mx = std::max(mx, static_cast<double>(xv[at(k)]));
            double sum = 0;
            for (std::int64_t k = 0; k < len; ++k) sum += e[static_cast<std::size_t>(k)] = std::exp(xv[at(k)] - mx);
            for (std::int64_t k = 0; k < len; ++k) y[at(k)] = static_cast<T>(e[static_cast<std::size_t>(k)] / sum);
          }
        return TensorValue(s, std::move(y));
      },
      x.data());
}

TensorValue with_shape(const TensorValue &x, Shape shape) { return TensorValue(std::move(shape), x.data()); }

TensorValue op_reshape(const Node &node, Inputs in, std::int64_t) {
  const auto &x = need(node, in, 0);
  const auto &spec = need(node, in, 1);
  if (spec.type() != ElemType::i64 || spec.rank() != 1) type_fail(node, "shape input must be a 1-D int64 tensor");
  const bool allowzero = node.attr_int("allowzero", 0) != 0;
  Shape out = spec.values<std::int64_t>();
  std::int64_t infer = -1, known = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] == 0 && !allowzero) {
      if (i >= x.shape().size()) shape_fail(node, "0 refers past the input rank:", {x.shape(), out});
      out[i] = x.shape()[i];
    }
    if (out[i] == -1) {
      if (infer >= 0) shape_fail(node, "more than one -1 in target shape:", {out});
      infer = static_cast<std::int64_t>(i);
    } else if (out[i] < 0) {
      shape_fail(node, "negative target dimension:", {out});
    } else {
      known *= out[i];
    }
  }
  const auto total = static_cast<std::int64_t>(x.size());
  if (infer >= 0) {
    if (known == 0 || total % known != 0) shape_fail(node, "cannot infer -1 for", {x.shape(), out});
    out[static_cast<std::size_t>(infer)] = total / known;
  } else if (known != total) {
    shape_fail(node, "element count differs:", {x.shape(), out});
  }
  return with_shape(x, std::move(out));
}

TensorValue op_flatten(const Node &node, Inputs in, std::int64_t) {
  const auto &x = need(node, in, 0);
  const auto axis = normalize_axis(node, node.attr_int("axis", 1), x.rank(), x.shape(), true);
  const auto &s = x.shape();
  return with_shape(x, {product(s, 0, static_cast<std::size_t>(axis)), product(s, static_cast<std::size_t>(axis), s.size())});
}

TensorValue op_transpose(const Node &node, Inputs in, std::int64_t) {
  const auto &x = need(node, in, 0);
  const auto &s = x.shape();
  const auto rank = s.size();
  Shape perm(rank);
  if (const auto *a = node.attr("perm")) {
    perm = a->ints;
  } else {
    for (std::size_t i = 0; i < rank; ++i) perm[i] = static_cast<std::int64_t>(rank - 1 - i);
  }
  Shape sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  bool valid = sorted.size() == rank;
  for (std::size_t i = 0; valid && i < rank; ++i) valid = sorted[i] == static_cast<std::int64_t>(i);
  if (!valid) shape_fail(node, "perm is not a permutation of the input axes:", {s, perm});

  const auto in_strides = row_major_strides(s);
  Shape out(rank), gather(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    out[i] = s[static_cast<std::size_t>(perm[i])];
    gather[i] = in_strides[static_cast<std::size_t>(perm[i])];
  }
  const Shape zero(rank, 0);
  return std::visit(
      [&](const auto &xv) -> TensorValue {
        using T = elem_t<decltype(xv)>;
        std::vector<T> y(xv.size());
        if (rank == 0) {
          y = xv;
        } else {
          for_each_broadcast(out, gather, zero, [&](std::int64_t i, std::int64_t src, std::int64_t) {
            y[static_cast<std::size_t>(i)] = xv[static_cast<std::size_t>(src)];
          });
        }
        return TensorValue(out, std::move(y));
      },
      x.data());
}

TensorValue op_concat(const Node &node, Inputs in, std::int64_t) {
  if (in.empty()) fail(ErrorCode::graph_invalid, "Concat '" + node.name + "' has no inputs", {{"node", node.name}});
  const auto &first = need(node, in, 0);
  const auto rank = first.rank();
  if (!node.attr("axis")) fail(ErrorCode::graph_invalid, "Concat '" + node.name + "' needs an axis", {{"node", node.name}});
  const auto axis = static_cast<std::size_t>(normalize_axis(node, node.attr_int("axis", 0), rank, first.shape()));
  Shape out = first.shape();
  out[axis] = 0;
  for (std::size_t k = 0; k < in.size(); ++k) {
    const auto &t = need(node, in, k);
    if (t.type() != first.type()) type_fail(node, "operand types differ");
    if (t.rank() != rank) shape_fail(node, "inputs differ in rank:", {first.shape(), t.shape()});
    for (std::size_t d = 0; d < out.size(); ++d)
      if (d != axis && t.shape()[d] != first.shape()[d])
        shape_fail(node, "inputs differ off the concat axis:", {first.shape(), t.shape()});
    out[axis] += t.shape()[axis];
  }
  const auto outer = product(out, 0, axis);
  const auto inner = product(out, axis + 1, out.size());
  return std::visit(
      [&](const auto &fv) -> TensorValue {
        using T = elem_t<decltype(fv)>;
        std::vector<T> y;
        y.reserve(static_cast<std::size_t>(product(out, 0, out.size())));
        for (std::int64_t o = 0; o < outer; ++o)
          for (std::size_t k = 0; k < in.size(); ++k) {
            const auto &v = in[k]->values<T>();
            const auto chunk = in[k]->shape()[axis] * inner;
            y.insert(y.end(), v.begin() + o * chunk, v.begin() + (o + 1) * chunk);
          }
        return TensorValue(out, std::move(y));
      },
      first.data());
}

template <typename To, typename From> To cast_value(From v) {
  if constexpr (std::is_integral_v<To> && std::is_floating_point_v<From>) {
    // Truncate toward zero; NaN and out-of-range land on the x86 sentinel.
    if (!std::isfinite(v) || v >= 9.2233720368547758e18 || v < -9.2233720368547758e18)
      return std::numeric_limits<std::int64_t>::min();
  }
  return static_cast<To>(v);
}

TensorValue op_cast(const Node &node, Inputs in, std::int64_t) {
  const auto &x = need(node, in, 0);
  const auto to = elem_type_from_onnx(static_cast<int>(node.attr_int("to", 0)));
  return std::visit(
      [&](const auto &xv) -> TensorValue {
        auto convert = [&](auto tag) {
          using To = decltype(tag);
          std::vector<To> y(xv.size());
          for (std::size_t i = 0; i < xv.size(); ++i) y[i] = cast_value<To>(xv[i]);
          return TensorValue(x.shape(), std::move(y));
        };
        switch (to) {
        case ElemType::f32: return convert(float{});
        case ElemType::f64: return convert(double{});
        case ElemType::i64: return convert(std::int64_t{});
        }
        fail(ErrorCode::internal_error, "unreachable");
      },
      x.data());
}

TensorValue op_argmax(const Node &node, Inputs in, std::int64_t) {
  const auto &x = need(node, in, 0);
  const auto &s = x.shape();
  if (s.empty()) shape_fail(node, "needs at least one dimension:", {s});
  const auto axis = static_cast<std::size_t>(normalize_axis(node, node.attr_int("axis", 0), x.rank(), s));
  const bool keep = node.attr_int("keepdims", 1) != 0;
  const bool last = node.attr_int("select_last_index", 0) != 0;
  if (s[axis] == 0) shape_fail(node, "cannot reduce an empty axis:", {s});
  const auto outer = product(s, 0, axis), len = s[axis], inner = product(s, axis + 1, s.size());
  Shape out = s;
  if (keep)
    out[axis] = 1;
  else
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(axis));
  std::vector<std::int64_t> y(static_cast<std::size_t>(outer * inner));
  std::visit(
      [&](const auto &xv) {
        for (std::int64_t o = 0; o < outer; ++o)
          for (std::int64_t p = 0; p < inner; ++p) {
            std::int64_t best = 0;
            auto best_v = xv[static_cast<std::size_t>(o * len * inner + p)];
            for (std::int64_t k = 1; k < len; ++k) {
              const auto v = xv[static_cast<std::size_t>((o * len + k) * inner + p)];
              if (v > best_v || (last && v == best_v)) {
                best = k;
                best_v = v;
              }
            }
            y[static_cast<std::size_t>(o * inner + p)] = best;
          }
      },
      x.data());
  return TensorValue(out, std::move(y));
}

TensorValue op_constant(const Node &node, Inputs, std::int64_t) { return constant_value(node); }

const std::map<std::string, OpFn, std::less<>> &op_table() {
  static const std::map<std::string, OpFn, std::less<>> table = {
      {"Add", op_add},         {"ArgMax", op_argmax},   {"Cast", op_cast},         {"Concat", op_concat},
      {"Constant", op_constant}, {"Div", op_div},       {"Flatten", op_flatten},   {"Gemm", op_gemm},
      {"Identity", op_identity}, {"MatMul", op_matmul}, {"Mul", op_mul},           {"Relu", op_relu},
      {"Reshape", op_reshape}, {"Sigmoid", op_sigmoid}, {"Softmax", op_softmax},   {"Sub", op_sub},
      {"Tanh", op_tanh},       {"Transpose", op_transpose},
  };
  return table;
}

} // namespace

OpFn find_op(std::string_view domain, std::string_view op_type) {
  if (!domain.empty() && domain != "ai.onnx") return nullptr;
  const auto &table = op_table();
  const auto it = table.find(op_type);
  return it == table.end() ? nullptr : it->second;
}

std::vector<std::string> supported_ops() {
  std::vector<std::string> out;
  for (const auto &[name, fn] : op_table()) out.push_back(name);
  return out;
}

void check_node_supported(const Node &node) {
  if (!find_op(node.domain, node.op_type)) {
    const std::string full = node.domain.empty() ? node.op_type : node.domain + "." + node.op_type;
    fail(ErrorCode::unsupported_op, "operator " + full + " is not supported by the runtime",
         {{"op_type", node.op_type}, {"domain", node.domain}, {"node", node.name}});
  }
  if (node.op_type == "Cast") {
    const auto *to = node.attr("to");
    if (!to) fail(ErrorCode::graph_invalid, "Cast '" + node.name + "' has no 'to' attribute", {{"node", node.name}});
    try {
      elem_type_from_onnx(static_cast<int>(to->i));
    } catch (const Error &e) {
      fail(ErrorCode::unsupported_op, "Cast '" + node.name + "': " + e.what(),
           {{"op_type", "Cast"}, {"node", node.name}});
    }
  }
  if (node.op_type == "Constant") constant_value(node);
}

TensorValue constant_value(const Node &node) {
  for (const auto &a : node.attributes) {
    if (a.name == "value" && a.t) return tensor_from_onnx(*a.t);
    if (a.name == "value_float") return TensorValue({}, std::vector<float>{a.f});
    if (a.name == "value_floats") return TensorValue({static_cast<std::int64_t>(a.floats.size())}, a.floats);
    if (a.name == "value_int") return TensorValue({}, std::vector<std::int64_t>{a.i});
    if (a.name == "value_ints") return TensorValue({static_cast<std::int64_t>(a.ints.size())}, a.ints);
  }
  fail(ErrorCode::unsupported_op, "Constant '" + node.name + "' uses an unsupported value attribute",
       {{"op_type", "Constant"}, {"node", node.name}});
}

} // namespace hub::runtime
