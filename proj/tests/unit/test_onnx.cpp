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

#include <doctest.h>

#include <random>

#include "common/error.hpp"
#include "onnx/diff.hpp"
#include "onnx/model.hpp"
#include "onnx/summary.hpp"
#include "support/fixtures.hpp"
#include "support/onnx_builder.hpp"

using namespace hub;
using namespace hub::onnx;
using hub::testing::as_bytes;
using hub::testing::fixture;

namespace {

OnnxModelSummary summarize(const std::string &bytes) { return extract_summary(parse_model(as_bytes(bytes))); }

OnnxModelSummary summarize_fixture(const std::string &name) { return summarize(fixture(name)); }

ErrorCode code_of(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected hub::Error");
  return ErrorCode::internal_error;
}

std::vector<std::string> op_types(const OnnxModelSummary &s) {
  std::vector<std::string> ops;
  for (const auto &n : s.nodes) ops.push_back(n.op_type);
  return ops;
}

} // namespace

TEST_CASE("parse fixture MLP") {
  const auto bytes = fixture("mlp_4_8_3.onnx");
  const Model m = parse_model(as_bytes(bytes));
  REQUIRE(m.graph.nodes.size() == 4);
  CHECK(m.graph.nodes[0].op_type == "Gemm");
  CHECK(m.graph.nodes[1].op_type == "Relu");
  CHECK(m.graph.nodes[2].op_type == "Gemm");
  CHECK(m.graph.nodes[3].op_type == "Softmax");
  CHECK(m.opset() == 13);
  CHECK(m.producer_name == "modelhub-fixtures");
  CHECK(m.graph.initializers.size() == 4);
}

TEST_CASE("every strict prefix of a model fails to parse") {
  const auto bytes = fixture("mlp_4_8_3.onnx");
  for (std::size_t len = 0; len < bytes.size(); ++len) {
    const std::string cut = bytes.substr(0, len);
    CHECK(code_of([&] { parse_model(as_bytes(cut)); }) == ErrorCode::onnx_parse_error);
  }
}

TEST_CASE("garbage bytes fail to parse") {
  const std::string junk = "\xff\xff\xff\xff\xff\xff\xff\xff\xff\xff\xff";
  CHECK(code_of([&] { parse_model(as_bytes(junk)); }) == ErrorCode::onnx_parse_error);
}

TEST_CASE("dangling reference is graph-invalid") {
  const auto bytes = fixture("dangling.onnx");
  try {
    parse_model(as_bytes(bytes));
    FAIL("expected error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::graph_invalid);
    CHECK(e.details()["tensor"] == "GHOST");
  }
}

TEST_CASE("duplicate producers and cycles are graph-invalid") {
  testing::ModelSpec dup;
  dup.inputs = {{"X", 1, {std::int64_t{2}}}};
  dup.outputs = {{"Y", 1, {std::int64_t{2}}}};
  dup.nodes = {{"Relu", "a", {"X"}, {"Y"}, {}}, {"Relu", "b", {"X"}, {"Y"}, {}}};
  CHECK(code_of([&] { parse_model(as_bytes(encode_model(dup))); }) == ErrorCode::graph_invalid);

  testing::ModelSpec cyc;
  cyc.inputs = {{"X", 1, {std::int64_t{2}}}};
  cyc.outputs = {{"B", 1, {std::int64_t{2}}}};
  cyc.nodes = {{"Add", "a", {"X", "B"}, {"A"}, {}}, {"Relu", "b", {"A"}, {"B"}, {}}};
  CHECK(code_of([&] { parse_model(as_bytes(encode_model(cyc))); }) == ErrorCode::graph_invalid);
}

TEST_CASE("nodes are reordered topologically, stable otherwise") {
  testing::ModelSpec s;
  s.inputs = {{"X", 1, {std::int64_t{2}}}};
  s.outputs = {{"Z", 1, {std::int64_t{2}}}};
  s.nodes = {{"Sigmoid", "late", {"Y"}, {"Z"}, {}},
             {"Tanh", "free", {"X"}, {"T"}, {}},
             {"Relu", "early", {"X"}, {"Y"}, {}}};
  const Model m = parse_model(as_bytes(encode_model(s)));
  CHECK(m.graph.nodes[0].name == "free");
  CHECK(m.graph.nodes[1].name == "early");
  CHECK(m.graph.nodes[2].name == "late");
}

TEST_CASE("summary parameter and memory counts") {
  const auto s = summarize_fixture("mlp_4_8_3.onnx");
  CHECK(s.parameter_count == 67);
  CHECK(s.memory_size_bytes == 268);
  CHECK(s.op_histogram == std::map<std::string, std::int64_t>{{"Gemm", 2}, {"Relu", 1}, {"Softmax", 1}});
  CHECK(op_histogram_headline(s) == "Gemm:2 Relu:1 Softmax:1");
  REQUIRE(s.inputs.size() == 1);
  CHECK(s.inputs[0].name == "X");
  CHECK(shape_to_string(s.inputs[0].shape) == "[N,4]");

  CHECK(summarize_fixture("mlp_4_16_3.onnx").parameter_count == 131);
  CHECK(summarize_fixture("no_initializers.onnx").parameter_count == 0);
  CHECK(summarize_fixture("no_initializers.onnx").memory_size_bytes == 0);
}

TEST_CASE("typed (non-raw) tensor payloads count the same") {
  auto spec = testing::mlp_spec(4, 8, 3, 1);
  for (auto &t : spec.initializers) t.raw = false;
  const auto s = summarize(encode_model(spec));
  CHECK(s.parameter_count == 67);
  CHECK(s.memory_size_bytes == 268);
}

TEST_CASE("static shape propagation") {
  const auto s = summarize_fixture("mlp_4_8_3.onnx");
  CHECK(shape_to_string(s.nodes[0].output_shape) == "[N,8]");
  CHECK(shape_to_string(s.nodes[1].output_shape) == "[N,8]");
  CHECK(shape_to_string(s.nodes[2].output_shape) == "[N,3]");
  CHECK(shape_to_string(s.nodes[3].output_shape) == "[N,3]");
  CHECK(s.nodes[0].weights.size() == 2);
  CHECK(s.nodes[0].weights[0].dims == std::vector<std::int64_t>{4, 8});

  // Unsupported ops are summarized with a dynamic shape.
  const auto u = summarize_fixture("unsupported_op.onnx");
  CHECK(u.nodes[0].op_type == "LeakyRelu");
  CHECK(!u.nodes[0].output_shape);
  CHECK(u.nodes[0].attributes["alpha"].get<double>() == doctest::Approx(0.1));

  // Reshape with 0 / -1 against a symbolic batch.
  testing::ModelSpec r;
  r.inputs = {{"X", 1, {std::string("N"), std::int64_t{3}, std::int64_t{4}}}};
  r.outputs = {{"Y", 1, {}}};
  r.initializers = {{"S", 7, {2}, {}, {}, {0, -1}, true}};
  r.nodes = {{"Reshape", "r", {"X", "S"}, {"R"}, {}},
             {"Flatten", "f", {"X"}, {"F"}, {testing::AttrSpec::integer("axis", 1)}},
             {"Transpose", "t", {"X"}, {"T"}, {testing::AttrSpec::int_list("perm", {2, 0, 1})}},
             {"ArgMax", "am", {"X"}, {"Y"}, {testing::AttrSpec::integer("axis", 2),
                                             testing::AttrSpec::integer("keepdims", 0)}}};
  const auto rs = summarize(encode_model(r));
  CHECK(shape_to_string(rs.nodes[0].output_shape) == "[N,12]");
  CHECK(shape_to_string(rs.nodes[1].output_shape) == "[N,12]");
  CHECK(shape_to_string(rs.nodes[2].output_shape) == "[4,N,3]");
  CHECK(shape_to_string(rs.nodes[3].output_shape) == "[N,3]");
}

TEST_CASE("attributes are captured losslessly") {
  testing::ModelSpec s;
  s.inputs = {{"A", 1, {std::int64_t{2}, std::int64_t{2}}}};
  s.outputs = {{"Y", 1, {}}};
  s.initializers = {{"B", 1, {2, 2}, {1, 0, 0, 1}, {}, {}, true}};
  s.nodes = {{"Gemm", "g", {"A", "B"}, {"Y"},
              {testing::AttrSpec::real("alpha", 0.1f), testing::AttrSpec::integer("transB", 1),
               testing::AttrSpec::str("note", "hello"), testing::AttrSpec::int_list("dims", {3, -1, 7})}}};
  const auto sum = summarize(encode_model(s));
  const auto &attrs = sum.nodes[0].attributes;
  CHECK(static_cast<float>(attrs["alpha"].get<double>()) == 0.1f);
  CHECK(attrs["transB"] == 1);
  CHECK(attrs["note"] == "hello");
  CHECK(attrs["dims"] == nlohmann::json::array({3, -1, 7}));
}

TEST_CASE("summary JSON round trip and determinism") {
  const auto bytes = fixture("mlp_4_8_3.onnx");
  const auto a = summarize(bytes);
  const auto b = summarize(bytes);
  CHECK(a == b);
  CHECK(summary_from_json(to_json(a)) == a);
  CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("compare identical models") {
  const auto s = summarize_fixture("mlp_4_8_3.onnx");
  const auto d = compare_models(s, s);
  CHECK(d.rows.size() == 4);
  for (const auto &r : d.rows) CHECK(r.status == RowStatus::same);
  CHECK(d.parameter_count_delta == 0);
  CHECK(d.memory_size_bytes_delta == 0);
}

TEST_CASE("compare 4-8-3 against 4-16-3") {
  const auto a = summarize_fixture("mlp_4_8_3.onnx");
  const auto b = summarize_fixture("mlp_4_16_3.onnx");
  const auto d = compare_models(a, b);
  CHECK(d.parameter_count_delta == 64);
  CHECK(d.memory_size_bytes_delta == 256);
  REQUIRE(d.rows.size() == 4);
  CHECK(d.rows[0].status == RowStatus::changed);
  CHECK(d.rows[0].changed_fields == std::vector<std::string>{"weights"});
  CHECK(d.rows[1].status == RowStatus::same);
  CHECK(d.rows[2].status == RowStatus::changed);
  CHECK(d.rows[3].status == RowStatus::same);
  CHECK(replay(a.nodes, d) == b.nodes);
}

TEST_CASE("extra Relu shows as one only-left row") {
  const auto extra = summarize_fixture("mlp_4_8_3_extra_relu.onnx");
  const auto base = summarize_fixture("mlp_4_8_3.onnx");
  const auto d = compare_models(extra, base);
  int only_left = 0;
  for (const auto &r : d.rows) {
    if (r.status == RowStatus::only_left) {
      ++only_left;
      CHECK(r.left->op_type == "Relu");
    } else {
      CHECK(r.status == RowStatus::same);
    }
  }
  CHECK(only_left == 1);
  CHECK(replay(extra.nodes, d) == base.nodes);
}

TEST_CASE("diff JSON round trip") {
  const auto d = compare_models(summarize_fixture("mlp_4_8_3_extra_relu.onnx"),
                                summarize_fixture("mlp_4_16_3.onnx"));
  CHECK(diff_from_json(to_json(d)) == d);
}

namespace {

// Random chain graph over a few elementwise/unary ops with optional weights.
testing::ModelSpec random_chain(std::mt19937 &rng) {
  static const char *ops[] = {"Relu", "Sigmoid", "Tanh", "Add", "Mul", "Identity"};
  testing::ModelSpec s;
  s.inputs = {{"X", 1, {std::string("N"), std::int64_t{3}}}};
  const int len = std::uniform_int_distribution<int>(0, 7)(rng);
  std::string prev = "X";
  for (int i = 0; i < len; ++i) {
    const std::string op = ops[std::uniform_int_distribution<int>(0, 5)(rng)];
    const std::string out = "t" + std::to_string(i);
    testing::NodeSpec n{op, "n" + std::to_string(i), {prev}, {out}, {}};
    if (op == "Add" || op == "Mul") {
      const std::int64_t width = std::uniform_int_distribution<int>(0, 1)(rng) ? 3 : 1;
      const std::string w = "w" + std::to_string(i);
      s.initializers.push_back({w, 1, {width}, std::vector<float>(static_cast<std::size_t>(width), 0.5f), {}, {}, true});
      n.inputs.push_back(w);
    }
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0)
      n.attrs.push_back(testing::AttrSpec::integer("tag", std::uniform_int_distribution<int>(0, 1)(rng)));
    s.nodes.push_back(n);
    prev = out;
  }
  s.outputs = {{prev, 1, {}}};
  return s;
}

} // namespace

TEST_CASE("diff properties over random graphs") {
  std::mt19937 rng(1234);
  for (int iter = 0; iter < 300; ++iter) {
    const auto a = summarize(encode_model(random_chain(rng)));
    const auto b = summarize(encode_model(random_chain(rng)));
    const auto ab = compare_models(a, b);
    const auto ba = compare_models(b, a);
    CHECK(mirror(ab) == ba);
    CHECK(replay(a.nodes, ab) == b.nodes);
    CHECK(replay(b.nodes, ba) == a.nodes);
    CHECK(ab.parameter_count_delta == b.parameter_count - a.parameter_count);
  }
}

TEST_CASE("renaming nodes leaves counts and diff unchanged") {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 50; ++iter) {
    auto spec = random_chain(rng);
    const auto before = summarize(encode_model(spec));
    for (auto &n : spec.nodes) n.name = "renamed_" + std::to_string(rng());
    const auto after = summarize(encode_model(spec));
    CHECK(before.parameter_count == after.parameter_count);
    CHECK(before.memory_size_bytes == after.memory_size_bytes);
    for (const auto &r : compare_models(before, after).rows) CHECK(r.status == RowStatus::same);
  }
}

TEST_CASE("architecture text rendering") {
  const auto s = summarize_fixture("mlp_4_8_3.onnx");
  const auto text = render_architecture_text(s);
  CHECK(text == render_architecture_text(s));
  CHECK(text == fixture("golden/mlp_4_8_3.txt"));

  const auto d = compare_models(s, summarize_fixture("mlp_4_16_3.onnx"));
  CHECK(render_architecture_text(d) == fixture("golden/mlp_4_8_3_vs_4_16_3.txt"));

  testing::ModelSpec empty;
  empty.graph_name = "empty";
  const auto e = render_architecture_text(summarize(encode_model(empty)));
  CHECK(e == "model empty  opset 13  params 0  bytes 0\n#  op_type  name  output  params  weights  attributes\n");
}
