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

#include "onnx/diff.hpp"

#include <algorithm>
#include <sstream>

#include "common/error.hpp"
#include "common/json.hpp"

namespace hub::onnx {

using nlohmann::json;

std::string_view to_string(RowStatus s) {
  switch (s) {
  case RowStatus::same: return "same";
  case RowStatus::changed: return "changed";
  case RowStatus::only_left: return "only-left";
  case RowStatus::only_right: return "only-right";
  }
  return "same";
}

RowStatus parse_row_status(std::string_view s) {
  if (s == "same") return RowStatus::same;
  if (s == "changed") return RowStatus::changed;
  if (s == "only-left") return RowStatus::only_left;
  if (s == "only-right") return RowStatus::only_right;
  fail(ErrorCode::validation_error, "unknown diff row status '" + std::string(s) + "'");
}

namespace {

std::vector<std::string> changed_fields(const NodeSummary &a, const NodeSummary &b) {
  std::vector<std::string> fields;
  if (a.domain != b.domain) fields.push_back("domain");
  std::vector<std::string> keys;
  for (const auto &[k, v] : a.attributes.items()) keys.push_back(k);
  for (const auto &[k, v] : b.attributes.items())
    if (!a.attributes.contains(k)) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  for (const auto &k : keys) {
    const json va = a.attributes.value(k, json());
    const json vb = b.attributes.value(k, json());
    if (!a.attributes.contains(k) || !b.attributes.contains(k) || va != vb)
      fields.push_back("attributes." + k);
  }
  if (a.weights != b.weights) fields.push_back("weights");
  return fields;
}

} // namespace

ModelDiff compare_models(const OnnxModelSummary &left, const OnnxModelSummary &right) {
  const auto &a = left.nodes;
  const auto &b = right.nodes;
  const std::size_t n = a.size(), m = b.size();

  // lcs[i][j] = LCS length of a[i..] and b[j..]
  std::vector<std::vector<std::uint32_t>> lcs(n + 1, std::vector<std::uint32_t>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = m; j-- > 0;)
      lcs[i][j] = a[i].op_type == b[j].op_type ? lcs[i + 1][j + 1] + 1
                                               : std::max(lcs[i + 1][j], lcs[i][j + 1]);

  ModelDiff diff;
  std::size_t i = 0, j = 0;
  auto take_left = [&] { diff.rows.push_back({RowStatus::only_left, a[i++], std::nullopt, {}}); };
  auto take_right = [&] { diff.rows.push_back({RowStatus::only_right, std::nullopt, b[j++], {}}); };
  while (i < n || j < m) {
    if (i == n) {
      take_right();
    } else if (j == m) {
      take_left();
    } else if (a[i].op_type == b[j].op_type) {
      auto fields = changed_fields(a[i], b[j]);
      const auto status = fields.empty() ? RowStatus::same : RowStatus::changed;
      diff.rows.push_back({status, a[i], b[j], std::move(fields)});
      ++i;
      ++j;
    } else if (lcs[i + 1][j] > lcs[i][j + 1]) {
      take_left();
    } else if (lcs[i + 1][j] < lcs[i][j + 1]) {
      take_right();
    } else if (a[i].op_type < b[j].op_type) {
      take_left();
    } else {
      take_right();
    }
  }
  diff.parameter_count_delta = right.parameter_count - left.parameter_count;
  diff.memory_size_bytes_delta = right.memory_size_bytes - left.memory_size_bytes;
  return diff;
}

std::vector<NodeSummary> replay(const std::vector<NodeSummary> &left, const ModelDiff &diff) {
  std::vector<NodeSummary> out;
  std::size_t cursor = 0;
  for (const auto &row : diff.rows) {
    if (row.status == RowStatus::only_right) {
      out.push_back(*row.right);
      continue;
    }
    if (cursor >= left.size() || !row.left || left[cursor] != *row.left)
      fail(ErrorCode::validation_error, "diff does not apply to this node sequence");
    ++cursor;
    if (row.status != RowStatus::only_left) out.push_back(*row.right);
  }
  if (cursor != left.size())
    fail(ErrorCode::validation_error, "diff does not consume the whole node sequence");
  return out;
}

ModelDiff mirror(const ModelDiff &diff) {
  ModelDiff out;
  for (const auto &row : diff.rows) {
    DiffRow r = row;
    std::swap(r.left, r.right);
    if (row.status == RowStatus::only_left) r.status = RowStatus::only_right;
    else if (row.status == RowStatus::only_right) r.status = RowStatus::only_left;
    out.rows.push_back(std::move(r));
  }
  out.parameter_count_delta = -diff.parameter_count_delta;
  out.memory_size_bytes_delta = -diff.memory_size_bytes_delta;
  return out;
}

json to_json(const ModelDiff &diff) {
  json rows = json::array();
  for (const auto &r : diff.rows) {
    rows.push_back({{"status", std::string(to_string(r.status))},
                    {"left", r.left ? to_json(*r.left) : json(nullptr)},
                    {"right", r.right ? to_json(*r.right) : json(nullptr)},
                    {"changed_fields", r.changed_fields}});
  }
  return {{"rows", rows},
          {"parameter_count_delta", diff.parameter_count_delta},
          {"memory_size_bytes_delta", diff.memory_size_bytes_delta}};
}

ModelDiff diff_from_json(const json &j) {
  ModelDiff d;
  for (const auto &r : j.at("rows")) {
    DiffRow row;
    row.status = parse_row_status(r.at("status").get<std::string>());
    if (!r.at("left").is_null()) row.left = node_summary_from_json(r.at("left"));
    if (!r.at("right").is_null()) row.right = node_summary_from_json(r.at("right"));
    row.changed_fields = r.value("changed_fields", std::vector<std::string>{});
    d.rows.push_back(std::move(row));
  }
  d.parameter_count_delta = j.at("parameter_count_delta").get<std::int64_t>();
  d.memory_size_bytes_delta = j.at("memory_size_bytes_delta").get<std::int64_t>();
  return d;
}

// ---------------------------------------------------------------------------
// Text rendering

namespace {

std::string attributes_text(const NodeSummary &n) {
  std::string out;
  for (const auto &[k, v] : n.attributes.items()) {
    if (!out.empty()) out += ' ';
    out += k + "=" + dump_json(v);
  }
  return out;
}

std::string weights_text(const NodeSummary &n) {
  std::string out;
  for (const auto &w : n.weights) {
    if (!out.empty()) out += ' ';
    out += "[";
    for (std::size_t i = 0; i < w.dims.size(); ++i) out += (i ? "x" : "") + std::to_string(w.dims[i]);
    out += "]";
  }
  return out;
}

std::string signed_int(std::int64_t v) { return (v > 0 ? "+" : "") + std::to_string(v); }

// Left-aligned columns padded to the widest cell; trailing spaces trimmed.
std::string table(const std::vector<std::vector<std::string>> &rows) {
  std::vector<std::size_t> width;
  for (const auto &r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::string out;
  for (const auto &r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

} // namespace

std::string render_architecture_text(const OnnxModelSummary &s) {
  std::string out = "model " + (s.graph_name.empty() ? std::string("<unnamed>") : s.graph_name) +
                    "  opset " + std::to_string(s.opset) + "  params " +
                    std::to_string(s.parameter_count) + "  bytes " +
                    std::to_string(s.memory_size_bytes) + "\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"#", "op_type", "name", "output", "params", "weights", "attributes"});
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    const auto &n = s.nodes[i];
    rows.push_back({std::to_string(i), n.op_type, n.name, shape_to_string(n.output_shape),
                    std::to_string(n.parameter_count()), weights_text(n), attributes_text(n)});
  }
  return out + table(rows);
}

std::string render_architecture_text(const ModelDiff &d) {
  std::string out = "diff  params " + signed_int(d.parameter_count_delta) + "  bytes " +
                    signed_int(d.memory_size_bytes_delta) + "\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"", "left", "right", "changes"});
  for (const auto &r : d.rows) {
    auto label = [](const std::optional<NodeSummary> &n) {
      return n ? n->op_type + (n->name.empty() ? "" : " (" + n->name + ")") : std::string("-");
    };
    std::string marker = r.status == RowStatus::same       ? "="
                         : r.status == RowStatus::changed  ? "~"
                         : r.status == RowStatus::only_left ? "-"
                                                            : "+";
    std::string detail;
    for (const auto &f : r.changed_fields) {
      if (!detail.empty()) detail += "; ";
      if (f == "weights") {
        detail += "weights " + weights_text(*r.left) + " -> " + weights_text(*r.right);
      } else if (f.rfind("attributes.", 0) == 0) {
        const std::string key = f.substr(11);
        auto val = [&](const NodeSummary &n) {
          return n.attributes.contains(key) ? dump_json(n.attributes.at(key)) : std::string("unset");
        };
        detail += key + " " + val(*r.left) + " -> " + val(*r.right);
      } else {
        detail += f + " " + r.left->domain + " -> " + r.right->domain;
      }
    }
    rows.push_back({marker, label(r.left), label(r.right), detail});
  }
  return out + table(rows);
}

} // namespace hub::onnx
