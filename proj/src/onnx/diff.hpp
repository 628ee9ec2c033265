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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "onnx/summary.hpp"

namespace hub::onnx {

enum class RowStatus { same, changed, only_left, only_right };

std::string_view to_string(RowStatus s);
RowStatus parse_row_status(std::string_view s);

struct DiffRow {
  RowStatus status = RowStatus::same;
  std::optional<NodeSummary> left;
  std::optional<NodeSummary> right;
  // For changed rows: "attributes.<name>", "weights", "domain".
  std::vector<std::string> changed_fields;

  bool operator==(const DiffRow &) const = default;
};

struct ModelDiff {
  std::vector<DiffRow> rows;
  std::int64_t parameter_count_delta = 0;  // right - left
  std::int64_t memory_size_bytes_delta = 0; // right - left

  bool operator==(const ModelDiff &) const = default;
};

// Aligns the node sequences by a longest common subsequence over op_type.
// Matched pairs are `same` unless their domain, attributes or weight shapes
// differ. Node names and inferred output shapes are ignored, so renaming
// nodes never produces a change. Among equally long alignments, when the
// next left and right ops differ the one with the smaller op_type is emitted
// first, which makes compare(b, a) the exact mirror of compare(a, b).
ModelDiff compare_models(const OnnxModelSummary &left, const OnnxModelSummary &right);

// Applies a diff to the left node sequence, yielding the right sequence.
std::vector<NodeSummary> replay(const std::vector<NodeSummary> &left, const ModelDiff &diff);

// Swaps sides: only_left <-> only_right, left <-> right, deltas negated.
ModelDiff mirror(const ModelDiff &diff);

nlohmann::json to_json(const ModelDiff &diff);
ModelDiff diff_from_json(const nlohmann::json &j);

// Fixed-width text tables for terminals.
std::string render_architecture_text(const OnnxModelSummary &summary);
std::string render_architecture_text(const ModelDiff &diff);

} // namespace hub::onnx
