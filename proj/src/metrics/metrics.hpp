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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "common/types.hpp"

namespace hub::metrics {

/// Square count matrix over the sorted union of observed labels.
/// Rows index the true class, columns the predicted class.
struct ConfusionMatrix {
  std::vector<Label> classes;
  std::vector<std::vector<std::int64_t>> counts;

  std::int64_t total() const;
  std::int64_t true_positives(std::size_t c) const { return counts[c][c]; }
  std::int64_t row_sum(std::size_t c) const;
  std::int64_t column_sum(std::size_t c) const;
};

ConfusionMatrix confusion_matrix(std::span<const Label> y_true, std::span<const Label> y_pred);

/// Scores for one evaluated prediction set. Only the fields belonging to
/// `task` are meaningful; the others stay zero and are never serialized.
struct MetricReport {
  TaskType task = TaskType::classification;
  double accuracy = 0, f1_macro = 0, precision_macro = 0, recall_macro = 0;
  double mse = 0, rmse = 0, mae = 0, r2 = 0;

  /// Value for a metric key, or nullopt when the key does not apply to `task`.
  std::optional<double> value(std::string_view key) const;

  bool operator==(const MetricReport &) const = default;
};

// Macro averages over every class present in y_true or y_pred. A per-class
// precision, recall or F1 whose denominator is zero counts as 0.
MetricReport classification_report(std::span<const Label> y_true, std::span<const Label> y_pred);

// If the total sum of squares is zero, r2 is 1 for a perfect fit and 0
// otherwise.
MetricReport regression_report(std::span<const double> y_true, std::span<const double> y_pred);

/// Flat object with the task's four keys.
nlohmann::json to_json(const MetricReport &report);
MetricReport report_from_json(TaskType task, const nlohmann::json &j);

enum class Direction { higher_is_better, lower_is_better };

struct MetricInfo {
  std::string key;
  TaskType task;
  Direction direction;
};

// Named metrics selectable for ranking, with their sort direction.
class MetricRegistry {
public:
  static const MetricRegistry &builtin();

  const MetricInfo *find(std::string_view key) const;

  // Throws invalid_metric when the key is unknown or belongs to the other task.
  const MetricInfo &require(std::string_view key, TaskType task) const;

  std::vector<std::string> keys_for(TaskType task) const;
  static std::string default_sort_key(TaskType task);

private:
  void add(MetricInfo info);

  std::vector<MetricInfo> metrics_;
};

} // namespace hub::metrics
