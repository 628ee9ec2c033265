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

#include "eval/scoring.hpp"

#include "common/error.hpp"

namespace hub::eval {

using nlohmann::json;

Values values_from_json(TaskType task, const json &array, std::string_view field) {
  if (!array.is_array())
    fail(ErrorCode::type_mismatch, std::string(field) + " must be a JSON array", {{"field", field}});
  if (array.empty())
    fail(ErrorCode::validation_error, std::string(field) + " must not be empty", {{"field", field}});
  try {
    if (task == TaskType::regression) return reals_from_json(array);
    return labels_from_json(array);
  } catch (const Error &e) {
    json details = e.details();
    details["field"] = field;
    throw Error(e.code(), std::string(field) + ": " + e.what(), details);
  }
}

json values_to_json(const Values &values) {
  if (const auto *labels = std::get_if<std::vector<Label>>(&values)) return labels_to_json(*labels);
  return std::get<std::vector<double>>(values);
}

std::size_t values_size(const Values &values) {
  return std::visit([](const auto &v) { return v.size(); }, values);
}

namespace {

template <typename T> std::vector<T> pick(const std::vector<T> &v, const std::vector<std::int64_t> &idx) {
  std::vector<T> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(v[static_cast<std::size_t>(i)]);
  return out;
}

template <typename T>
metrics::MetricReport report(const std::vector<T> &y, const std::vector<T> &p) {
  if constexpr (std::is_same_v<T, double>)
    return metrics::regression_report(y, p);
  else
    return metrics::classification_report(y, p);
}

template <typename T> Scores score_typed(const std::vector<T> &y, const SplitMask &mask, const std::vector<T> &p) {
  Scores s;
  if (mask.secret_indices.empty()) {
    s.public_report = report(y, p);
    return s;
  }
  const auto pub = mask.public_indices();
  s.public_report = report(pick(y, pub), pick(p, pub));
  s.secret_report = report(pick(y, mask.secret_indices), pick(p, mask.secret_indices));
  return s;
}

} // namespace

Scores score_submission(TaskType task, const Values &eval_labels, const SplitMask &mask,
                        const Values &predictions) {
  const std::size_t n = values_size(eval_labels);
  const std::size_t m = values_size(predictions);
  if (m != n)
    fail(ErrorCode::length_mismatch,
         "expected " + std::to_string(n) + " predictions, got " + std::to_string(m),
         {{"field", "predictions"}, {"expected_length", n}, {"actual_length", m}});
  if (static_cast<std::size_t>(mask.n) != n)
    fail(ErrorCode::internal_error, "split mask does not cover the evaluation labels");

  const bool regression = task == TaskType::regression;
  if (regression != std::holds_alternative<std::vector<double>>(eval_labels) ||
      regression != std::holds_alternative<std::vector<double>>(predictions))
    fail(ErrorCode::type_mismatch, "prediction type does not match the task type",
         {{"field", "predictions"}, {"task_type", to_string(task)}});

  if (regression)
    return score_typed(std::get<std::vector<double>>(eval_labels), mask,
                       std::get<std::vector<double>>(predictions));
  return score_typed(std::get<std::vector<Label>>(eval_labels), mask,
                     std::get<std::vector<Label>>(predictions));
}

} // namespace hub::eval
