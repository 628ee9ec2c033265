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

#include "metrics/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "common/error.hpp"

namespace hub::metrics {

using nlohmann::json;

namespace {

void check_lengths(std::size_t a, std::size_t b) {
  if (a == 0)
    fail(ErrorCode::validation_error, "cannot evaluate an empty prediction set");
  if (a != b)
    fail(ErrorCode::length_mismatch,
         "y_true has " + std::to_string(a) + " entries but y_pred has " + std::to_string(b),
         {{"expected_length", a}, {"actual_length", b}});
}

double safe_ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

} // namespace

std::int64_t ConfusionMatrix::total() const {
  std::int64_t sum = 0;
  for (const auto &row : counts)
    for (auto c : row) sum += c;
  return sum;
}

std::int64_t ConfusionMatrix::row_sum(std::size_t c) const {
  std::int64_t sum = 0;
  for (auto v : counts[c]) sum += v;
  return sum;
}

std::int64_t ConfusionMatrix::column_sum(std::size_t c) const {
  std::int64_t sum = 0;
  for (const auto &row : counts) sum += row[c];
  return sum;
}

ConfusionMatrix confusion_matrix(std::span<const Label> y_true, std::span<const Label> y_pred) {
  check_lengths(y_true.size(), y_pred.size());
  ConfusionMatrix cm;
  cm.classes.assign(y_true.begin(), y_true.end());
  cm.classes.insert(cm.classes.end(), y_pred.begin(), y_pred.end());
  std::sort(cm.classes.begin(), cm.classes.end());
  cm.classes.erase(std::unique(cm.classes.begin(), cm.classes.end()), cm.classes.end());

  auto index_of = [&](const Label &l) {
    return static_cast<std::size_t>(
        std::lower_bound(cm.classes.begin(), cm.classes.end(), l) - cm.classes.begin());
  };
  const std::size_t k = cm.classes.size();
  cm.counts.assign(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < y_true.size(); ++i) ++cm.counts[index_of(y_true[i])][index_of(y_pred[i])];
  return cm;
}

MetricReport classification_report(std::span<const Label> y_true, std::span<const Label> y_pred) {
  const ConfusionMatrix cm = confusion_matrix(y_true, y_pred);
  const std::size_t k = cm.classes.size();
  const double n = static_cast<double>(y_true.size());

  double matches = 0, p_sum = 0, r_sum = 0, f_sum = 0;
  for (std::size_t c = 0; c < k; ++c) {
    const double tp = static_cast<double>(cm.true_positives(c));
    const double p = safe_ratio(tp, static_cast<double>(cm.column_sum(c)));
    const double r = safe_ratio(tp, static_cast<double>(cm.row_sum(c)));
    matches += tp;
    p_sum += p;
    r_sum += r;
    f_sum += safe_ratio(2.0 * p * r, p + r);
  }

  MetricReport out;
  out.task = TaskType::classification;
  out.accuracy = matches / n;
  out.precision_macro = p_sum / static_cast<double>(k);
  out.recall_macro = r_sum / static_cast<double>(k);
  out.f1_macro = f_sum / static_cast<double>(k);
  return out;
}

MetricReport regression_report(std::span<const double> y_true, std::span<const double> y_pred) {
  check_lengths(y_true.size(), y_pred.size());
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    if (!std::isfinite(y_true[i]) || !std::isfinite(y_pred[i]))
      fail(ErrorCode::validation_error, "non-finite value at index " + std::to_string(i),
           {{"index", i}});
  }
  const double n = static_cast<double>(y_true.size());
  double mean = 0;
  for (double y : y_true) mean += y;
  mean /= n;

  double ss_res = 0, ss_tot = 0, abs_sum = 0;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const double e = y_true[i] - y_pred[i];
    ss_res += e * e;
    abs_sum += std::fabs(e);
    const double d = y_true[i] - mean;
    ss_tot += d * d;
  }

  MetricReport out;
  out.task = TaskType::regression;
  out.mse = ss_res / n;
  out.rmse = std::sqrt(out.mse);
  out.mae = abs_sum / n;
  if (ss_tot == 0.0)
    out.r2 = ss_res == 0.0 ? 1.0 : 0.0;
  else
    out.r2 = 1.0 - ss_res / ss_tot;
  return out;
}

std::optional<double> MetricReport::value(std::string_view key) const {
  if (task == TaskType::classification) {
    if (key == "accuracy") return accuracy;
    if (key == "f1_macro") return f1_macro;
    if (key == "precision_macro") return precision_macro;
    if (key == "recall_macro") return recall_macro;
  } else {
    if (key == "mse") return mse;
    if (key == "rmse") return rmse;
    if (key == "mae") return mae;
    if (key == "r2") return r2;
  }
  return std::nullopt;
}

json to_json(const MetricReport &r) {
  if (r.task == TaskType::classification)
    return {{"accuracy", r.accuracy},
            {"f1_macro", r.f1_macro},
            {"precision_macro", r.precision_macro},
            {"recall_macro", r.recall_macro}};
  return {{"mse", r.mse}, {"rmse", r.rmse}, {"mae", r.mae}, {"r2", r.r2}};
}

MetricReport report_from_json(TaskType task, const json &j) {
  MetricReport r;
  r.task = task;
  if (task == TaskType::classification) {
    r.accuracy = j.at("accuracy").get<double>();
    r.f1_macro = j.at("f1_macro").get<double>();
    r.precision_macro = j.at("precision_macro").get<double>();
    r.recall_macro = j.at("recall_macro").get<double>();
  } else {
    r.mse = j.at("mse").get<double>();
    r.rmse = j.at("rmse").get<double>();
    r.mae = j.at("mae").get<double>();
    r.r2 = j.at("r2").get<double>();
  }
  return r;
}

const MetricRegistry &MetricRegistry::builtin() {
  static const MetricRegistry registry = [] {
    MetricRegistry r;
    const auto hi = Direction::higher_is_better;
    const auto lo = Direction::lower_is_better;
    for (const char *k : {"accuracy", "f1_macro", "precision_macro", "recall_macro"})
      r.add({k, TaskType::classification, hi});
    r.add({"mse", TaskType::regression, lo});
    r.add({"rmse", TaskType::regression, lo});
    r.add({"mae", TaskType::regression, lo});
    r.add({"r2", TaskType::regression, hi});
    return r;
  }();
  return registry;
}

void MetricRegistry::add(MetricInfo info) {
  if (find(info.key))
    fail(ErrorCode::conflict, "metric '" + info.key + "' is already registered");
  metrics_.push_back(std::move(info));
}

const MetricInfo *MetricRegistry::find(std::string_view key) const {
  for (const auto &m : metrics_)
    if (m.key == key) return &m;
  return nullptr;
}

const MetricInfo &MetricRegistry::require(std::string_view key, TaskType task) const {
  const MetricInfo *m = find(key);
  if (!m || m->task != task) {
    json allowed = keys_for(task);
    fail(ErrorCode::invalid_metric,
         "metric '" + std::string(key) + "' is not valid for " + std::string(to_string(task)) +
             " tracks",
         {{"allowed", allowed}});
  }
  return *m;
}

std::vector<std::string> MetricRegistry::keys_for(TaskType task) const {
  std::vector<std::string> keys;
  for (const auto &m : metrics_)
    if (m.task == task) keys.push_back(m.key);
  return keys;
}

std::string MetricRegistry::default_sort_key(TaskType task) {
  return task == TaskType::classification ? "accuracy" : "rmse";
}

} // namespace hub::metrics
