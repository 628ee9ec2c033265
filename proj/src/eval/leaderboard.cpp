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

#include "eval/leaderboard.hpp"

#include <algorithm>
#include <set>

#include "common/error.hpp"
#include "common/json.hpp"

namespace hub::eval {

using nlohmann::json;

namespace {

double metric_of(const LeaderboardEntry &e, const std::string &key, bool use_secret) {
  const auto &report = use_secret ? *e.secret_report : e.public_report;
  return *report.value(key);
}

// Shortest round-trip form, same digits as the JSON export.
std::string format_real(double v) { return dump_json(json(v)); }

std::string csv_cell(const std::string &s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scalar_cell(const json &v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_real(v.get<double>());
  return dump_json(v);
}

json entry_to_json(const LeaderboardEntry &e) {
  json j = {{"version", e.version},
            {"model_id", e.model_id},
            {"submitter", e.submitter},
            {"scores", metrics::to_json(e.public_report)},
            {"parameter_count", e.parameter_count},
            {"memory_size_bytes", e.memory_size_bytes},
            {"op_histogram", e.op_histogram},
            {"custom_metadata", e.custom_metadata},
            {"submitted_at", format_timestamp(e.submitted_at)}};
  if (e.secret_report) j["secret_scores"] = metrics::to_json(*e.secret_report);
  return j;
}

LeaderboardEntry entry_from_json(TaskType task, const json &j) {
  LeaderboardEntry e;
  e.version = j.at("version").get<std::int64_t>();
  e.model_id = j.at("model_id").get<std::string>();
  e.submitter = j.at("submitter").get<std::string>();
  e.public_report = metrics::report_from_json(task, j.at("scores"));
  if (j.contains("secret_scores")) e.secret_report = metrics::report_from_json(task, j.at("secret_scores"));
  e.parameter_count = j.at("parameter_count").get<std::int64_t>();
  e.memory_size_bytes = j.at("memory_size_bytes").get<std::int64_t>();
  e.op_histogram = j.at("op_histogram").get<std::string>();
  e.custom_metadata = j.at("custom_metadata");
  e.submitted_at = parse_timestamp(j.at("submitted_at").get<std::string>());
  return e;
}

} // namespace

bool ranks_before(const LeaderboardEntry &a, const LeaderboardEntry &b, const metrics::MetricInfo &metric,
                  bool use_secret) {
  const double va = metric_of(a, metric.key, use_secret);
  const double vb = metric_of(b, metric.key, use_secret);
  if (va != vb)
    return metric.direction == metrics::Direction::higher_is_better ? va > vb : va < vb;
  if (a.submitted_at != b.submitted_at) return a.submitted_at < b.submitted_at;
  return a.version < b.version;
}

Leaderboard build_leaderboard(std::string track_id, TaskType task, std::vector<LeaderboardEntry> entries,
                              std::string sort_metric, bool use_secret) {
  if (sort_metric.empty()) sort_metric = metrics::MetricRegistry::default_sort_key(task);
  const auto &metric = metrics::MetricRegistry::builtin().require(sort_metric, task);
  for (const auto &e : entries) {
    if (e.public_report.task != task || (e.secret_report && e.secret_report->task != task))
      fail(ErrorCode::internal_error, "leaderboard entry task does not match the track");
    if (use_secret && !e.secret_report)
      fail(ErrorCode::internal_error, "secret ranking requested without secret reports");
  }
  std::sort(entries.begin(), entries.end(),
            [&](const auto &a, const auto &b) { return ranks_before(a, b, metric, use_secret); });

  Leaderboard board;
  board.track_id = std::move(track_id);
  board.task = task;
  board.sort_metric = metric.key;
  board.ranked_on_secret = use_secret;
  board.entries = std::move(entries);
  return board;
}

json to_json(const Leaderboard &board) {
  json entries = json::array();
  for (std::size_t i = 0; i < board.entries.size(); ++i) {
    json e = entry_to_json(board.entries[i]);
    e["rank"] = i + 1;
    entries.push_back(std::move(e));
  }
  return {{"track_id", board.track_id},
          {"task_type", to_string(board.task)},
          {"sort_metric", board.sort_metric},
          {"ranked_on_secret", board.ranked_on_secret},
          {"finalized", board.finalized},
          {"entries", std::move(entries)}};
}

Leaderboard leaderboard_from_json(const json &j) {
  Leaderboard board;
  board.track_id = j.at("track_id").get<std::string>();
  board.task = parse_task_type(j.at("task_type").get<std::string>());
  board.sort_metric = j.at("sort_metric").get<std::string>();
  board.ranked_on_secret = j.at("ranked_on_secret").get<bool>();
  board.finalized = j.at("finalized").get<bool>();
  for (const auto &e : j.at("entries")) board.entries.push_back(entry_from_json(board.task, e));
  return board;
}

std::string to_csv(const Leaderboard &board) {
  const auto keys = metrics::MetricRegistry::builtin().keys_for(board.task);
  const bool any_secret = std::any_of(board.entries.begin(), board.entries.end(),
                                      [](const auto &e) { return e.secret_report.has_value(); });
  std::set<std::string> custom;
  for (const auto &e : board.entries)
    for (const auto &[k, v] : e.custom_metadata.items()) custom.insert(k);

  std::vector<std::string> header{"rank", "version", "model_id", "submitter", "submitted_at"};
  header.insert(header.end(), keys.begin(), keys.end());
  if (any_secret)
    for (const auto &k : keys) header.push_back("secret_" + k);
  for (const char *k : {"parameter_count", "memory_size_bytes", "op_histogram"}) header.emplace_back(k);
  header.insert(header.end(), custom.begin(), custom.end());

  std::string out;
  auto emit_row = [&out](const std::vector<std::string> &cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_cell(cells[i]);
    }
    out += "\r\n";
  };
  emit_row(header);

  for (std::size_t r = 0; r < board.entries.size(); ++r) {
    const auto &e = board.entries[r];
    std::vector<std::string> row{std::to_string(r + 1), std::to_string(e.version), e.model_id, e.submitter,
                                 format_timestamp(e.submitted_at)};
    for (const auto &k : keys) row.push_back(format_real(*e.public_report.value(k)));
    if (any_secret)
      for (const auto &k : keys) row.push_back(e.secret_report ? format_real(*e.secret_report->value(k)) : "");
    row.push_back(std::to_string(e.parameter_count));
    row.push_back(std::to_string(e.memory_size_bytes));
    row.push_back(e.op_histogram);
    for (const auto &k : custom)
      row.push_back(e.custom_metadata.contains(k) ? scalar_cell(e.custom_metadata.at(k)) : "");
    emit_row(row);
  }
  return out;
}

} // namespace hub::eval
