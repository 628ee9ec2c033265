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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "common/types.hpp"
#include "metrics/metrics.hpp"

namespace hub::eval {

struct LeaderboardEntry {
  std::int64_t version = 0;
  std::string model_id;
  std::string submitter;
  metrics::MetricReport public_report;
  std::optional<metrics::MetricReport> secret_report; // present only when the viewer may see it
  std::int64_t parameter_count = 0;
  std::int64_t memory_size_bytes = 0;
  std::string op_histogram; // "Gemm:2 Relu:1"
  nlohmann::json custom_metadata = nlohmann::json::object();
  Timestamp submitted_at = 0;

  bool operator==(const LeaderboardEntry &) const = default;
};

struct Leaderboard {
  std::string track_id;
  TaskType task = TaskType::classification;
  std::string sort_metric;
  bool ranked_on_secret = false;
  bool finalized = false;
  std::vector<LeaderboardEntry> entries;

  bool operator==(const Leaderboard &) const = default;
};

// True if `a` ranks above `b`: better metric first (direction from the
// registry), then earlier submitted_at, then lower version.
bool ranks_before(const LeaderboardEntry &a, const LeaderboardEntry &b, const metrics::MetricInfo &metric,
                  bool use_secret);

// An empty sort_metric selects the task default. use_secret requires every
// entry to carry a secret report.
Leaderboard build_leaderboard(std::string track_id, TaskType task, std::vector<LeaderboardEntry> entries,
                              std::string sort_metric, bool use_secret);

nlohmann::json to_json(const Leaderboard &board);
Leaderboard leaderboard_from_json(const nlohmann::json &j);

// RFC-4180 with a header row. Custom metadata keys are the sorted union over
// all entries; missing values are empty cells.
std::string to_csv(const Leaderboard &board);

} // namespace hub::eval
