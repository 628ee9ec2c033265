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

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

#include <nlohmann/json.hpp>

#include "registry/registry.hpp"
#include "runtime/runtime_model.hpp"

namespace hub::service {

struct Limits {
  std::size_t max_model_bytes = 512ull << 20;
  std::size_t max_predictions_bytes = 10ull << 20;
  std::size_t max_json_bytes = 16ull << 20; // any other part or body
};

// Raw parts of a submission; the HTTP layer fills these from multipart fields.
struct SubmissionParts {
  std::string model;
  std::string predictions;
  std::optional<std::string> preprocessor;
  std::optional<std::string> custom_metadata;
  std::optional<std::string> example_data;
};

struct Artifact {
  std::string bytes;
  std::string content_hash;
  std::string filename;
};

struct LeaderboardQuery {
  std::string sort;   // empty: task default
  std::string format; // "json" (default) or "csv"
  std::optional<bool> secret; // unset: rank on secret iff finalized
};

// Everything the HTTP routes do, minus HTTP. `user` is the authenticated user
// id or empty for anonymous callers. Failures throw hub::Error.
class Hub {
public:
  explicit Hub(const std::filesystem::path &data_dir, Limits limits = {});

  std::string authorize(const std::optional<std::string> &bearer) const;

  nlohmann::json create_playground(const std::string &user, const nlohmann::json &body);
  nlohmann::json list_playgrounds(const std::string &user) const;
  nlohmann::json get_playground(const std::string &user, const std::string &id) const;
  nlohmann::json schema(const std::string &user, const std::string &id) const;

  nlohmann::json add_track(const std::string &user, const std::string &playground_id, const nlohmann::json &body);
  nlohmann::json get_track(const std::string &user, const std::string &track_id) const;
  nlohmann::json submit(const std::string &user, const std::string &track_id, const SubmissionParts &parts);
  // Returns the body; csv when query.format == "csv".
  std::string leaderboard(const std::string &user, const std::string &track_id, const LeaderboardQuery &query) const;
  nlohmann::json finalize(const std::string &user, const std::string &track_id);

  nlohmann::json model_metadata(const std::string &user, const std::string &model_id) const;
  Artifact artifact(const std::string &user, const std::string &model_id) const;
  nlohmann::json compare(const std::string &user, const std::string &left, const std::string &right) const;
  std::string compare_text(const std::string &user, const std::string &left, const std::string &right) const;

  nlohmann::json deploy(const std::string &user, const std::string &playground_id, const nlohmann::json &body);
  nlohmann::json predict(const std::string &user, const std::string &playground_id, const nlohmann::json &body) const;

  // Digest over the exported registry; equal before and after any read.
  std::string state_digest() const;

  const Limits &limits() const { return limits_; }
  registry::Registry &registry() { return registry_; }

private:
  struct Slot {
    std::mutex deploy_mu; // one deploy at a time per playground
    std::shared_ptr<const runtime::RuntimeModel> active; // atomic_load/atomic_store only
  };

  registry::Playground readable(const std::string &user, const std::string &playground_id) const;
  registry::ModelVersion readable_model(const std::string &user, const std::string &model_id) const;
  bool sees_secret(const std::string &user, const registry::Playground &pg, const registry::EvalTrack &t) const;
  nlohmann::json track_view(const std::string &user, const registry::Playground &pg,
                            const registry::EvalTrack &t) const;
  nlohmann::json playground_view(const std::string &user, const registry::Playground &pg) const;
  std::shared_ptr<const runtime::RuntimeModel> load_runtime(const registry::Playground &pg,
                                                            const registry::ModelVersion &v) const;
  std::shared_ptr<Slot> slot(const std::string &playground_id, bool create) const;
  void restore_deployments();

  Limits limits_;
  mutable registry::Registry registry_;
  mutable std::shared_mutex slots_mu_;
  mutable std::map<std::string, std::shared_ptr<Slot>> slots_;
};

} // namespace hub::service
