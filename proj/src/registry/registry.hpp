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
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "common/types.hpp"
#include "eval/scoring.hpp"
#include "eval/split.hpp"
#include "metrics/metrics.hpp"
#include "onnx/summary.hpp"
#include "registry/blob_store.hpp"

namespace hub::registry {

class Database;

struct DeploymentState {
  std::optional<std::string> track_id;
  std::optional<std::int64_t> active_version;
  std::optional<std::string> model_id;
  Timestamp activated_at = 0;
  std::int64_t activation_count = 0;
  bool operator==(const DeploymentState &) const = default;
};

struct Playground {
  std::string id;
  std::string name;
  std::string owner;
  InputType input_type = InputType::tabular;
  TaskType task_type = TaskType::classification;
  Visibility visibility = Visibility::public_;
  std::set<std::string> collaborators;
  std::optional<BlobRef> example_data;
  std::optional<std::vector<Label>> y_train;
  Timestamp created_at = 0;
  DeploymentState deployment;
  bool operator==(const Playground &) const = default;
};

struct EvalTrack {
  std::string id;
  std::string playground_id;
  TrackKind kind = TrackKind::experiment;
  eval::Values eval_labels;
  eval::SplitMask split;
  TrackPolicy policy = TrackPolicy::open;
  bool finalized = false;
  Timestamp created_at = 0;
  bool operator==(const EvalTrack &) const = default;
};

struct ModelVersion {
  std::string id;
  std::string track_id;
  std::string playground_id;
  std::int64_t version = 0;
  std::string submitter;
  BlobRef artifact;
  nlohmann::json preprocessor; // null for image playgrounds
  onnx::OnnxModelSummary summary;
  metrics::MetricReport public_report;
  std::optional<metrics::MetricReport> secret_report;
  eval::Values predictions;
  nlohmann::json custom_metadata = nlohmann::json::object();
  std::optional<BlobRef> example_data;
  Timestamp submitted_at = 0;
  bool operator==(const ModelVersion &) const = default;
};

// Everything a submission carries once the artifact is parsed and scored.
struct NewVersion {
  std::string track_id;
  std::string submitter;
  std::string artifact_bytes;
  nlohmann::json preprocessor;
  onnx::OnnxModelSummary summary;
  eval::Scores scores;
  eval::Values predictions;
  nlohmann::json custom_metadata = nlohmann::json::object();
  std::optional<std::string> example_data;
};

struct NewPlayground {
  std::string owner;
  std::string name;
  InputType input_type = InputType::tabular;
  TaskType task_type = TaskType::classification;
  Visibility visibility = Visibility::public_;
  std::set<std::string> collaborators;
  std::optional<std::string> example_data; // raw JSON bytes
  std::optional<std::vector<Label>> y_train;
};

struct NewTrack {
  std::string playground_id;
  std::string caller;
  TrackKind kind = TrackKind::experiment;
  nlohmann::json eval_labels;
  double secret_fraction = 0.5;
  std::uint64_t seed = 0;
  TrackPolicy policy = TrackPolicy::open;
};

// Access rules. `user` is empty for anonymous callers.
bool can_read(const Playground &pg, const std::string &user);
bool is_member(const Playground &pg, const std::string &user); // owner or collaborator
bool can_submit(const Playground &pg, const EvalTrack &track, const std::string &user);

// Durable store for playgrounds, tracks, versions, API keys and blobs under one
// data directory. Thread-safe; each mutation is one SQLite transaction.
class Registry {
public:
  explicit Registry(const std::filesystem::path &data_dir);
  ~Registry();

  // API keys: "hub_<key id>_<secret>", stored as salted SHA-256.
  std::string mint_key(const std::string &user_id);
  void revoke_key(const std::string &key_id);
  // User id for a valid key; throws unauthorized for malformed, unknown or
  // revoked keys.
  std::string authenticate(const std::string &token) const;

  Playground create_playground(const NewPlayground &p);
  Playground get_playground(const std::string &id) const;
  std::vector<Playground> list_playgrounds() const;

  // Owner only. Competitions get a split from (seed, n, secret_fraction).
  EvalTrack add_track(const NewTrack &t);
  EvalTrack get_track(const std::string &id) const;
  std::vector<EvalTrack> list_tracks(const std::string &playground_id) const;

  // Allocates max(version)+1 inside the insert transaction. Rejects
  // finalized tracks and callers the track policy excludes.
  ModelVersion register_model_version(const NewVersion &v);
  ModelVersion get_version(const std::string &track_id, std::int64_t version) const;
  ModelVersion get_model(const std::string &model_id) const;
  std::vector<ModelVersion> list_versions(const std::string &track_id) const;

  // Owner only; competition only; idempotent.
  EvalTrack finalize_track(const std::string &track_id, const std::string &caller);

  DeploymentState record_deployment(const std::string &playground_id, const ModelVersion &v);

  // Full dump for backup and state digests.
  nlohmann::json export_json() const;

  // Integrity sweep: every track's versions are exactly 1..n and every blob
  // on disk and every referenced blob hashes to its name.
  // {"ok", "tracks", "versions", "blobs", "problems": [...]}
  nlohmann::json verify() const;

  BlobStore &blobs() { return blobs_; }
  const BlobStore &blobs() const { return blobs_; }

private:
  Playground read_playground(const std::string &id) const;
  EvalTrack read_track(const std::string &id) const;

  std::unique_ptr<Database> db_;
  BlobStore blobs_;
  mutable std::mutex mu_;
};

nlohmann::json to_json(const DeploymentState &d);

} // namespace hub::registry
