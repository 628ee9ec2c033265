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

#include "registry/registry.hpp"

#include <openssl/crypto.h>

#include "common/error.hpp"
#include "common/json.hpp"
#include "common/sha256.hpp"
#include "registry/sqlite.hpp"

namespace hub::registry {

using nlohmann::json;

namespace {

constexpr const char *kSchema = R"sql(
CREATE TABLE IF NOT EXISTS playgrounds (
  id TEXT PRIMARY KEY,
  name TEXT NOT NULL,
  owner TEXT NOT NULL,
  input_type TEXT NOT NULL,
  task_type TEXT NOT NULL,
  visibility TEXT NOT NULL,
  collaborators TEXT NOT NULL,
  example_hash TEXT,
  example_size INTEGER,
  y_train TEXT,
  created_at INTEGER NOT NULL,
  dep_track TEXT,
  dep_version INTEGER,
  dep_model TEXT,
  activated_at INTEGER NOT NULL DEFAULT 0,
  activation_count INTEGER NOT NULL DEFAULT 0
);
CREATE TABLE IF NOT EXISTS tracks (
  id TEXT PRIMARY KEY,
  playground_id TEXT NOT NULL REFERENCES playgrounds(id),
  kind TEXT NOT NULL,
  eval_labels TEXT NOT NULL,
  split TEXT NOT NULL,
  policy TEXT NOT NULL,
  finalized INTEGER NOT NULL DEFAULT 0,
  created_at INTEGER NOT NULL
);
CREATE TABLE IF NOT EXISTS model_versions (
  id TEXT PRIMARY KEY,
  track_id TEXT NOT NULL REFERENCES tracks(id),
  version INTEGER NOT NULL,
  submitter TEXT NOT NULL,
  artifact_hash TEXT NOT NULL,
  artifact_size INTEGER NOT NULL,
  preprocessor TEXT NOT NULL,
  summary TEXT NOT NULL,
  public_report TEXT NOT NULL,
  secret_report TEXT,
  predictions TEXT NOT NULL,
  custom_metadata TEXT NOT NULL,
  example_hash TEXT,
  example_size INTEGER,
  submitted_at INTEGER NOT NULL,
  UNIQUE (track_id, version)
);
CREATE TABLE IF NOT EXISTS api_keys (
  key_id TEXT PRIMARY KEY,
  user_id TEXT NOT NULL,
  salt TEXT NOT NULL,
  hash TEXT NOT NULL,
  revoked INTEGER NOT NULL DEFAULT 0,
  created_at INTEGER NOT NULL
);
)sql";

constexpr const char *kPlaygroundCols =
    "id, name, owner, input_type, task_type, visibility, collaborators, example_hash, example_size, y_train, "
    "created_at, dep_track, dep_version, dep_model, activated_at, activation_count";

constexpr const char *kTrackCols = "id, playground_id, kind, eval_labels, split, policy, finalized, created_at";

constexpr const char *kVersionCols =
    "v.id, v.track_id, t.playground_id, v.version, v.submitter, v.artifact_hash, v.artifact_size, v.preprocessor, "
    "v.summary, v.public_report, v.secret_report, v.predictions, v.custom_metadata, v.example_hash, "
    "v.example_size, v.submitted_at, p.task_type";

std::optional<BlobRef> opt_blob(const Statement &st, int hash_col, MediaKind kind) {
  auto h = st.opt_text(hash_col);
  if (!h) return std::nullopt;
  return BlobRef{*h, st.integer(hash_col + 1), kind};
}

Playground playground_row(const Statement &st) {
  Playground p;
  p.id = st.text(0);
  p.name = st.text(1);
  p.owner = st.text(2);
  p.input_type = parse_input_type(st.text(3));
  p.task_type = parse_task_type(st.text(4));
  p.visibility = parse_visibility(st.text(5));
  p.collaborators = json::parse(st.text(6)).get<std::set<std::string>>();
  p.example_data = opt_blob(st, 7, MediaKind::example_data);
  if (auto y = st.opt_text(9)) p.y_train = labels_from_json(json::parse(*y));
  p.created_at = st.integer(10);
  p.deployment.track_id = st.opt_text(11);
  p.deployment.active_version = st.opt_integer(12);
  p.deployment.model_id = st.opt_text(13);
  p.deployment.activated_at = st.integer(14);
  p.deployment.activation_count = st.integer(15);
  return p;
}

EvalTrack track_row(const Statement &st, TaskType task) {
  EvalTrack t;
  t.id = st.text(0);
  t.playground_id = st.text(1);
  t.kind = parse_track_kind(st.text(2));
  t.eval_labels = eval::values_from_json(task, json::parse(st.text(3)), "eval_labels");
  t.split = eval::split_from_json(json::parse(st.text(4)));
  t.policy = parse_track_policy(st.text(5));
  t.finalized = st.integer(6) != 0;
  t.created_at = st.integer(7);
  return t;
}

ModelVersion version_row(const Statement &st) {
  ModelVersion v;
  v.id = st.text(0);
  v.track_id = st.text(1);
  v.playground_id = st.text(2);
  v.version = st.integer(3);
  v.submitter = st.text(4);
  v.artifact = BlobRef{st.text(5), st.integer(6), MediaKind::onnx};
  v.preprocessor = json::parse(st.text(7));
  v.summary = onnx::summary_from_json(json::parse(st.text(8)));
  const auto task = parse_task_type(st.text(16));
  v.public_report = metrics::report_from_json(task, json::parse(st.text(9)));
  if (auto s = st.opt_text(10)) v.secret_report = metrics::report_from_json(task, json::parse(*s));
  v.predictions = eval::values_from_json(task, json::parse(st.text(11)), "predictions");
  v.custom_metadata = json::parse(st.text(12));
  v.example_data = opt_blob(st, 13, MediaKind::example_data);
  v.submitted_at = st.integer(15);
  return v;
}

std::string new_id(const char *prefix) { return std::string(prefix) + random_hex(8); }

bool is_hex(std::string_view s) {
  for (char c : s)
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
  return !s.empty();
}

} // namespace

bool is_member(const Playground &pg, const std::string &user) {
  return !user.empty() && (user == pg.owner || pg.collaborators.count(user) > 0);
}

bool can_read(const Playground &pg, const std::string &user) {
  return pg.visibility == Visibility::public_ || is_member(pg, user);
}

bool can_submit(const Playground &pg, const EvalTrack &track, const std::string &user) {
  if (user.empty()) return false;
  if (is_member(pg, user)) return true;
  return track.policy == TrackPolicy::open && pg.visibility == Visibility::public_;
}

json to_json(const DeploymentState &d) {
  json j = {{"active_version", d.active_version ? json(*d.active_version) : json(nullptr)},
            {"track_id", d.track_id ? json(*d.track_id) : json(nullptr)},
            {"model_id", d.model_id ? json(*d.model_id) : json(nullptr)},
            {"activation_count", d.activation_count}};
  j["activated_at"] = d.activated_at ? json(format_timestamp(d.activated_at)) : json(nullptr);
  return j;
}

Registry::Registry(const std::filesystem::path &data_dir) : blobs_(data_dir / "blobs") {
  std::filesystem::create_directories(data_dir);
  db_ = std::make_unique<Database>((data_dir / "hub.db").string());
  db_->exec(kSchema);
}

Registry::~Registry() = default;

std::string Registry::mint_key(const std::string &user_id) {
  if (user_id.empty()) fail(ErrorCode::validation_error, "user id must not be empty", {{"field", "user"}});
  const std::string key_id = random_hex(8);
  const std::string secret = random_hex(16);
  const std::string salt = random_hex(16);
  std::lock_guard lock(mu_);
  db_->prepare("INSERT INTO api_keys (key_id, user_id, salt, hash, created_at) VALUES (?, ?, ?, ?, ?)")
      .bind(1, key_id)
      .bind(2, user_id)
      .bind(3, salt)
      .bind(4, sha256_hex(salt + secret))
      .bind(5, now_micros())
      .run();
  return "hub_" + key_id + "_" + secret;
}

void Registry::revoke_key(const std::string &key_id) {
  std::lock_guard lock(mu_);
  auto st = db_->prepare("UPDATE api_keys SET revoked = 1 WHERE key_id = ?");
  st.bind(1, key_id).run();
  if (db_->changes() == 0)
    fail(ErrorCode::not_found, "no API key with id " + key_id, {{"key_id", key_id}});
}

std::string Registry::authenticate(const std::string &token) const {
  // hub_<16 hex>_<32 hex>
  if (token.size() != 4 + 16 + 1 + 32 || token.rfind("hub_", 0) != 0 || token[20] != '_' ||
      !is_hex(std::string_view(token).substr(4, 16)) || !is_hex(std::string_view(token).substr(21)))
    fail(ErrorCode::unauthorized, "malformed API key");
  const std::string key_id = token.substr(4, 16);
  const std::string secret = token.substr(21);
  std::lock_guard lock(mu_);
  auto st = db_->prepare("SELECT user_id, salt, hash, revoked FROM api_keys WHERE key_id = ?");
  st.bind(1, key_id);
  if (!st.step()) fail(ErrorCode::unauthorized, "unknown API key");
  const std::string expected = st.text(2);
  const std::string actual = sha256_hex(st.text(1) + secret);
  if (CRYPTO_memcmp(expected.data(), actual.data(), expected.size()) != 0)
    fail(ErrorCode::unauthorized, "unknown API key");
  if (st.integer(3) != 0) fail(ErrorCode::unauthorized, "API key has been revoked");
  return st.text(0);
}

Playground Registry::create_playground(const NewPlayground &p) {
  if (p.owner.empty()) fail(ErrorCode::unauthorized, "creating a playground requires an API key");
  Playground pg;
  pg.id = new_id("pg_");
  pg.name = p.name;
  pg.owner = p.owner;
  pg.input_type = p.input_type;
  pg.task_type = p.task_type;
  pg.visibility = p.visibility;
  pg.collaborators = p.collaborators;
  pg.collaborators.erase(p.owner);
  pg.created_at = now_micros();
  if (p.y_train) {
    if (p.task_type != TaskType::classification)
      fail(ErrorCode::validation_error, "y_train labels only apply to classification", {{"field", "y_train"}});
    if (p.y_train->empty()) fail(ErrorCode::validation_error, "y_train must not be empty", {{"field", "y_train"}});
    pg.y_train = p.y_train;
  }
  if (p.example_data) pg.example_data = blobs_.store(*p.example_data, MediaKind::example_data);

  std::lock_guard lock(mu_);
  db_->prepare(std::string("INSERT INTO playgrounds (") + kPlaygroundCols +
               ") VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, NULL, NULL, NULL, 0, 0)")
      .bind(1, pg.id)
      .bind(2, pg.name)
      .bind(3, pg.owner)
      .bind(4, to_string(pg.input_type))
      .bind(5, to_string(pg.task_type))
      .bind(6, to_string(pg.visibility))
      .bind(7, dump_json(json(pg.collaborators)))
      .bind(8, pg.example_data ? std::optional<std::string_view>(pg.example_data->content_hash) : std::nullopt)
      .bind(9, pg.example_data ? std::optional<std::int64_t>(pg.example_data->size_bytes) : std::nullopt)
      .bind(10, pg.y_train ? std::optional<std::string>(dump_json(labels_to_json(*pg.y_train))) : std::nullopt)
      .bind(11, pg.created_at)
      .run();
  return pg;
}

Playground Registry::read_playground(const std::string &id) const {
  auto st = db_->prepare(std::string("SELECT ") + kPlaygroundCols + " FROM playgrounds WHERE id = ?");
  st.bind(1, id);
  if (!st.step()) fail(ErrorCode::not_found, "no playground " + id, {{"playground_id", id}});
  return playground_row(st);
}

Playground Registry::get_playground(const std::string &id) const {
  std::lock_guard lock(mu_);
  return read_playground(id);
}

std::vector<Playground> Registry::list_playgrounds() const {
  std::lock_guard lock(mu_);
  auto st = db_->prepare(std::string("SELECT ") + kPlaygroundCols + " FROM playgrounds ORDER BY created_at, id");
  std::vector<Playground> out;
  while (st.step()) out.push_back(playground_row(st));
  return out;
}

EvalTrack Registry::add_track(const NewTrack &t) {
  std::lock_guard lock(mu_);
  const auto pg = read_playground(t.playground_id);
  if (t.caller.empty()) fail(ErrorCode::unauthorized, "creating a track requires an API key");
  if (t.caller != pg.owner)
    fail(ErrorCode::forbidden, "only the playground owner can add tracks", {{"playground_id", pg.id}});

  EvalTrack track;
  track.id = new_id("trk_");
  track.playground_id = pg.id;
  track.kind = t.kind;
  track.policy = t.policy;
  track.eval_labels = eval::values_from_json(pg.task_type, t.eval_labels, "eval_labels");
  const auto n = static_cast<std::int64_t>(eval::values_size(track.eval_labels));
  if (n > eval::kMaxEvalLabels)
    fail(ErrorCode::validation_error, "at most 1000000 evaluation labels are supported",
         {{"field", "eval_labels"}, {"max", eval::kMaxEvalLabels}, {"actual", n}});
  track.split = t.kind == TrackKind::competition ? eval::make_split(n, t.secret_fraction, t.seed)
                                                 : eval::experiment_mask(n);
  track.created_at = now_micros();

  db_->prepare(std::string("INSERT INTO tracks (") + kTrackCols + ") VALUES (?, ?, ?, ?, ?, ?, 0, ?)")
      .bind(1, track.id)
      .bind(2, track.playground_id)
      .bind(3, to_string(track.kind))
      .bind(4, dump_json(eval::values_to_json(track.eval_labels)))
      .bind(5, dump_json(eval::to_json(track.split)))
      .bind(6, to_string(track.policy))
      .bind(7, track.created_at)
      .run();
  return track;
}

EvalTrack Registry::read_track(const std::string &id) const {
  auto st = db_->prepare(std::string("SELECT ") + kTrackCols +
                         ", (SELECT task_type FROM playgrounds p WHERE p.id = tracks.playground_id) FROM tracks "
                         "WHERE id = ?");
  st.bind(1, id);
  if (!st.step()) fail(ErrorCode::not_found, "no track " + id, {{"track_id", id}});
  return track_row(st, parse_task_type(st.text(8)));
}

EvalTrack Registry::get_track(const std::string &id) const {
  std::lock_guard lock(mu_);
  return read_track(id);
}

std::vector<EvalTrack> Registry::list_tracks(const std::string &playground_id) const {
  std::lock_guard lock(mu_);
  const auto pg = read_playground(playground_id);
  auto st = db_->prepare(std::string("SELECT ") + kTrackCols +
                         " FROM tracks WHERE playground_id = ? ORDER BY created_at, id");
  st.bind(1, playground_id);
  std::vector<EvalTrack> out;
  while (st.step()) out.push_back(track_row(st, pg.task_type));
  return out;
}

ModelVersion Registry::register_model_version(const NewVersion &v) {
  {
    // Cheap early rejection before any blob is written.
    std::lock_guard lock(mu_);
    const auto track = read_track(v.track_id);
    const auto pg = read_playground(track.playground_id);
    if (!can_submit(pg, track, v.submitter))
      fail(v.submitter.empty() ? ErrorCode::unauthorized : ErrorCode::forbidden,
           "not allowed to submit to track " + track.id, {{"track_id", track.id}});
    if (track.finalized)
      fail(ErrorCode::track_finalized, "track " + track.id + " is finalized", {{"track_id", track.id}});
  }
  validate_scalar_map(v.custom_metadata, "custom_metadata");

  ModelVersion mv;
  mv.artifact = blobs_.store(v.artifact_bytes, MediaKind::onnx);
  if (v.example_data) mv.example_data = blobs_.store(*v.example_data, MediaKind::example_data);
  mv.id = new_id("mdl_");
  mv.track_id = v.track_id;
  mv.submitter = v.submitter;
  mv.preprocessor = v.preprocessor;
  mv.summary = v.summary;
  mv.public_report = v.scores.public_report;
  mv.secret_report = v.scores.secret_report;
  mv.predictions = v.predictions;
  mv.custom_metadata = v.custom_metadata;

  std::lock_guard lock(mu_);
  Transaction tx(*db_);
  const auto track = read_track(v.track_id);
  const auto pg = read_playground(track.playground_id);
  if (!can_submit(pg, track, v.submitter))
    fail(ErrorCode::forbidden, "not allowed to submit to track " + track.id, {{"track_id", track.id}});
  if (track.finalized) fail(ErrorCode::track_finalized, "track " + track.id + " is finalized", {{"track_id", track.id}});
  mv.playground_id = pg.id;

  auto next = db_->prepare("SELECT COALESCE(MAX(version), 0) + 1 FROM model_versions WHERE track_id = ?");
  next.bind(1, track.id);
  next.step();
  mv.version = next.integer(0);
  mv.submitted_at = now_micros();

  db_->prepare("INSERT INTO model_versions (id, track_id, version, submitter, artifact_hash, artifact_size, "
               "preprocessor, summary, public_report, secret_report, predictions, custom_metadata, example_hash, "
               "example_size, submitted_at) VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)")
      .bind(1, mv.id)
      .bind(2, mv.track_id)
      .bind(3, mv.version)
      .bind(4, mv.submitter)
      .bind(5, mv.artifact.content_hash)
      .bind(6, mv.artifact.size_bytes)
      .bind(7, dump_json(mv.preprocessor))
      .bind(8, dump_json(onnx::to_json(mv.summary)))
      .bind(9, dump_json(metrics::to_json(mv.public_report)))
      .bind(10, mv.secret_report ? std::optional<std::string>(dump_json(metrics::to_json(*mv.secret_report)))
                                 : std::nullopt)
      .bind(11, dump_json(eval::values_to_json(mv.predictions)))
      .bind(12, dump_json(mv.custom_metadata))
      .bind(13, mv.example_data ? std::optional<std::string_view>(mv.example_data->content_hash) : std::nullopt)
      .bind(14, mv.example_data ? std::optional<std::int64_t>(mv.example_data->size_bytes) : std::nullopt)
      .bind(15, mv.submitted_at)
      .run();
  tx.commit();
  return mv;
}

namespace {

std::string version_select(const char *where) {
  return std::string("SELECT ") + kVersionCols +
         " FROM model_versions v JOIN tracks t ON t.id = v.track_id JOIN playgrounds p ON p.id = t.playground_id "
         "WHERE " +
         where;
}

} // namespace

ModelVersion Registry::get_version(const std::string &track_id, std::int64_t version) const {
  std::lock_guard lock(mu_);
  read_track(track_id);
  auto st = db_->prepare(version_select("v.track_id = ? AND v.version = ?"));
  st.bind(1, track_id).bind(2, version);
  if (!st.step())
    fail(ErrorCode::not_found, "track " + track_id + " has no version " + std::to_string(version),
         {{"track_id", track_id}, {"version", version}});
  return version_row(st);
}

ModelVersion Registry::get_model(const std::string &model_id) const {
  std::lock_guard lock(mu_);
  auto st = db_->prepare(version_select("v.id = ?"));
  st.bind(1, model_id);
  if (!st.step()) fail(ErrorCode::not_found, "no model " + model_id, {{"model_id", model_id}});
  return version_row(st);
}

std::vector<ModelVersion> Registry::list_versions(const std::string &track_id) const {
  std::lock_guard lock(mu_);
  read_track(track_id);
  auto st = db_->prepare(version_select("v.track_id = ? ORDER BY v.version"));
  st.bind(1, track_id);
  std::vector<ModelVersion> out;
  while (st.step()) out.push_back(version_row(st));
  return out;
}

EvalTrack Registry::finalize_track(const std::string &track_id, const std::string &caller) {
  std::lock_guard lock(mu_);
  Transaction tx(*db_);
  auto track = read_track(track_id);
  const auto pg = read_playground(track.playground_id);
  if (caller.empty()) fail(ErrorCode::unauthorized, "finalizing requires an API key");
  if (caller != pg.owner) fail(ErrorCode::forbidden, "only the playground owner can finalize", {{"track_id", track_id}});
  if (track.kind != TrackKind::competition)
    fail(ErrorCode::validation_error, "only competition tracks can be finalized", {{"track_id", track_id}});
  if (!track.finalized) {
    db_->prepare("UPDATE tracks SET finalized = 1 WHERE id = ?").bind(1, track_id).run();
    track.finalized = true;
  }
  tx.commit();
  return track;
}

DeploymentState Registry::record_deployment(const std::string &playground_id, const ModelVersion &v) {
  std::lock_guard lock(mu_);
  Transaction tx(*db_);
  auto pg = read_playground(playground_id);
  if (v.playground_id != pg.id)
    fail(ErrorCode::validation_error, "model " + v.id + " does not belong to playground " + pg.id);
  pg.deployment.track_id = v.track_id;
  pg.deployment.active_version = v.version;
  pg.deployment.model_id = v.id;
  pg.deployment.activated_at = now_micros();
  pg.deployment.activation_count += 1;
  db_->prepare("UPDATE playgrounds SET dep_track = ?, dep_version = ?, dep_model = ?, activated_at = ?, "
               "activation_count = ? WHERE id = ?")
      .bind(1, *pg.deployment.track_id)
      .bind(2, *pg.deployment.active_version)
      .bind(3, *pg.deployment.model_id)
      .bind(4, pg.deployment.activated_at)
      .bind(5, pg.deployment.activation_count)
      .bind(6, pg.id)
      .run();
  tx.commit();
  return pg.deployment;
}

json Registry::export_json() const {
  std::lock_guard lock(mu_);
  json out = {{"format", "modelhub-export/1"}};

  auto dump_table = [&](const std::string &sql) {
    json rows = json::array();
    auto st = db_->prepare(sql);
    const int cols = st.column_count();
    while (st.step()) {
      json row = json::object();
      for (int c = 0; c < cols; ++c) {
        const std::string name = st.column_name(c);
        if (st.is_integer(c))
          row[name] = st.integer(c);
        else if (auto s = st.opt_text(c))
          row[name] = *s;
        else
          row[name] = nullptr;
      }
      rows.push_back(std::move(row));
    }
    return rows;
  };
  out["playgrounds"] = dump_table("SELECT * FROM playgrounds ORDER BY id");
  out["tracks"] = dump_table("SELECT * FROM tracks ORDER BY id");
  out["model_versions"] = dump_table("SELECT * FROM model_versions ORDER BY track_id, version");
  out["api_keys"] = dump_table("SELECT key_id, user_id, salt, hash, revoked, created_at FROM api_keys ORDER BY key_id");
  // JSON-valued columns are nested as documents rather than strings.
  for (const char *table : {"playgrounds", "tracks", "model_versions"})
    for (auto &row : out[table])
      for (const char *col : {"collaborators", "y_train", "eval_labels", "split", "preprocessor", "summary",
                              "public_report", "secret_report", "predictions", "custom_metadata"})
        if (row.contains(col) && row[col].is_string()) row[col] = json::parse(row[col].get<std::string>());
  out["blobs"] = blobs_.list();
  return out;
}

json Registry::verify() const {
  json problems = json::array();
  std::int64_t n_tracks = 0, n_versions = 0;
  auto check_blob = [&](const BlobRef &ref, const std::string &owner) {
    try {
      blobs_.load(ref);
    } catch (const Error &e) {
      problems.push_back({{"kind", "blob"}, {"owner", owner}, {"content_hash", ref.content_hash}, {"error", e.what()}});
    }
  };
  for (const auto &pg : list_playgrounds()) {
    if (pg.example_data) check_blob(*pg.example_data, pg.id);
    for (const auto &t : list_tracks(pg.id)) {
      ++n_tracks;
      const auto versions = list_versions(t.id);
      for (std::size_t i = 0; i < versions.size(); ++i) {
        const auto &v = versions[i];
        ++n_versions;
        if (v.version != static_cast<std::int64_t>(i) + 1)
          problems.push_back({{"kind", "gap"}, {"track_id", t.id}, {"expected", i + 1}, {"actual", v.version}});
        check_blob(v.artifact, v.id);
        if (v.example_data) check_blob(*v.example_data, v.id);
      }
    }
  }
  const auto hashes = blobs_.list();
  for (const auto &h : hashes) {
    const auto size = static_cast<std::int64_t>(std::filesystem::file_size(blobs_.path_for(h)));
    check_blob(BlobRef{h, size, MediaKind::generic}, "store");
  }
  return {{"ok", problems.empty()},
          {"tracks", n_tracks},
          {"versions", n_versions},
          {"blobs", hashes.size()},
          {"problems", problems}};
}

} // namespace hub::registry
