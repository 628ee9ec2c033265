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

#include "service/hub.hpp"

#include <algorithm>
#include <iostream>
#include <set>

#include "common/error.hpp"
#include "common/json.hpp"
#include "common/sha256.hpp"
#include "eval/leaderboard.hpp"
#include "onnx/diff.hpp"
#include "onnx/model.hpp"

namespace hub::service {

using nlohmann::json;
using registry::EvalTrack;
using registry::ModelVersion;
using registry::Playground;

namespace {

void require_object(const json &body, std::string_view what) {
  if (!body.is_object())
    fail(ErrorCode::malformed_body, std::string(what) + " must be a JSON object", {{"pointer", ""}});
}

std::string required_string(const json &body, const char *key) {
  auto it = body.find(key);
  if (it == body.end() || !it->is_string() || it->get<std::string>().empty())
    fail(ErrorCode::validation_error, std::string("'") + key + "' must be a nonempty string",
         {{"field", key}, {"pointer", std::string("/") + key}});
  return it->get<std::string>();
}

std::optional<std::string> optional_string(const json &body, const char *key) {
  auto it = body.find(key);
  if (it == body.end() || it->is_null()) return std::nullopt;
  if (!it->is_string())
    fail(ErrorCode::validation_error, std::string("'") + key + "' must be a string",
         {{"field", key}, {"pointer", std::string("/") + key}});
  return it->get<std::string>();
}

void require_user(const std::string &user, std::string_view action) {
  if (user.empty()) fail(ErrorCode::unauthorized, std::string(action) + " requires an API key");
}

// Tabular example data is a list of records, image example data a list of
// arrays. Either may arrive bare or wrapped as {"rows": ...}/{"instances": ...}.
json normalize_example(InputType input, const json &data) {
  const char *key = input == InputType::tabular ? "rows" : "instances";
  json items = data;
  if (data.is_object()) {
    if (!data.contains(key))
      fail(ErrorCode::validation_error, std::string("example_data must be a list or {\"") + key + "\": [...]}",
           {{"field", "example_data"}});
    items = data.at(key);
  }
  if (!items.is_array() || items.empty())
    fail(ErrorCode::validation_error, "example_data must contain at least one item", {{"field", "example_data"}});
  if (input == InputType::tabular)
    for (const auto &row : items)
      if (!row.is_object())
        fail(ErrorCode::validation_error, "tabular example rows must be objects", {{"field", "example_data"}});
  return json{{key, items}};
}

bool contains_label(const std::vector<Label> &labels, const Label &l) {
  return std::find(labels.begin(), labels.end(), l) != labels.end();
}

} // namespace

Hub::Hub(const std::filesystem::path &data_dir, Limits limits) : limits_(limits), registry_(data_dir) {
  restore_deployments();
}

std::string Hub::authorize(const std::optional<std::string> &bearer) const {
  if (!bearer) return {};
  return registry_.authenticate(*bearer);
}

// ---------------------------------------------------------------------------
// Access helpers

Playground Hub::readable(const std::string &user, const std::string &playground_id) const {
  auto pg = registry_.get_playground(playground_id);
  if (!registry::can_read(pg, user))
    fail(ErrorCode::forbidden, "playground " + pg.id + " is private", {{"playground_id", pg.id}});
  return pg;
}

ModelVersion Hub::readable_model(const std::string &user, const std::string &model_id) const {
  auto v = registry_.get_model(model_id);
  readable(user, v.playground_id);
  return v;
}

bool Hub::sees_secret(const std::string &user, const Playground &pg, const EvalTrack &t) const {
  return t.kind == TrackKind::competition && (t.finalized || (!user.empty() && user == pg.owner));
}

json Hub::track_view(const std::string &user, const Playground &pg, const EvalTrack &t) const {
  const auto n = static_cast<std::int64_t>(eval::values_size(t.eval_labels));
  json j = {{"id", t.id},
            {"playground_id", t.playground_id},
            {"kind", to_string(t.kind)},
            {"policy", to_string(t.policy)},
            {"finalized", t.finalized},
            {"created_at", format_timestamp(t.created_at)},
            {"eval_size", n}};
  if (t.kind == TrackKind::competition) {
    const auto secret = static_cast<std::int64_t>(t.split.secret_indices.size());
    j["secret_fraction"] = t.split.secret_fraction;
    j["public_count"] = n - secret;
    j["secret_count"] = secret;
    // The seed regenerates the mask, so it is as secret as the indices.
    if (sees_secret(user, pg, t)) j["split"] = eval::to_json(t.split);
  } else {
    j["public_count"] = n;
    j["secret_count"] = 0;
  }
  return j;
}

json Hub::playground_view(const std::string &user, const Playground &pg) const {
  json j = {{"id", pg.id},
            {"name", pg.name},
            {"owner", pg.owner},
            {"input_type", to_string(pg.input_type)},
            {"task_type", to_string(pg.task_type)},
            {"visibility", to_string(pg.visibility)},
            {"collaborators", pg.collaborators},
            {"created_at", format_timestamp(pg.created_at)},
            {"deployment", registry::to_json(pg.deployment)}};
  j["example_data"] = pg.example_data ? registry::to_json(*pg.example_data) : json(nullptr);
  j["label_map"] = pg.y_train ? labels_to_json(runtime::derive_label_map(*pg.y_train)) : json(nullptr);
  json tracks = json::array();
  for (const auto &t : registry_.list_tracks(pg.id)) tracks.push_back(track_view(user, pg, t));
  j["tracks"] = std::move(tracks);
  return j;
}

// ---------------------------------------------------------------------------
// Playgrounds

json Hub::create_playground(const std::string &user, const json &body) {
  require_user(user, "creating a playground");
  require_object(body, "request body");
  registry::NewPlayground p;
  p.owner = user;
  p.name = required_string(body, "name");
  p.input_type = parse_input_type(required_string(body, "input_type"));
  p.task_type = parse_task_type(required_string(body, "task_type"));
  if (auto vis = optional_string(body, "visibility")) p.visibility = parse_visibility(*vis);
  if (auto it = body.find("collaborators"); it != body.end() && !it->is_null()) {
    if (!it->is_array())
      fail(ErrorCode::validation_error, "collaborators must be a list of user ids", {{"field", "collaborators"}});
    for (const auto &c : *it) {
      if (!c.is_string() || c.get<std::string>().empty())
        fail(ErrorCode::validation_error, "collaborators must be a list of user ids", {{"field", "collaborators"}});
      p.collaborators.insert(c.get<std::string>());
    }
  }
  if (auto it = body.find("example_data"); it != body.end() && !it->is_null())
    p.example_data = dump_json(normalize_example(p.input_type, *it));
  if (auto it = body.find("y_train"); it != body.end() && !it->is_null()) {
    if (!it->is_array()) fail(ErrorCode::type_mismatch, "y_train must be a list of labels", {{"field", "y_train"}});
    p.y_train = labels_from_json(*it);
    runtime::derive_label_map(*p.y_train); // rejects mixed label kinds now
  }
  return playground_view(user, registry_.create_playground(p));
}

json Hub::list_playgrounds(const std::string &user) const {
  json out = json::array();
  for (const auto &pg : registry_.list_playgrounds())
    if (registry::can_read(pg, user)) out.push_back(playground_view(user, pg));
  return {{"playgrounds", out}};
}

json Hub::get_playground(const std::string &user, const std::string &id) const {
  return playground_view(user, readable(user, id));
}

json Hub::schema(const std::string &user, const std::string &id) const {
  const auto pg = readable(user, id);
  std::shared_ptr<const runtime::RuntimeModel> active;
  if (auto s = slot(pg.id, false)) active = std::atomic_load(&s->active);

  std::optional<json> example;
  if (pg.example_data) example = json::parse(registry_.blobs().load(*pg.example_data));

  json j = {{"playground_id", pg.id},
            {"input_type", to_string(pg.input_type)},
            {"task_type", to_string(pg.task_type)},
            {"model_version", active ? json(active->config().version) : json(nullptr)}};
  if (pg.y_train)
    j["labels"] = labels_to_json(runtime::derive_label_map(*pg.y_train));
  else if (active && !active->config().label_map.empty())
    j["labels"] = labels_to_json(active->config().label_map);
  else
    j["labels"] = nullptr;

  json fields = json::array();
  if (pg.input_type == InputType::image) {
    j["body_key"] = "instances";
    json f = {{"name", "instances"}, {"type", "image"}};
    if (active) {
      const auto &in = active->input();
      json shape = json::array();
      if (in.shape)
        for (const auto &d : *in.shape) shape.push_back(d.known() ? json(d.value) : json(nullptr));
      f["shape"] = shape;
      f["dtype"] = std::string(onnx::dtype_name(in.elem_type));
    }
    fields.push_back(std::move(f));
    j["example"] = example ? example->at("instances").at(0) : json(nullptr);
  } else {
    j["body_key"] = "rows";
    const json first = example ? example->at("rows").at(0) : json(nullptr);
    if (active && active->config().preprocess) {
      const auto &spec = *active->config().preprocess;
      for (const auto &col : spec.columns) {
        json f = {{"name", col.name}, {"type", col.type == runtime::ColumnType::numeric ? "numeric" : "categorical"}};
        std::vector<Label> choices;
        bool optional = false;
        for (const auto &step : spec.steps) {
          if (step.column != col.name) continue;
          if (step.kind == runtime::StepKind::one_hot)
            for (const auto &c : step.categories)
              if (!contains_label(choices, c)) choices.push_back(c);
          if (step.kind == runtime::StepKind::constant_impute) optional = true;
        }
        if (col.type == runtime::ColumnType::categorical) f["choices"] = labels_to_json(choices);
        f["required"] = !optional;
        f["example"] = first.is_object() && first.contains(col.name) ? first.at(col.name) : json(nullptr);
        fields.push_back(std::move(f));
      }
    } else if (example) {
      // No model yet: infer field kinds from the example rows.
      std::vector<std::string> names;
      for (const auto &row : example->at("rows"))
        for (const auto &[k, v] : row.items())
          if (std::find(names.begin(), names.end(), k) == names.end()) names.push_back(k);
      for (const auto &name : names) {
        bool numeric = true;
        std::set<std::string> seen;
        json choices = json::array();
        for (const auto &row : example->at("rows")) {
          auto it = row.find(name);
          if (it == row.end() || it->is_null()) continue;
          if (!it->is_number()) numeric = false;
          if (seen.insert(it->dump()).second) choices.push_back(*it);
        }
        json f = {{"name", name}, {"type", numeric ? "numeric" : "categorical"}, {"required", true}};
        if (!numeric) f["choices"] = choices;
        f["example"] = first.contains(name) ? first.at(name) : json(nullptr);
        fields.push_back(std::move(f));
      }
    }
    j["example"] = first;
  }
  j["fields"] = std::move(fields);
  return j;
}

// ---------------------------------------------------------------------------
// Tracks and submissions

json Hub::add_track(const std::string &user, const std::string &playground_id, const json &body) {
  require_user(user, "creating a track");
  require_object(body, "request body");
  const auto pg = readable(user, playground_id);
  registry::NewTrack t;
  t.playground_id = pg.id;
  t.caller = user;
  t.kind = parse_track_kind(required_string(body, "kind"));
  if (auto p = optional_string(body, "policy")) t.policy = parse_track_policy(*p);
  if (!body.contains("eval_labels"))
    fail(ErrorCode::validation_error, "'eval_labels' is required", {{"field", "eval_labels"}});
  t.eval_labels = body.at("eval_labels");
  if (auto it = body.find("secret_fraction"); it != body.end() && !it->is_null()) {
    if (!it->is_number()) fail(ErrorCode::type_mismatch, "secret_fraction must be a number", {{"field", "secret_fraction"}});
    t.secret_fraction = it->get<double>();
  }
  if (auto it = body.find("seed"); it != body.end() && !it->is_null()) {
    if (it->is_number_unsigned())
      t.seed = it->get<std::uint64_t>();
    else if (it->is_number_integer() && it->get<std::int64_t>() >= 0)
      t.seed = static_cast<std::uint64_t>(it->get<std::int64_t>());
    else
      fail(ErrorCode::type_mismatch, "seed must be a non-negative integer", {{"field", "seed"}});
  } else {
    std::uint64_t seed = 0;
    for (char c : random_hex(8)) seed = seed * 16 + static_cast<std::uint64_t>(c <= '9' ? c - '0' : c - 'a' + 10);
    t.seed = seed;
  }
  const auto track = registry_.add_track(t);
  return track_view(user, pg, track);
}

json Hub::get_track(const std::string &user, const std::string &track_id) const {
  const auto t = registry_.get_track(track_id);
  const auto pg = readable(user, t.playground_id);
  auto j = track_view(user, pg, t);
  j["versions"] = registry_.list_versions(t.id).size();
  return j;
}

json Hub::submit(const std::string &user, const std::string &track_id, const SubmissionParts &parts) {
  require_user(user, "submitting");
  const auto track = registry_.get_track(track_id);
  const auto pg = readable(user, track.playground_id);
  if (!registry::can_submit(pg, track, user))
    fail(ErrorCode::forbidden, "track " + track.id + " only accepts team submissions", {{"track_id", track.id}});
  if (track.finalized) fail(ErrorCode::track_finalized, "track " + track.id + " is finalized", {{"track_id", track.id}});

  auto cap = [](const std::string &part, std::size_t size, std::size_t limit) {
    if (size > limit)
      fail(ErrorCode::payload_too_large, "part '" + part + "' exceeds " + std::to_string(limit) + " bytes",
           {{"part", part}, {"limit", limit}, {"size", size}});
  };
  cap("model", parts.model.size(), limits_.max_model_bytes);
  cap("predictions", parts.predictions.size(), limits_.max_predictions_bytes);
  if (parts.preprocessor) cap("preprocessor", parts.preprocessor->size(), limits_.max_json_bytes);
  if (parts.custom_metadata) cap("custom_metadata", parts.custom_metadata->size(), limits_.max_json_bytes);
  if (parts.example_data) cap("example_data", parts.example_data->size(), limits_.max_json_bytes);
  if (parts.model.empty()) fail(ErrorCode::malformed_body, "missing 'model' part", {{"pointer", "model"}});
  if (parts.predictions.empty())
    fail(ErrorCode::malformed_body, "missing 'predictions' part", {{"pointer", "predictions"}});

  registry::NewVersion v;
  v.track_id = track.id;
  v.submitter = user;
  v.artifact_bytes = parts.model;
  const auto model = onnx::parse_model(std::as_bytes(std::span(parts.model.data(), parts.model.size())));
  v.summary = onnx::extract_summary(model);

  json preds = parse_json(parts.predictions, "predictions");
  if (preds.is_object() && preds.contains("predictions")) preds = preds.at("predictions");
  v.predictions = eval::values_from_json(pg.task_type, preds, "predictions");

  v.preprocessor = nullptr;
  if (parts.preprocessor) {
    const json spec = parse_json(*parts.preprocessor, "preprocessor");
    if (!spec.is_null()) {
      if (pg.input_type == InputType::image)
        fail(ErrorCode::validation_error, "image playgrounds take raw arrays, not a preprocessor",
             {{"field", "preprocessor"}});
      v.preprocessor = runtime::to_json(runtime::parse_preprocess_spec(spec));
    }
  }
  if (parts.custom_metadata) {
    v.custom_metadata = parse_json(*parts.custom_metadata, "custom_metadata");
    if (v.custom_metadata.is_null()) v.custom_metadata = json::object();
  }
  if (parts.example_data)
    v.example_data = dump_json(normalize_example(pg.input_type, parse_json(*parts.example_data, "example_data")));

  v.scores = eval::score_submission(pg.task_type, track.eval_labels, track.split, v.predictions);
  const auto mv = registry_.register_model_version(v);
  // Public scores only, even for the owner: the response goes to a submitter.
  return {{"model_id", mv.id},
          {"track_id", mv.track_id},
          {"playground_id", mv.playground_id},
          {"version", mv.version},
          {"scores", metrics::to_json(mv.public_report)},
          {"submitted_at", format_timestamp(mv.submitted_at)}};
}

std::string Hub::leaderboard(const std::string &user, const std::string &track_id, const LeaderboardQuery &q) const {
  const auto track = registry_.get_track(track_id);
  const auto pg = readable(user, track.playground_id);
  const bool visible = sees_secret(user, pg, track);
  const bool use_secret = q.secret.value_or(track.kind == TrackKind::competition && track.finalized);
  if (use_secret && track.kind != TrackKind::competition)
    fail(ErrorCode::validation_error, "experiment tracks have no secret split", {{"field", "secret"}});
  if (use_secret && !visible)
    fail(ErrorCode::forbidden, "secret scores are hidden until the competition is finalized",
         {{"track_id", track.id}});
  if (!q.format.empty() && q.format != "json" && q.format != "csv")
    fail(ErrorCode::validation_error, "format must be json or csv", {{"field", "format"}, {"allowed", {"json", "csv"}}});

  std::vector<eval::LeaderboardEntry> entries;
  for (const auto &v : registry_.list_versions(track.id)) {
    eval::LeaderboardEntry e;
    e.version = v.version;
    e.model_id = v.id;
    e.submitter = v.submitter;
    e.public_report = v.public_report;
    if (visible) e.secret_report = v.secret_report;
    e.parameter_count = v.summary.parameter_count;
    e.memory_size_bytes = v.summary.memory_size_bytes;
    e.op_histogram = onnx::op_histogram_headline(v.summary);
    e.custom_metadata = v.custom_metadata;
    e.submitted_at = v.submitted_at;
    entries.push_back(std::move(e));
  }
  auto board = eval::build_leaderboard(track.id, pg.task_type, std::move(entries), q.sort, use_secret);
  board.finalized = track.finalized;
  if (q.format == "csv") return eval::to_csv(board);
  return dump_json(eval::to_json(board));
}

json Hub::finalize(const std::string &user, const std::string &track_id) {
  require_user(user, "finalizing");
  const auto track = registry_.get_track(track_id);
  readable(user, track.playground_id);
  registry_.finalize_track(track_id, user);
  return json::parse(leaderboard(user, track_id, {}));
}

// ---------------------------------------------------------------------------
// Models

json Hub::model_metadata(const std::string &user, const std::string &model_id) const {
  const auto v = readable_model(user, model_id);
  const auto track = registry_.get_track(v.track_id);
  const auto pg = registry_.get_playground(v.playground_id);
  json j = {{"model_id", v.id},
            {"track_id", v.track_id},
            {"playground_id", v.playground_id},
            {"version", v.version},
            {"submitter", v.submitter},
            {"artifact", registry::to_json(v.artifact)},
            {"preprocessor", v.preprocessor},
            {"summary", onnx::to_json(v.summary)},
            {"op_histogram_headline", onnx::op_histogram_headline(v.summary)},
            {"scores", metrics::to_json(v.public_report)},
            {"custom_metadata", v.custom_metadata},
            {"submitted_at", format_timestamp(v.submitted_at)}};
  j["example_data"] = v.example_data ? registry::to_json(*v.example_data) : json(nullptr);
  if (v.secret_report && sees_secret(user, pg, track)) j["secret_scores"] = metrics::to_json(*v.secret_report);
  return j;
}

Artifact Hub::artifact(const std::string &user, const std::string &model_id) const {
  const auto v = readable_model(user, model_id);
  return {registry_.blobs().load(v.artifact), v.artifact.content_hash, v.id + ".onnx"};
}

json Hub::compare(const std::string &user, const std::string &left, const std::string &right) const {
  const auto a = readable_model(user, left);
  const auto b = readable_model(user, right);
  auto j = onnx::to_json(onnx::compare_models(a.summary, b.summary));
  j["left_model"] = a.id;
  j["right_model"] = b.id;
  return j;
}

std::string Hub::compare_text(const std::string &user, const std::string &left, const std::string &right) const {
  const auto a = readable_model(user, left);
  const auto b = readable_model(user, right);
  return onnx::render_architecture_text(onnx::compare_models(a.summary, b.summary));
}

// ---------------------------------------------------------------------------
// Deployment and prediction

std::shared_ptr<Hub::Slot> Hub::slot(const std::string &playground_id, bool create) const {
  {
    std::shared_lock lock(slots_mu_);
    auto it = slots_.find(playground_id);
    if (it != slots_.end()) return it->second;
  }
  if (!create) return nullptr;
  std::unique_lock lock(slots_mu_);
  auto &s = slots_[playground_id];
  if (!s) s = std::make_shared<Slot>();
  return s;
}

std::shared_ptr<const runtime::RuntimeModel> Hub::load_runtime(const Playground &pg, const ModelVersion &v) const {
  runtime::RuntimeConfig cfg;
  cfg.input_type = pg.input_type;
  cfg.task_type = pg.task_type;
  cfg.version = v.version;
  cfg.model_id = v.id;
  if (!v.preprocessor.is_null()) cfg.preprocess = runtime::parse_preprocess_spec(v.preprocessor);
  if (pg.task_type == TaskType::classification) {
    if (pg.y_train) {
      cfg.label_map = runtime::derive_label_map(*pg.y_train);
    } else {
      // Without training labels, the evaluation labels name the classes.
      const auto track = registry_.get_track(v.track_id);
      cfg.label_map = runtime::derive_label_map(std::get<std::vector<Label>>(track.eval_labels));
    }
  }
  const auto bytes = registry_.blobs().load(v.artifact);
  return runtime::RuntimeModel::load(std::as_bytes(std::span(bytes.data(), bytes.size())), std::move(cfg));
}

json Hub::deploy(const std::string &user, const std::string &playground_id, const json &body) {
  require_user(user, "deploying");
  require_object(body, "request body");
  const auto pg = readable(user, playground_id);
  if (!registry::is_member(pg, user))
    fail(ErrorCode::forbidden, "only the owner or collaborators can deploy", {{"playground_id", pg.id}});

  ModelVersion v;
  if (auto model_id = optional_string(body, "model_id")) {
    v = registry_.get_model(*model_id);
    if (v.playground_id != pg.id)
      fail(ErrorCode::not_found, "model " + *model_id + " is not in playground " + pg.id, {{"model_id", *model_id}});
  } else {
    auto it = body.find("version");
    if (it == body.end() || !it->is_number_integer())
      fail(ErrorCode::validation_error, "'version' must be an integer", {{"field", "version"}, {"pointer", "/version"}});
    std::string track_id;
    if (auto t = optional_string(body, "track_id")) {
      track_id = *t;
      if (registry_.get_track(track_id).playground_id != pg.id)
        fail(ErrorCode::not_found, "track " + track_id + " is not in playground " + pg.id, {{"track_id", track_id}});
    } else {
      const auto tracks = registry_.list_tracks(pg.id);
      if (tracks.empty()) fail(ErrorCode::not_found, "playground " + pg.id + " has no tracks", {{"playground_id", pg.id}});
      if (tracks.size() > 1) {
        json ids = json::array();
        for (const auto &t : tracks) ids.push_back(t.id);
        fail(ErrorCode::validation_error, "playground has several tracks; name one with 'track_id'",
             {{"field", "track_id"}, {"tracks", ids}});
      }
      track_id = tracks.front().id;
    }
    v = registry_.get_version(track_id, it->get<std::int64_t>());
  }

  // Built and validated before anything changes; failures leave the active
  // model untouched.
  auto model = load_runtime(pg, v);
  auto s = slot(pg.id, true);
  std::lock_guard lock(s->deploy_mu);
  const auto state = registry_.record_deployment(pg.id, v);
  std::atomic_store(&s->active, std::shared_ptr<const runtime::RuntimeModel>(std::move(model)));
  return {{"playground_id", pg.id}, {"deployment", registry::to_json(state)}};
}

json Hub::predict(const std::string &user, const std::string &playground_id, const json &body) const {
  const auto pg = readable(user, playground_id);
  std::shared_ptr<const runtime::RuntimeModel> model;
  if (auto s = slot(pg.id, false)) model = std::atomic_load(&s->active);
  if (!model)
    fail(ErrorCode::no_runtime_model, "no runtime model deployed for playground " + pg.id, {{"playground_id", pg.id}});
  return model->predict_body(body);
}

void Hub::restore_deployments() {
  for (const auto &pg : registry_.list_playgrounds()) {
    if (!pg.deployment.model_id) continue;
    try {
      auto model = load_runtime(pg, registry_.get_model(*pg.deployment.model_id));
      std::atomic_store(&slot(pg.id, true)->active, std::move(model));
    } catch (const Error &e) {
      std::cerr << "hub: cannot restore deployment of " << pg.id << ": " << e.what() << "\n";
    }
  }
}

std::string Hub::state_digest() const { return sha256_hex(dump_json(registry_.export_json())); }

} // namespace hub::service
