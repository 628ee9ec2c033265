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

#include "output.hpp"

#include <algorithm>

namespace hubctl::out {

std::string cell(const json &v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v.get<double>());
    return buf;
  }
  return v.dump();
}

void table(std::ostream &os, const std::vector<std::string> &header, const std::vector<std::vector<std::string>> &rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto &r : rows)
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  auto line = [&](const std::vector<std::string> &r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
      s += r[i];
      if (i + 1 < r.size()) s.append(width[i] - r[i].size() + 2, ' ');
    }
    os << s << "\n";
  };
  line(header);
  for (const auto &r : rows) line(r);
}

void pairs(std::ostream &os, const std::vector<std::pair<std::string, std::string>> &kv) {
  std::size_t w = 0;
  for (const auto &[k, v] : kv) w = std::max(w, k.size());
  for (const auto &[k, v] : kv) os << k << std::string(w - k.size() + 2, ' ') << v << "\n";
}

namespace {

std::string deployment_line(const json &d) {
  if (d.is_null() || d.value("model_id", json()).is_null()) return "none";
  return "v" + cell(d.at("active_version")) + " (" + cell(d.at("model_id")) + ", track " + cell(d.at("track_id")) +
         ")";
}

std::string join(const json &arr) {
  std::string s;
  for (const auto &x : arr) s += (s.empty() ? "" : ", ") + cell(x);
  return s.empty() ? "-" : s;
}

std::string track_line(const json &t) {
  std::string s = cell(t.at("id")) + "  " + cell(t.at("kind")) + "  " + cell(t.at("policy")) + "  eval " +
                  cell(t.at("eval_size"));
  if (t.contains("secret_count"))
    s += " (public " + cell(t.at("public_count")) + ", secret " + cell(t.at("secret_count")) + ")";
  if (t.value("finalized", false)) s += "  finalized";
  return s;
}

} // namespace

void playground(std::ostream &os, const json &pg) {
  const auto &tracks = pg.at("tracks");
  pairs(os, {{"id", cell(pg.at("id"))},
             {"name", cell(pg.at("name"))},
             {"owner", cell(pg.at("owner"))},
             {"input", cell(pg.at("input_type"))},
             {"task", cell(pg.at("task_type"))},
             {"visibility", cell(pg.at("visibility"))},
             {"collaborators", join(pg.at("collaborators"))},
             {"deployment", deployment_line(pg.at("deployment"))},
             {"tracks", tracks.empty() ? "none" : std::to_string(tracks.size())}});
  for (const auto &t : tracks) os << "  " << track_line(t) << "\n";
}

void playground_list(std::ostream &os, const json &body) {
  std::vector<std::vector<std::string>> rows;
  for (const auto &pg : body.at("playgrounds"))
    rows.push_back({cell(pg.at("id")), cell(pg.at("name")), cell(pg.at("owner")), cell(pg.at("input_type")),
                    cell(pg.at("task_type")), cell(pg.at("visibility")), std::to_string(pg.at("tracks").size()),
                    deployment_line(pg.at("deployment"))});
  table(os, {"ID", "NAME", "OWNER", "INPUT", "TASK", "VISIBILITY", "TRACKS", "DEPLOYED"}, rows);
}

void track(std::ostream &os, const json &t) {
  std::vector<std::pair<std::string, std::string>> kv{{"id", cell(t.at("id"))},
                                                      {"playground", cell(t.at("playground_id"))},
                                                      {"kind", cell(t.at("kind"))},
                                                      {"policy", cell(t.at("policy"))},
                                                      {"finalized", cell(t.at("finalized"))},
                                                      {"eval size", cell(t.at("eval_size"))}};
  if (t.contains("secret_count")) {
    kv.emplace_back("public", cell(t.at("public_count")));
    kv.emplace_back("secret", cell(t.at("secret_count")));
  }
  pairs(os, kv);
}

void schema(std::ostream &os, const json &s) {
  os << "body key: " << cell(s.at("body_key")) << "   model version: " << cell(s.at("model_version")) << "\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto &f : s.at("fields")) {
    std::string extra;
    if (f.contains("choices")) extra = join(f.at("choices"));
    if (f.contains("shape")) extra = f.at("shape").dump() + " " + cell(f.value("dtype", json()));
    rows.push_back({cell(f.at("name")), cell(f.at("type")), cell(f.value("required", json(true))), extra});
  }
  table(os, {"FIELD", "TYPE", "REQUIRED", "CHOICES/SHAPE"}, rows);
  if (!s.at("labels").is_null()) os << "labels: " << join(s.at("labels")) << "\n";
}

void scores(std::ostream &os, const json &s) {
  std::vector<std::pair<std::string, std::string>> kv;
  for (const auto &[k, v] : s.items()) kv.emplace_back(k, cell(v));
  pairs(os, kv);
}

void submission(std::ostream &os, const json &r) {
  os << "version " << cell(r.at("version")) << "\n";
  os << "model   " << cell(r.at("model_id")) << "\n";
  if (r.contains("scores")) scores(os, r.at("scores"));
}

void leaderboard(std::ostream &os, const json &board) {
  os << "track " << cell(board.at("track_id")) << ", sorted by " << cell(board.at("sort_metric")) << " on the "
     << (board.value("ranked_on_secret", false) ? "secret" : "public") << " split"
     << (board.value("finalized", false) ? " (finalized)" : "") << "\n";
  const auto &entries = board.at("entries");
  std::vector<std::string> metric_keys, secret_keys;
  if (!entries.empty()) {
    for (const auto &[k, v] : entries.front().at("scores").items()) metric_keys.push_back(k);
    if (entries.front().contains("secret_scores"))
      for (const auto &[k, v] : entries.front().at("secret_scores").items()) secret_keys.push_back(k);
  }
  std::vector<std::string> header{"RANK", "VERSION", "MODEL", "SUBMITTER"};
  for (const auto &k : metric_keys) header.push_back(k);
  for (const auto &k : secret_keys) header.push_back("secret " + k);
  header.push_back("PARAMS");
  std::vector<std::vector<std::string>> rows;
  for (const auto &e : entries) {
    std::vector<std::string> r{cell(e.at("rank")), cell(e.at("version")), cell(e.at("model_id")),
                               cell(e.at("submitter"))};
    for (const auto &k : metric_keys) r.push_back(cell(e.at("scores").value(k, json())));
    for (const auto &k : secret_keys) r.push_back(cell(e.value("secret_scores", json::object()).value(k, json())));
    r.push_back(cell(e.at("parameter_count")));
    rows.push_back(std::move(r));
  }
  table(os, header, rows);
}

void model_metadata(std::ostream &os, const json &m) {
  const auto &sum = m.at("summary");
  pairs(os, {{"model", cell(m.at("model_id"))},
             {"version", cell(m.at("version"))},
             {"track", cell(m.at("track_id"))},
             {"submitter", cell(m.at("submitter"))},
             {"content hash", cell(m.at("artifact").at("content_hash"))},
             {"parameters", cell(sum.value("parameter_count", json()))},
             {"memory bytes", cell(sum.value("memory_size_bytes", json()))},
             {"ops", cell(m.value("op_histogram_headline", json()))}});
  scores(os, m.at("scores"));
}

void deployment(std::ostream &os, const json &d) {
  os << "deployed " << deployment_line(d.at("deployment")) << " to " << cell(d.at("playground_id")) << "\n";
}

void predictions(std::ostream &os, const json &r) {
  os << "model " << cell(r.at("model_id")) << " version " << cell(r.at("model_version")) << "\n";
  std::vector<std::vector<std::string>> rows;
  const auto &preds = r.at("predictions");
  for (std::size_t i = 0; i < preds.size(); ++i) rows.push_back({std::to_string(i), cell(preds[i])});
  for (const auto &e : r.at("errors"))
    if (auto idx = e.value("index", std::size_t{0}); idx < rows.size())
      rows[idx][1] = "error " + cell(e.value("code", json())) + ": " + cell(e.value("message", json()));
  table(os, {"ROW", "PREDICTION"}, rows);
}

} // namespace hubctl::out
