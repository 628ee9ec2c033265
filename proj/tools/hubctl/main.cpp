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

// hubctl: command-line client for the model hub, plus the server launcher and
// local administration commands. Talks to everything through libmodelhub.
#include <modelhub/modelhub.h>

#include <csignal>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <pthread.h>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "client.hpp"
#include "config.hpp"
#include "output.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace hubctl;

namespace {

std::string read_input(const std::string &path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(exit_local, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string &path) {
  try {
    return json::parse(read_input(path));
  } catch (const json::exception &e) {
    throw Failure(exit_local, path + " is not valid JSON: " + e.what());
  }
}

// Writes via a temporary file so readers never see a partial file.
void write_file(const fs::path &path, const std::string &data, fs::perms perms = fs::perms::none) {
  const fs::path tmp = path.string() + ".part";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Failure(exit_local, "cannot write " + tmp.string());
    if (perms != fs::perms::none) fs::permissions(tmp, perms);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out.flush()) throw Failure(exit_local, "cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw Failure(exit_local, "cannot write " + path.string() + ": " + ec.message());
}

std::string url_encode(const std::string &s) {
  static const char *hex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 15];
    }
  }
  return out;
}

std::string take(char *p) {
  std::string s = p ? p : "";
  hub_free(p);
  return s;
}

std::string sha256_hex(const std::string &data) {
  char hex[65];
  hub_sha256_hex(data.data(), data.size(), hex);
  return hex;
}

// JSON goes out exactly as the server sent it, newline-terminated.
void print_body(const std::string &body) {
  std::cout << body;
  if (body.empty() || body.back() != '\n') std::cout << "\n";
}

struct Globals {
  ConfigFlags flags;
  Config cfg;
  bool resolved = false;

  const Config &config() {
    if (!resolved) {
      try {
        cfg = resolve_config(flags, process_env());
      } catch (const std::runtime_error &e) {
        throw Failure(exit_local, e.what());
      }
      resolved = true;
    }
    return cfg;
  }
  Format format() { return config().format; }
  Client client() { return Client(config().server, config().api_key); }

  // csv only exists for leaderboards.
  Format json_or_table() {
    const auto f = format();
    if (f == Format::csv) throw Failure(exit_local, "--format csv is only available for leaderboard");
    return f;
  }
};

template <class Render> void emit(Globals &g, const Reply &r, Render render) {
  if (g.json_or_table() == Format::json) {
    print_body(r.body);
    return;
  }
  render(std::cout, json::parse(r.body));
}

// ---- serve -------------------------------------------------------------------

struct ServeArgs {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string data_dir = "hub-data";
  std::string ui_dir;
  std::uint64_t max_model_bytes = 0, max_predictions_bytes = 0, max_json_bytes = 0;
  int threads = 0;
};

int run_serve(const ServeArgs &a) {
  // Block the stop signals before any server thread exists so that only the
  // waiter below receives them.
  sigset_t stop_set;
  sigemptyset(&stop_set);
  sigaddset(&stop_set, SIGINT);
  sigaddset(&stop_set, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &stop_set, nullptr);

  hub_server_options o;
  hub_server_options_init(&o);
  o.host = a.host.c_str();
  o.port = a.port;
  o.data_dir = a.data_dir.c_str();
  o.ui_dir = a.ui_dir.empty() ? nullptr : a.ui_dir.c_str();
  o.max_model_bytes = a.max_model_bytes;
  o.max_predictions_bytes = a.max_predictions_bytes;
  o.max_json_bytes = a.max_json_bytes;
  o.threads = a.threads;

  hub_server *srv = nullptr;
  check_local(hub_server_create(&o, &srv));
  int port = 0;
  if (hub_server_bind(srv, &port) != HUB_OK) {
    const std::string msg = hub_last_error();
    hub_server_destroy(srv);
    throw Failure(exit_local, msg);
  }
  std::cout << "listening on http://" << a.host << ":" << port << std::endl;

  std::thread waiter([srv, stop_set] {
    int sig = 0;
    sigwait(&stop_set, &sig);
    hub_server_stop(srv);
  });
  const hub_status st = hub_server_run(srv);
  pthread_kill(waiter.native_handle(), SIGTERM); // no-op if it already fired
  waiter.join();
  hub_server_destroy(srv);
  check_local(st);
  std::cerr << "hubctl: server stopped\n";
  return exit_ok;
}

// ---- local commands ------------------------------------------------------------

struct Registry {
  hub_registry *r = nullptr;
  explicit Registry(const std::string &dir) { check_local(hub_registry_open(dir.c_str(), &r)); }
  ~Registry() { hub_registry_close(r); }
};

// ---- remote commands ------------------------------------------------------------

json predict_body(Globals &g, Client &c, const std::string &playground, const json &input) {
  if (input.is_object()) return input;
  if (!input.is_array()) throw Failure(exit_local, "predict input must be a JSON object or an array of rows");
  // A bare array is wrapped under the key the playground expects.
  const auto pg = json::parse(c.get("/playgrounds/" + playground).body);
  (void)g;
  return {{pg.at("input_type") == "image" ? "instances" : "rows", input}};
}

int run_instantiate(Globals &g, const std::string &model_id, const std::string &out_dir) {
  auto c = g.client();
  const auto meta_reply = c.get("/models/" + model_id + "/metadata");
  const auto meta = json::parse(meta_reply.body);
  const auto art = c.get("/models/" + model_id + "/artifact");

  const auto expected = meta.at("artifact").at("content_hash").get<std::string>();
  const auto actual = sha256_hex(art.body);
  if (actual != expected || (!art.content_hash.empty() && art.content_hash != expected))
    throw Failure(exit_local, "downloaded artifact hash " + actual + " does not match the registry hash " + expected);

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Failure(exit_local, "cannot create " + out_dir + ": " + ec.message());
  const auto model_path = fs::path(out_dir) / (model_id + ".onnx");
  const auto summary_path = fs::path(out_dir) / (model_id + ".summary.json");
  write_file(model_path, art.body);
  write_file(summary_path, meta.dump(2) + "\n");
  json result = {{"model_id", model_id},
                 {"artifact", model_path.string()},
                 {"summary", summary_path.string()},
                 {"content_hash", actual}};
  if (!meta.at("preprocessor").is_null()) {
    const auto pp_path = fs::path(out_dir) / (model_id + ".preprocessor.json");
    write_file(pp_path, meta.at("preprocessor").dump(2) + "\n");
    result["preprocessor"] = pp_path.string();
  }
  if (g.json_or_table() == Format::json) {
    std::cout << result.dump() << "\n";
  } else {
    out::pairs(std::cout, {{"artifact", model_path.string()},
                           {"summary", summary_path.string()},
                           {"content hash", actual + " (verified)"}});
  }
  return exit_ok;
}

} // namespace

int main(int argc, char **argv) {
  Globals g;
  CLI::App app{"hubctl: command-line client for the model hub"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--server", g.flags.server, "Server URL (env HUB_SERVER)");
  app.add_option("--api-key", g.flags.api_key, "API key (env HUB_API_KEY; prefer the env or a key file)");
  app.add_option("--api-key-file", g.flags.api_key_file, "Read the API key from a file");
  app.add_option("--format", g.flags.format, "Output format: table, json or csv (env HUB_FORMAT)");
  app.add_option("--config", g.flags.config_file, "Config file (default ~/.config/hubctl/config.json)");

  std::function<int()> action;

  // serve
  ServeArgs serve;
  auto *cmd_serve = app.add_subcommand("serve", "Run the HTTP server");
  cmd_serve->add_option("--host", serve.host, "Listen address")->envname("HUB_HOST")->capture_default_str();
  cmd_serve->add_option("--port", serve.port, "Listen port; 0 picks a free one")
      ->envname("HUB_PORT")
      ->capture_default_str();
  cmd_serve->add_option("--data-dir", serve.data_dir, "Data directory")->envname("HUB_DATA_DIR")->capture_default_str();
  cmd_serve->add_option("--ui-dir", serve.ui_dir, "Static web UI served under /ui/")->envname("HUB_UI_DIR");
  cmd_serve->add_option("--max-model-bytes", serve.max_model_bytes)->envname("HUB_MAX_MODEL_BYTES");
  cmd_serve->add_option("--max-predictions-bytes", serve.max_predictions_bytes)->envname("HUB_MAX_PREDICTIONS_BYTES");
  cmd_serve->add_option("--max-json-bytes", serve.max_json_bytes)->envname("HUB_MAX_JSON_BYTES");
  cmd_serve->add_option("--threads", serve.threads, "Worker threads");
  cmd_serve->callback([&] { action = [&] { return run_serve(serve); }; });

  // admin
  std::string data_dir = "hub-data";
  auto *cmd_admin = app.add_subcommand("admin", "Local administration of a data directory");
  cmd_admin->require_subcommand(1);
  std::string user, key_out, key_id;
  auto *cmd_mint = cmd_admin->add_subcommand("mint-key", "Create an API key for a user");
  cmd_mint->add_option("--data-dir", data_dir)->envname("HUB_DATA_DIR")->capture_default_str();
  cmd_mint->add_option("--user", user, "User id the key acts as")->required();
  cmd_mint->add_option("--out", key_out, "Write the key to this file (mode 0600) instead of stdout");
  cmd_mint->callback([&] {
    action = [&] {
      Registry reg(data_dir);
      char *raw = nullptr;
      check_local(hub_registry_mint_key(reg.r, user.c_str(), &raw));
      const std::string key = take(raw);
      if (key_out.empty()) {
        std::cout << key << "\n";
      } else {
        write_file(key_out, key + "\n", fs::perms::owner_read | fs::perms::owner_write);
        std::cerr << "hubctl: key for " << user << " written to " << key_out << "\n";
      }
      return exit_ok;
    };
  });
  auto *cmd_revoke = cmd_admin->add_subcommand("revoke-key", "Revoke an API key");
  cmd_revoke->add_option("--data-dir", data_dir)->envname("HUB_DATA_DIR")->capture_default_str();
  cmd_revoke->add_option("--key-id", key_id, "Key id (the 16 hex digits after hub_) or the whole key")->required();
  cmd_revoke->callback([&] {
    action = [&] {
      Registry reg(data_dir);
      check_local(hub_registry_revoke_key(reg.r, key_id.c_str()));
      std::cerr << "hubctl: key revoked\n";
      return exit_ok;
    };
  });

  // export / verify
  std::string export_out;
  auto *cmd_export = app.add_subcommand("export", "Dump every record of a data directory as JSON");
  cmd_export->add_option("--data-dir", data_dir)->envname("HUB_DATA_DIR")->capture_default_str();
  cmd_export->add_option("--out", export_out, "Write to a file instead of stdout");
  cmd_export->callback([&] {
    action = [&] {
      Registry reg(data_dir);
      char *raw = nullptr;
      check_local(hub_registry_export(reg.r, &raw));
      const auto text = take(raw) + "\n";
      if (export_out.empty())
        std::cout << text;
      else
        write_file(export_out, text, fs::perms::owner_read | fs::perms::owner_write);
      return exit_ok;
    };
  });
  auto *cmd_verify = app.add_subcommand("verify", "Check version numbering and blob hashes of a data directory");
  cmd_verify->add_option("--data-dir", data_dir)->envname("HUB_DATA_DIR")->capture_default_str();
  cmd_verify->callback([&] {
    action = [&] {
      Registry reg(data_dir);
      char *raw = nullptr;
      check_local(hub_registry_verify(reg.r, &raw));
      const auto report = json::parse(take(raw));
      std::cout << report.dump() << "\n";
      return report.at("ok").get<bool>() ? exit_ok : exit_local;
    };
  });

  // split / inspect / metrics
  std::int64_t split_n = 0;
  double split_fraction = 0;
  std::uint64_t split_seed = 0;
  auto *cmd_split = app.add_subcommand("split", "Print the public/secret split for n labels");
  cmd_split->add_option("--n", split_n, "Number of evaluation labels")->required();
  cmd_split->add_option("--fraction", split_fraction, "Secret fraction in (0,1)")->required();
  cmd_split->add_option("--seed", split_seed, "Seed")->required();
  cmd_split->callback([&] {
    action = [&] {
      char *raw = nullptr;
      check_local(hub_split(split_n, split_fraction, split_seed, &raw));
      std::cout << take(raw) << "\n";
      return exit_ok;
    };
  });

  std::string onnx_path;
  auto *cmd_inspect = app.add_subcommand("inspect", "Summarize a local ONNX file");
  cmd_inspect->add_option("model", onnx_path, "ONNX file")->required()->check(CLI::ExistingFile);
  cmd_inspect->callback([&] {
    action = [&] {
      const auto bytes = read_input(onnx_path);
      char *raw = nullptr;
      if (g.json_or_table() == Format::json)
        check_local(hub_onnx_summary(bytes.data(), bytes.size(), &raw));
      else
        check_local(hub_onnx_render(bytes.data(), bytes.size(), &raw));
      print_body(take(raw));
      return exit_ok;
    };
  });

  std::string task, y_true, y_pred;
  auto *cmd_metrics = app.add_subcommand("metrics", "Score predictions against labels locally");
  cmd_metrics->add_option("--task", task, "classification or regression")->required();
  cmd_metrics->add_option("--labels", y_true, "JSON array of true labels")->required();
  cmd_metrics->add_option("--preds", y_pred, "JSON array of predictions")->required();
  cmd_metrics->callback([&] {
    action = [&] {
      const auto t = read_json(y_true).dump(), p = read_json(y_pred).dump();
      char *raw = nullptr;
      check_local(hub_metrics(task.c_str(), t.c_str(), p.c_str(), &raw));
      const auto body = take(raw);
      if (g.json_or_table() == Format::json)
        print_body(body);
      else
        out::scores(std::cout, json::parse(body));
      return exit_ok;
    };
  });

  // playground
  auto *cmd_pg = app.add_subcommand("playground", "Create and inspect playgrounds");
  cmd_pg->require_subcommand(1);
  std::string pg_name, input_type, task_type, visibility, example_file, y_train_file, pg_id;
  std::vector<std::string> collaborators;
  auto *cmd_pg_create = cmd_pg->add_subcommand("create", "Create a playground");
  cmd_pg_create->add_option("--name", pg_name)->required();
  cmd_pg_create->add_option("--input-type", input_type, "tabular or image")->required();
  cmd_pg_create->add_option("--task-type", task_type, "classification or regression")->required();
  cmd_pg_create->add_option("--visibility", visibility, "public or private");
  cmd_pg_create->add_option("--collaborator", collaborators, "User id; repeatable");
  cmd_pg_create->add_option("--example-data", example_file, "JSON file with example rows or instances")
      ->check(CLI::ExistingFile);
  cmd_pg_create->add_option("--y-train", y_train_file, "JSON array of training labels")->check(CLI::ExistingFile);
  cmd_pg_create->callback([&] {
    action = [&] {
      json body = {{"name", pg_name}, {"input_type", input_type}, {"task_type", task_type}};
      if (!visibility.empty()) body["visibility"] = visibility;
      if (!collaborators.empty()) body["collaborators"] = collaborators;
      if (!example_file.empty()) body["example_data"] = read_json(example_file);
      if (!y_train_file.empty()) body["y_train"] = read_json(y_train_file);
      auto c = g.client();
      emit(g, c.post("/playgrounds", body.dump()), out::playground);
      return exit_ok;
    };
  });
  auto *cmd_pg_list = cmd_pg->add_subcommand("list", "List readable playgrounds");
  cmd_pg_list->callback([&] {
    action = [&] {
      auto c = g.client();
      emit(g, c.get("/playgrounds"), out::playground_list);
      return exit_ok;
    };
  });
  auto *cmd_pg_show = cmd_pg->add_subcommand("show", "Show one playground");
  cmd_pg_show->add_option("id", pg_id)->required();
  cmd_pg_show->callback([&] {
    action = [&] {
      auto c = g.client();
      emit(g, c.get("/playgrounds/" + pg_id), out::playground);
      return exit_ok;
    };
  });
  auto *cmd_pg_schema = cmd_pg->add_subcommand("schema", "Show the prediction input schema");
  cmd_pg_schema->add_option("id", pg_id)->required();
  cmd_pg_schema->callback([&] {
    action = [&] {
      auto c = g.client();
      emit(g, c.get("/playgrounds/" + pg_id + "/schema"), out::schema);
      return exit_ok;
    };
  });

  // track
  auto *cmd_track = app.add_subcommand("track", "Create and inspect tracks");
  cmd_track->require_subcommand(1);
  std::string kind, policy, labels_file, track_id;
  std::optional<double> fraction;
  std::optional<std::uint64_t> seed;
  auto *cmd_track_create = cmd_track->add_subcommand("create", "Add a track to a playground");
  cmd_track_create->add_option("--playground", pg_id)->required();
  cmd_track_create->add_option("--kind", kind, "experiment or competition")->required();
  cmd_track_create->add_option("--labels", labels_file, "JSON array of evaluation labels")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_track_create->add_option("--fraction", fraction, "Secret fraction (competitions)");
  cmd_track_create->add_option("--seed", seed, "Split seed (competitions)");
  cmd_track_create->add_option("--policy", policy, "open or restricted");
  cmd_track_create->callback([&] {
    action = [&] {
      json body = {{"kind", kind}, {"eval_labels", read_json(labels_file)}};
      if (fraction) body["secret_fraction"] = *fraction;
      if (seed) body["seed"] = *seed;
      if (!policy.empty()) body["policy"] = policy;
      auto c = g.client();
      emit(g, c.post("/playgrounds/" + pg_id + "/tracks", body.dump()), out::track);
      return exit_ok;
    };
  });
  auto *cmd_track_show = cmd_track->add_subcommand("show", "Show one track");
  cmd_track_show->add_option("id", track_id)->required();
  cmd_track_show->callback([&] {
    action = [&] {
      auto c = g.client();
      emit(g, c.get("/tracks/" + track_id), out::track);
      return exit_ok;
    };
  });

  // submit
  std::string model_file, preds_file, pp_file, meta_file, sub_example_file;
  auto *cmd_submit = app.add_subcommand("submit", "Submit a model and its predictions to a track");
  cmd_submit->add_option("--track", track_id)->required();
  cmd_submit->add_option("--model", model_file, "ONNX file")->required()->check(CLI::ExistingFile);
  cmd_submit->add_option("--preds", preds_file, "JSON predictions for the evaluation labels")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_submit->add_option("--preprocessor", pp_file, "Preprocessing spec JSON")->check(CLI::ExistingFile);
  cmd_submit->add_option("--metadata", meta_file, "Custom metadata JSON object")->check(CLI::ExistingFile);
  cmd_submit->add_option("--example-data", sub_example_file, "Example rows JSON")->check(CLI::ExistingFile);
  cmd_submit->callback([&] {
    action = [&] {
      std::vector<Part> parts{
          {"model", read_input(model_file), fs::path(model_file).filename().string(), "application/octet-stream"},
          {"predictions", read_input(preds_file), fs::path(preds_file).filename().string(), "application/json"}};
      if (!pp_file.empty()) parts.push_back({"preprocessor", read_input(pp_file), "preprocessor.json", "application/json"});
      if (!meta_file.empty())
        parts.push_back({"custom_metadata", read_input(meta_file), "metadata.json", "application/json"});
      if (!sub_example_file.empty())
        parts.push_back({"example_data", read_input(sub_example_file), "example.json", "application/json"});
      auto c = g.client();
      emit(g, c.multipart("/tracks/" + track_id + "/submissions", parts), out::submission);
      return exit_ok;
    };
  });

  // leaderboard / finalize
  std::string sort_by;
  bool secret = false;
  auto *cmd_lb = app.add_subcommand("leaderboard", "Show a track's leaderboard");
  cmd_lb->add_option("--track", track_id)->required();
  cmd_lb->add_option("--sort", sort_by, "Metric to rank by");
  cmd_lb->add_flag("--secret", secret, "Rank on the secret split (owner, or after finalization)");
  cmd_lb->callback([&] {
    action = [&] {
      const auto f = g.format();
      std::string path = "/tracks/" + track_id + "/leaderboard?format=" + (f == Format::csv ? "csv" : "json");
      if (!sort_by.empty()) path += "&sort=" + url_encode(sort_by);
      if (secret) path += "&secret=1";
      auto c = g.client();
      const auto r = c.get(path);
      if (f == Format::csv) {
        std::cout << r.body; // byte-for-byte
      } else if (f == Format::json) {
        print_body(r.body);
      } else {
        out::leaderboard(std::cout, json::parse(r.body));
      }
      return exit_ok;
    };
  });
  auto *cmd_finalize = app.add_subcommand("finalize", "Finalize a competition track and reveal secret scores");
  cmd_finalize->add_option("--track", track_id)->required();
  cmd_finalize->callback([&] {
    action = [&] {
      auto c = g.client();
      emit(g, c.post("/tracks/" + track_id + "/finalize", "{}"), out::leaderboard);
      return exit_ok;
    };
  });

  // models
  std::string model_id, other_id, out_dir;
  auto *cmd_model = app.add_subcommand("model", "Show a model version's metadata");
  cmd_model->add_option("id", model_id)->required();
  cmd_model->callback([&] {
    action = [&] {
      auto c = g.client();
      emit(g, c.get("/models/" + model_id + "/metadata"), out::model_metadata);
      return exit_ok;
    };
  });
  auto *cmd_compare = app.add_subcommand("compare", "Compare the architectures of two model versions");
  cmd_compare->add_option("left", model_id)->required();
  cmd_compare->add_option("right", other_id)->required();
  cmd_compare->callback([&] {
    action = [&] {
      auto c = g.client();
      const std::string base = "/models/" + model_id + "/compare/" + other_id;
      if (g.json_or_table() == Format::json)
        print_body(c.get(base).body);
      else
        print_body(c.get(base + "?format=text").body);
      return exit_ok;
    };
  });
  auto *cmd_inst = app.add_subcommand("instantiate", "Download a model artifact and its summary");
  cmd_inst->add_option("--model", model_id)->required();
  cmd_inst->add_option("--out", out_dir, "Output directory")->required();
  cmd_inst->callback([&] { action = [&] { return run_instantiate(g, model_id, out_dir); }; });

  // deploy / update-runtime / predict
  std::optional<std::int64_t> version;
  auto add_deploy = [&](const char *name, const char *help) {
    auto *cmd = app.add_subcommand(name, help);
    cmd->add_option("--playground", pg_id)->required();
    auto *v = cmd->add_option("--version", version, "Version number within the track");
    auto *m = cmd->add_option("--model", model_id, "Model id");
    cmd->add_option("--track", track_id, "Track of --version (needed when the playground has several)");
    v->excludes(m);
    cmd->callback([&, v, m] {
      action = [&, v, m] {
        if (!v->count() && !m->count()) throw Failure(exit_local, "give --version or --model");
        json body = json::object();
        if (version) body["version"] = *version;
        if (!model_id.empty()) body["model_id"] = model_id;
        if (!track_id.empty()) body["track_id"] = track_id;
        auto c = g.client();
        emit(g, c.post("/playgrounds/" + pg_id + "/deploy", body.dump()), out::deployment);
        return exit_ok;
      };
    });
  };
  add_deploy("deploy", "Make a model version the playground's runtime model");
  add_deploy("update-runtime", "Same as deploy");

  std::string input_file, rows_inline;
  auto *cmd_predict = app.add_subcommand("predict", "Run the deployed model");
  cmd_predict->add_option("--playground", pg_id)->required();
  auto *in_opt = cmd_predict->add_option("--input", input_file, "JSON file: a request body or an array of rows; - for stdin");
  auto *rows_opt = cmd_predict->add_option("--rows", rows_inline, "Inline JSON array of rows");
  in_opt->excludes(rows_opt);
  cmd_predict->callback([&] {
    action = [&] {
      json input;
      if (!input_file.empty()) {
        input = read_json(input_file);
      } else if (!rows_inline.empty()) {
        try {
          input = json::parse(rows_inline);
        } catch (const json::exception &e) {
          throw Failure(exit_local, std::string("--rows is not valid JSON: ") + e.what());
        }
      } else {
        throw Failure(exit_local, "give --input or --rows");
      }
      auto c = g.client();
      const auto body = predict_body(g, c, pg_id, input);
      emit(g, c.post("/playgrounds/" + pg_id + "/predict", body.dump()), out::predictions);
      return exit_ok;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_local;
  }

  try {
    return action ? action() : exit_local;
  } catch (const Failure &f) {
    std::cout.flush();
    std::cerr << "hubctl: " << f.what() << "\n";
    return f.exit_code;
  } catch (const json::exception &e) {
    std::cerr << "hubctl: unexpected response: " << e.what() << "\n";
    return exit_local;
  } catch (const std::exception &e) {
    std::cerr << "hubctl: " << e.what() << "\n";
    return exit_local;
  }
}
