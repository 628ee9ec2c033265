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

// hubctl end to end: configuration precedence, exit codes, output contracts.
#include <doctest.h>

#include <modelhub/modelhub.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>

#include <nlohmann/json.hpp>

#include "hubctl/config.hpp"
#include "support/fixtures.hpp"
#include "support/hubctl.hpp"
#include "support/tempdir.hpp"

namespace fs = std::filesystem;
using namespace hub::testing;
using nlohmann::json;

namespace {

void write_text(const fs::path &p, const std::string &s) {
  fs::create_directories(p.parent_path());
  std::ofstream(p, std::ios::binary) << s;
}

hubctl::EnvLookup fake_env(std::map<std::string, std::string> vars) {
  return [vars = std::move(vars)](const std::string &k) -> std::optional<std::string> {
    auto it = vars.find(k);
    if (it == vars.end()) return std::nullopt;
    return it->second;
  };
}

// Direct GET through libmodelhub, bypassing hubctl.
std::string raw_get(const std::string &url, const std::string &key, const std::string &path) {
  hub_client *c = nullptr;
  REQUIRE(hub_client_create(url.c_str(), key.c_str(), &c) == HUB_OK);
  hub_response res{};
  REQUIRE(hub_client_request(c, "GET", path.c_str(), nullptr, nullptr, 0, &res) == HUB_OK);
  std::string body(res.body, res.body_size);
  hub_response_free(&res);
  hub_client_destroy(c);
  return body;
}

const json kMlpPreprocessor = {
    {"columns",
     {{{"name", "f0"}, {"type", "numeric"}},
      {{"name", "f1"}, {"type", "numeric"}},
      {{"name", "f2"}, {"type", "numeric"}},
      {{"name", "f3"}, {"type", "numeric"}}}},
    {"steps",
     {{{"kind", "passthrough"}, {"column", "f0"}},
      {{"kind", "passthrough"}, {"column", "f1"}},
      {{"kind", "passthrough"}, {"column", "f2"}},
      {{"kind", "passthrough"}, {"column", "f3"}}}}};

// Everything a client invocation needs, with the key passed via the
// environment the way CI would.
struct Session {
  TempDir dir;
  std::string data;
  std::optional<ServerProcess> server;
  std::string key;
  EnvMap env;
  std::vector<ProcResult> log; // every invocation, for the no-echo check

  Session() : data((dir.path() / "data").string()) {
    key = mint_key_cli(data, "alice");
    server.emplace(data);
    env = {{"HUB_SERVER", server->url()}, {"HUB_API_KEY", key}, {"HOME", dir.path().string()}};
  }

  ProcResult run(std::vector<std::string> args) {
    auto r = run_hubctl(std::move(args), env);
    log.push_back(r);
    return r;
  }
  json run_json(std::vector<std::string> args) {
    args.insert(args.begin(), {"--format", "json"});
    auto r = run(args);
    INFO(r.err);
    REQUIRE(r.exit_code == 0);
    return json::parse(r.out);
  }
  fs::path file(const std::string &name, const std::string &content) {
    const auto p = dir.path() / "in" / name;
    write_text(p, content);
    return p;
  }
};

} // namespace

TEST_CASE("config resolution order: flags, then environment, then file") {
  TempDir dir;
  const auto cfg_path = dir.path() / "cfg.json";
  write_text(cfg_path, R"({"server":"http://file:1","api_key":"hub_file","format":"json"})");
  fs::permissions(cfg_path, fs::perms::owner_read | fs::perms::owner_write);

  hubctl::ConfigFlags flags;
  flags.config_file = cfg_path.string();

  auto c = hubctl::resolve_config(flags, fake_env({}));
  CHECK(c.server == "http://file:1");
  CHECK(c.api_key == "hub_file");
  CHECK(c.format == hubctl::Format::json);

  c = hubctl::resolve_config(flags, fake_env({{"HUB_SERVER", "http://env:2"}, {"HUB_API_KEY", "hub_env"}}));
  CHECK(c.server == "http://env:2");
  CHECK(c.api_key == "hub_env");
  CHECK(c.format == hubctl::Format::json);

  flags.server = "http://flag:3";
  flags.format = "csv";
  c = hubctl::resolve_config(flags, fake_env({{"HUB_SERVER", "http://env:2"}, {"HUB_FORMAT", "table"}}));
  CHECK(c.server == "http://flag:3");
  CHECK(c.format == hubctl::Format::csv);
  CHECK(c.api_key == "hub_file");

  const auto key_file = dir.path() / "key";
  write_text(key_file, "hub_from_file\n");
  flags.api_key_file = key_file.string();
  CHECK(hubctl::resolve_config(flags, fake_env({{"HUB_API_KEY", "hub_env"}})).api_key == "hub_from_file");
  flags.api_key = "hub_flag";
  CHECK(hubctl::resolve_config(flags, fake_env({})).api_key == "hub_flag");
}

TEST_CASE("default config path and config errors") {
  CHECK(hubctl::default_config_path(fake_env({{"HOME", "/h"}})) == "/h/.config/hubctl/config.json");
  CHECK(hubctl::default_config_path(fake_env({{"HOME", "/h"}, {"XDG_CONFIG_HOME", "/x"}})) ==
        "/x/hubctl/config.json");
  CHECK(hubctl::default_config_path(fake_env({{"HOME", "/h"}, {"HUBCTL_CONFIG", "/c.json"}})) == "/c.json");

  TempDir dir;
  // A missing default file is fine, a missing explicit one is not.
  CHECK(hubctl::resolve_config({}, fake_env({{"HOME", dir.path().string()}})).server == "http://127.0.0.1:8080");
  hubctl::ConfigFlags flags;
  flags.config_file = (dir.path() / "absent.json").string();
  CHECK_THROWS(hubctl::resolve_config(flags, fake_env({})));

  write_text(dir.path() / "bad.json", "{not json");
  flags.config_file = (dir.path() / "bad.json").string();
  CHECK_THROWS(hubctl::resolve_config(flags, fake_env({})));

  write_text(dir.path() / "num.json", R"({"server": 5})");
  flags.config_file = (dir.path() / "num.json").string();
  CHECK_THROWS(hubctl::resolve_config(flags, fake_env({})));

  flags = {};
  flags.format = "yaml";
  CHECK_THROWS(hubctl::resolve_config(flags, fake_env({})));
}

TEST_CASE("precedence holds for the real binary") {
  Session s;
  // The config file in $HOME points at a dead port; the environment wins.
  write_text(fs::path(s.env["HOME"]) / ".config/hubctl/config.json",
             R"({"server":"http://127.0.0.1:1","format":"table"})");
  auto r = s.run({"--format", "json", "playground", "list"});
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out).contains("playgrounds"));

  // A flag beats the environment.
  r = s.run({"--server", "http://127.0.0.1:1", "playground", "list"});
  CHECK(r.exit_code == 3);

  // Without the environment the file applies.
  auto env = s.env;
  env.erase("HUB_SERVER");
  r = run_hubctl({"playground", "list"}, env);
  CHECK(r.exit_code == 3);
}

TEST_CASE("exit codes") {
  Session s;
  auto r = s.run({"--server", "http://127.0.0.1:1", "playground", "list"});
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("network_error") != std::string::npos);

  r = s.run({"--api-key", "hub_bad", "playground", "list"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("unauthorized") != std::string::npos);

  r = s.run({"playground", "show", "pg_missing"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("not_found") != std::string::npos);

  r = s.run({"playground", "create", "--name", "x", "--input-type", "audio", "--task-type", "regression"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("validation_error") != std::string::npos);

  r = s.run({"submit", "--track", "t", "--model", "/nonexistent.onnx", "--preds", "/nonexistent.json"});
  CHECK(r.exit_code == 1);

  r = s.run({"no-such-command"});
  CHECK(r.exit_code == 1);

  r = s.run({"--format", "csv", "playground", "list"});
  CHECK(r.exit_code == 1);

  r = s.run({"--help"});
  CHECK(r.exit_code == 0);
}

TEST_CASE("full workflow through hubctl") {
  Session s;
  const auto golden = json::parse(fixture("mlp_golden.json"));

  const auto pg = s.run_json({"playground", "create", "--name", "iris-ish", "--input-type", "tabular",
                              "--task-type", "classification"});
  const auto pg_id = pg.at("id").get<std::string>();

  json labels = json::array();
  for (int i = 0; i < 20; ++i) labels.push_back(i % 3);
  const auto labels_file = s.file("labels.json", labels.dump());
  const auto trk = s.run_json({"track", "create", "--playground", pg_id, "--kind", "competition", "--labels",
                               labels_file.string(), "--fraction", "0.5", "--seed", "42"});
  const auto trk_id = trk.at("id").get<std::string>();
  CHECK(trk.at("public_count") == 10);

  // The public indices, from the same split the server uses. The owner may
  // already see the mask; it has to agree.
  const auto split = s.run_json({"split", "--n", "20", "--fraction", "0.5", "--seed", "42"});
  REQUIRE(trk.contains("split"));
  CHECK(trk.at("split").at("secret_indices") == split.at("secret_indices"));
  std::set<int> secret;
  for (const auto &i : split.at("secret_indices")) secret.insert(i.get<int>());
  std::vector<int> pub;
  for (int i = 0; i < 20; ++i)
    if (!secret.count(i)) pub.push_back(i);
  REQUIRE(pub.size() == 10);

  // Wrong answers on chosen public rows: v1 misses 4, v2 none, v3 misses 2.
  auto preds_with_errors = [&](int errs) {
    json p = labels;
    for (int k = 0; k < errs; ++k) p[pub[k]] = (p[pub[k]].get<int>() + 1) % 3;
    return p;
  };
  const auto pp = s.file("pp.json", kMlpPreprocessor.dump());
  const auto meta = s.file("meta.json", R"({"optimizer":"adam","loss":"cross_entropy"})");
  const char *models[] = {"mlp_4_8_3.onnx", "mlp_4_16_3.onnx", "mlp_4_8_3_extra_relu.onnx"};
  const int errs[] = {4, 0, 2};
  std::vector<std::string> model_ids;
  for (int i = 0; i < 3; ++i) {
    const auto preds = s.file("p" + std::to_string(i) + ".json", preds_with_errors(errs[i]).dump());
    auto r = s.run({"submit", "--track", trk_id, "--model", fixture_path(models[i]), "--preds", preds.string(),
                    "--preprocessor", pp.string(), "--metadata", meta.string()});
    INFO(r.err);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("version " + std::to_string(i + 1) + "\n", 0) == 0);
    const auto line = r.out.substr(r.out.find('\n') + 1);
    REQUIRE(line.rfind("model   mdl_", 0) == 0);
    model_ids.push_back(line.substr(8, line.find('\n') - 8));
  }

  const auto board = s.run_json({"leaderboard", "--track", trk_id});
  REQUIRE(board.at("entries").size() == 3);
  const std::vector<int> expected_order{2, 3, 1};
  const std::vector<double> expected_acc{1.0, 0.8, 0.6};
  for (int i = 0; i < 3; ++i) {
    CHECK(board.at("entries")[i].at("version") == expected_order[i]);
    CHECK(board.at("entries")[i].at("scores").at("accuracy").get<double>() == doctest::Approx(expected_acc[i]));
  }

  // CSV is a byte-for-byte passthrough.
  auto csv = s.run({"--format", "csv", "leaderboard", "--track", trk_id});
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.out == raw_get(s.server->url(), s.key, "/tracks/" + trk_id + "/leaderboard?format=csv"));
  csv = s.run({"--format", "csv", "leaderboard", "--track", trk_id, "--sort", "f1_macro"});
  CHECK(csv.out ==
        raw_get(s.server->url(), s.key, "/tracks/" + trk_id + "/leaderboard?format=csv&sort=f1_macro"));

  // instantiate: artifact bytes hash to the registry's content hash.
  const auto v2_id = board.at("entries")[0].at("model_id").get<std::string>();
  const auto out_dir = s.dir.path() / "inst";
  const auto inst = s.run_json({"instantiate", "--model", v2_id, "--out", out_dir.string()});
  const auto artifact = read_file(inst.at("artifact").get<std::string>());
  CHECK(artifact == fixture("mlp_4_16_3.onnx"));
  char hex[65];
  hub_sha256_hex(artifact.data(), artifact.size(), hex);
  const auto summary = json::parse(read_file(inst.at("summary").get<std::string>()));
  CHECK(summary.at("artifact").at("content_hash") == hex);
  CHECK(summary.at("summary").at("parameter_count") == 131);
  CHECK(json::parse(read_file(inst.at("preprocessor").get<std::string>())) == kMlpPreprocessor);

  // compare
  auto cmp = s.run({"compare", model_ids[0], model_ids[1]});
  CHECK(cmp.exit_code == 0);
  CHECK(cmp.out.find("+64") != std::string::npos);
  CHECK(s.run_json({"compare", model_ids[0], model_ids[1]}).at("parameter_count_delta") == 64);

  // Nothing deployed yet.
  auto r = s.run({"predict", "--playground", pg_id, "--rows", R"([{"f0":1,"f1":1,"f2":1,"f3":1}])"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("no_runtime_model") != std::string::npos);

  const auto dep = s.run_json({"deploy", "--playground", pg_id, "--version", "2"});
  CHECK(dep.at("deployment").at("active_version") == 2);

  // Predictions match the argmax of the reference outputs.
  const auto &in = golden.at("input").at("data");
  const auto &ref = golden.at("mlp_4_16_3.onnx").at("data");
  json rows = json::array();
  std::vector<int> expected;
  for (int i = 0; i < 6; ++i) {
    rows.push_back({{"f0", in[i * 4]}, {"f1", in[i * 4 + 1]}, {"f2", in[i * 4 + 2]}, {"f3", in[i * 4 + 3]}});
    int best = 0;
    for (int k = 1; k < 3; ++k)
      if (ref[i * 3 + k].get<double>() > ref[i * 3 + best].get<double>()) best = k;
    expected.push_back(best);
  }
  const auto rows_file = s.file("rows.json", rows.dump());
  auto pred = s.run_json({"predict", "--playground", pg_id, "--input", rows_file.string()});
  CHECK(pred.at("model_version") == 2);
  for (int i = 0; i < 6; ++i) CHECK(pred.at("predictions")[i] == expected[i]);

  // update-runtime is deploy under another name.
  CHECK(s.run_json({"update-runtime", "--playground", pg_id, "--model", model_ids[2]})
            .at("deployment")
            .at("active_version") == 3);
  CHECK(s.run_json({"predict", "--playground", pg_id, "--input", rows_file.string()}).at("model_version") == 3);

  // Table output is for humans but must still succeed.
  for (auto args : std::vector<std::vector<std::string>>{{"playground", "list"},
                                                         {"playground", "show", pg_id},
                                                         {"playground", "schema", pg_id},
                                                         {"track", "show", trk_id},
                                                         {"leaderboard", "--track", trk_id},
                                                         {"model", v2_id}}) {
    auto t = s.run(args);
    INFO(args[0]);
    CHECK(t.exit_code == 0);
    CHECK_FALSE(t.out.empty());
  }

  const auto fin = s.run_json({"finalize", "--track", trk_id});
  CHECK(fin.at("finalized") == true);
  CHECK(fin.at("ranked_on_secret") == true);

  auto again = s.run({"submit", "--track", trk_id, "--model", fixture_path(models[0]), "--preds",
                      s.file("late.json", labels.dump()).string()});
  CHECK(again.exit_code == 2);
  CHECK(again.err.find("track_finalized") != std::string::npos);

  // The key never shows up in anything hubctl printed.
  const auto secret_part = s.key.substr(s.key.rfind('_') + 1);
  for (const auto &p : s.log) {
    CHECK(p.out.find(secret_part) == std::string::npos);
    CHECK(p.err.find(secret_part) == std::string::npos);
  }

  const auto stopped = s.server->stop();
  CHECK(stopped.exit_code == 0);
  auto verify = run_hubctl({"verify", "--data-dir", s.data});
  CHECK(verify.exit_code == 0);
  CHECK(json::parse(verify.out).at("versions") == 3);
}

TEST_CASE("local commands") {
  TempDir dir;
  const auto data = (dir.path() / "d").string();
  const auto key_file = dir.path() / "k";
  auto r = run_hubctl({"admin", "mint-key", "--data-dir", data, "--user", "bob", "--out", key_file.string()});
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  const auto key = read_file(key_file.string());
  CHECK(key.rfind("hub_", 0) == 0);
  CHECK((fs::status(key_file).permissions() & (fs::perms::group_all | fs::perms::others_all)) == fs::perms::none);

  r = run_hubctl({"admin", "revoke-key", "--data-dir", data, "--key-id", key.substr(4, 16)});
  CHECK(r.exit_code == 0);
  r = run_hubctl({"admin", "revoke-key", "--data-dir", data, "--key-id", "0000000000000000"});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("not_found") != std::string::npos);

  r = run_hubctl({"export", "--data-dir", data});
  CHECK(r.exit_code == 0);
  const auto exp = json::parse(r.out);
  CHECK(exp.at("format") == "modelhub-export/1");
  CHECK(r.out.find(key.substr(21, 32)) == std::string::npos); // only the salted hash is stored

  r = run_hubctl({"inspect", fixture_path("mlp_4_8_3.onnx")});
  CHECK(r.exit_code == 0);
  CHECK(r.out == fixture("golden/mlp_4_8_3.txt"));
  r = run_hubctl({"--format", "json", "inspect", fixture_path("mlp_4_8_3.onnx")});
  CHECK(json::parse(r.out).at("parameter_count") == 67);
  r = run_hubctl({"inspect", fixture_path("dangling.onnx")});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("graph_invalid") != std::string::npos);

  const auto a = run_hubctl({"split", "--n", "50", "--fraction", "0.3", "--seed", "9"});
  const auto b = run_hubctl({"split", "--n", "50", "--fraction", "0.3", "--seed", "9"});
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(run_hubctl({"split", "--n", "2", "--fraction", "0.1", "--seed", "9"}).exit_code == 1);
}

TEST_CASE("serve shuts down cleanly on SIGTERM and keeps state") {
  TempDir dir;
  const auto data = (dir.path() / "d").string();
  const auto key = mint_key_cli(data, "alice");
  std::string pg_id;
  {
    ServerProcess srv(data);
    const EnvMap env{{"HUB_SERVER", srv.url()}, {"HUB_API_KEY", key}, {"HOME", dir.path().string()}};
    auto r = run_hubctl({"--format", "json", "playground", "create", "--name", "p", "--input-type", "image",
                     "--task-type", "classification"},
                    env);
    REQUIRE(r.exit_code == 0);
    pg_id = json::parse(r.out).at("id");
    CHECK(srv.stop().exit_code == 0);
  }
  ServerProcess srv(data);
  const EnvMap env{{"HUB_SERVER", srv.url()}, {"HUB_API_KEY", key}, {"HOME", dir.path().string()}};
  auto r = run_hubctl({"--format", "json", "playground", "show", pg_id}, env);
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out).at("input_type") == "image");
}
