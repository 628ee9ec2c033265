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

#include <doctest.h>

#include <atomic>
#include <set>
#include <thread>

#include "common/sha256.hpp"
#include "support/fixtures.hpp"
#include "support/live_server.hpp"
#include "support/tempdir.hpp"

using namespace hub;
using namespace hub::testing;
using nlohmann::json;

namespace {

service::Limits small_limits() {
  service::Limits l;
  l.max_model_bytes = 64 << 10;
  l.max_predictions_bytes = 4 << 10;
  l.max_json_bytes = 64 << 10;
  return l;
}

service::ServerOptions options(const TempDir &dir, service::Limits limits = small_limits()) {
  service::ServerOptions o;
  o.data_dir = dir.path() / "data";
  o.limits = limits;
  o.threads = 8;
  return o;
}

httplib::Result post(httplib::Client &&c, const std::string &path, const json &body) {
  return c.Post(path, body.dump(), "application/json");
}

httplib::Result post(httplib::Client &c, const std::string &path, const json &body) {
  return c.Post(path, body.dump(), "application/json");
}

const json kMlpPreprocessor = {
    {"columns", {{{"name", "a"}, {"type", "numeric"}},
                 {{"name", "b"}, {"type", "numeric"}},
                 {{"name", "c"}, {"type", "numeric"}},
                 {{"name", "d"}, {"type", "numeric"}}}},
    {"steps", {{{"kind", "passthrough"}, {"column", "a"}},
               {{"kind", "passthrough"}, {"column", "b"}},
               {{"kind", "passthrough"}, {"column", "c"}},
               {{"kind", "passthrough"}, {"column", "d"}}}}};

const json kConstPreprocessor = {
    {"columns", {{{"name", "x"}, {"type", "numeric"}}, {{"name", "y"}, {"type", "numeric"}}}},
    {"steps", {{{"kind", "passthrough"}, {"column", "x"}}, {{"kind", "standard_scale"}, {"column", "y"}, {"mean", 0}, {"std", 1}}}}};

httplib::Result submit(httplib::Client &c, const std::string &track, const std::string &model, const json &preds,
                       const json &preprocessor = kMlpPreprocessor, const json &meta = json::object()) {
  httplib::MultipartFormDataItems items = {
      {"model", model, "model.onnx", "application/octet-stream"},
      {"predictions", preds.dump(), "predictions.json", "application/json"},
      {"preprocessor", preprocessor.dump(), "preprocessor.json", "application/json"},
      {"custom_metadata", meta.dump(), "meta.json", "application/json"},
  };
  return c.Post("/tracks/" + track + "/submissions", items);
}

// The six golden rows of mlp_golden.json as records for kMlpPreprocessor.
json golden_rows() {
  const auto g = json::parse(fixture("mlp_golden.json"));
  const auto &data = g.at("input").at("data");
  json rows = json::array();
  for (std::size_t r = 0; r < 6; ++r)
    rows.push_back({{"a", data[r * 4]}, {"b", data[r * 4 + 1]}, {"c", data[r * 4 + 2]}, {"d", data[r * 4 + 3]}});
  return rows;
}

// Golden argmax per row, mapped through the label map [0, 1, 2].
std::vector<int> golden_classes() {
  const auto g = json::parse(fixture("mlp_golden.json"));
  const auto &out = g.at("mlp_4_8_3.onnx").at("data");
  std::vector<int> cls;
  for (std::size_t r = 0; r < 6; ++r) {
    int best = 0;
    for (int k = 1; k < 3; ++k)
      if (out[r * 3 + static_cast<std::size_t>(k)].get<double>() > out[r * 3 + static_cast<std::size_t>(best)].get<double>()) best = k;
    cls.push_back(best);
  }
  return cls;
}

struct World {
  TempDir dir;
  std::unique_ptr<LiveServer> srv;
  std::string alice, bob, carol;

  World() { start(); }
  void start() {
    srv = std::make_unique<LiveServer>(options(dir));
    if (alice.empty()) {
      alice = srv->hub().registry().mint_key("alice");
      bob = srv->hub().registry().mint_key("bob");
      carol = srv->hub().registry().mint_key("carol");
    }
  }
  void restart() {
    srv.reset();
    start();
  }
  httplib::Client as(const std::string &key = "") { return srv->client(key); }

  std::string playground(const std::string &visibility = "public", const std::string &task = "classification") {
    auto c = as(alice);
    auto r = post(c, "/playgrounds",
                  {{"name", "pg"},
                   {"input_type", "tabular"},
                   {"task_type", task},
                   {"visibility", visibility},
                   {"collaborators", {"bob"}},
                   {"example_data", {{"rows", {{{"a", 0.5}, {"b", 1}, {"c", 2}, {"d", 3}}}}}}});
    REQUIRE(r->status == 201);
    return body_of(r).at("id");
  }
  std::string track(const std::string &pg, const json &body) {
    auto c = as(alice);
    auto r = post(c, "/playgrounds/" + pg + "/tracks", body);
    REQUIRE(r->status == 201);
    return body_of(r).at("id");
  }
};

const json kLabels8 = {0, 1, 2, 0, 1, 2, 0, 1};

} // namespace

TEST_CASE("health and unknown routes answer with JSON") {
  World w;
  auto c = w.as();
  auto r = c.Get("/healthz");
  REQUIRE(r);
  CHECK(r->status == 200);
  CHECK(body_of(r).at("status") == "ok");
  r = c.Get("/nope");
  CHECK(r->status == 404);
  CHECK(code_of(r) == "not_found");
}

TEST_CASE("authentication and visibility") {
  World w;
  auto anon = w.as();
  CHECK(post(anon, "/playgrounds", {{"name", "x"}, {"input_type", "tabular"}, {"task_type", "regression"}})->status == 401);

  auto bad = w.as("hub_0000000000000000_00000000000000000000000000000000");
  auto r = bad.Get("/playgrounds");
  CHECK(r->status == 401);
  CHECK(code_of(r) == "unauthorized");

  httplib::Client basic("127.0.0.1", w.srv->port());
  basic.set_basic_auth("u", "p");
  CHECK(basic.Get("/playgrounds")->status == 401);

  const auto pub = w.playground("public");
  const auto priv = w.playground("private");
  CHECK(anon.Get("/playgrounds/" + pub)->status == 200);
  r = anon.Get("/playgrounds/" + priv);
  CHECK(r->status == 403);
  CHECK(code_of(r) == "forbidden");
  auto carol = w.as(w.carol);
  CHECK(carol.Get("/playgrounds/" + priv)->status == 403);
  auto bob = w.as(w.bob);
  CHECK(bob.Get("/playgrounds/" + priv)->status == 200);
  CHECK(anon.Get("/playgrounds/pg_missing")->status == 404);

  // Listing hides what the caller cannot read.
  CHECK(body_of(anon.Get("/playgrounds")).at("playgrounds").size() == 1);
  CHECK(body_of(bob.Get("/playgrounds")).at("playgrounds").size() == 2);

  // Revoked keys stop working immediately.
  const auto key = w.srv->hub().registry().mint_key("dave");
  auto dave = w.as(key);
  CHECK(dave.Get("/playgrounds")->status == 200);
  w.srv->hub().registry().revoke_key(key.substr(4, 16));
  CHECK(dave.Get("/playgrounds")->status == 401);
}

TEST_CASE("request validation maps to stable codes") {
  World w;
  auto c = w.as(w.alice);
  auto r = c.Post("/playgrounds", "{not json", "application/json");
  CHECK(r->status == 400);
  CHECK(code_of(r) == "malformed_body");
  r = post(c, "/playgrounds", {{"name", "x"}, {"input_type", "text"}, {"task_type", "regression"}});
  CHECK(r->status == 422);
  CHECK(code_of(r) == "validation_error");
  CHECK(body_of(r).at("field") == "input_type");

  const auto pg = w.playground();
  r = post(c, "/playgrounds/" + pg + "/tracks", {{"kind", "competition"}, {"eval_labels", json::array()}});
  CHECK(code_of(r) == "validation_error");
  auto bob = w.as(w.bob);
  r = post(bob, "/playgrounds/" + pg + "/tracks", {{"kind", "experiment"}, {"eval_labels", kLabels8}});
  CHECK(r->status == 403);
}

TEST_CASE("submission pipeline, caps and errors") {
  World w;
  const auto pg = w.playground();
  const auto trk = w.track(pg, {{"kind", "experiment"}, {"eval_labels", kLabels8}});
  auto c = w.as(w.alice);
  const auto model = fixture("mlp_4_8_3.onnx");

  auto r = submit(c, trk, model, {0, 1, 2, 0, 1, 2, 0, 0}, kMlpPreprocessor, {{"optimizer", "sgd"}});
  REQUIRE(r->status == 201);
  auto j = body_of(r);
  CHECK(j.at("version") == 1);
  CHECK(j.at("scores").at("accuracy").get<double>() == doctest::Approx(7.0 / 8.0));
  CHECK_FALSE(j.contains("secret_scores"));

  r = submit(c, trk, model, {0, 1, 2});
  CHECK(r->status == 422);
  j = body_of(r);
  CHECK(j.at("code") == "length_mismatch");
  CHECK(j.at("expected_length") == 8);

  r = submit(c, trk, model, {"a", "b", "c", "d", "e", "f", "g", {{"x", 1}}});
  CHECK(code_of(r) == "type_mismatch");

  r = submit(c, trk, std::string(65 << 10, 'x'), kLabels8);
  CHECK(r->status == 413);
  CHECK(code_of(r) == "payload_too_large");
  CHECK(body_of(r).at("part") == "model");

  r = submit(c, trk, "garbage", kLabels8);
  CHECK(code_of(r) == "onnx_parse_error");
  r = submit(c, trk, fixture("dangling.onnx"), kLabels8);
  CHECK(code_of(r) == "graph_invalid");

  json bad_spec = kMlpPreprocessor;
  bad_spec["steps"][0] = {{"kind", "standard_scale"}, {"column", "a"}, {"mean", 0}, {"std", 0}};
  r = submit(c, trk, model, kLabels8, bad_spec);
  CHECK(code_of(r) == "spec_invalid");

  r = submit(c, trk, model, kLabels8, kMlpPreprocessor, {{"nested", {1, 2}}});
  CHECK(code_of(r) == "validation_error");

  r = c.Post("/tracks/" + trk + "/submissions", "{}", "application/json");
  CHECK(r->status == 400);

  auto anon = w.as();
  CHECK(submit(anon, trk, model, kLabels8)->status == 401);

  // Whole-request cap enforced by the transport still yields a JSON body.
  r = c.Post("/playgrounds", std::string((64 << 10) * 2 + (4 << 10) + (64 << 10) * 3 + (1 << 20) + 10, ' '),
             "application/json");
  CHECK(r->status == 413);
  CHECK(code_of(r) == "payload_too_large");

  // No failed submission left a version behind.
  CHECK(body_of(c.Get("/tracks/" + trk)).at("versions") == 1);
}

TEST_CASE("leaderboard, metadata, artifact and compare") {
  World w;
  const auto pg = w.playground();
  const auto trk = w.track(pg, {{"kind", "experiment"}, {"eval_labels", kLabels8}});
  auto c = w.as(w.alice);
  const auto m1 = body_of(submit(c, trk, fixture("mlp_4_8_3.onnx"), {0, 1, 2, 0, 1, 2, 0, 0}, kMlpPreprocessor,
                                 {{"lr", 0.1}}))
                      .at("model_id")
                      .get<std::string>();
  const auto m2 = body_of(submit(c, trk, fixture("mlp_4_16_3.onnx"), kLabels8, kMlpPreprocessor, {{"epochs", 3}}))
                      .at("model_id")
                      .get<std::string>();

  auto anon = w.as();
  auto board = body_of(anon.Get("/tracks/" + trk + "/leaderboard"));
  CHECK(board.at("sort_metric") == "accuracy");
  REQUIRE(board.at("entries").size() == 2);
  CHECK(board.at("entries")[0].at("version") == 2);
  CHECK(board.at("entries")[0].at("rank") == 1);
  CHECK(board.at("entries")[1].at("parameter_count") == 67);

  auto r = anon.Get("/tracks/" + trk + "/leaderboard?sort=rmse");
  CHECK(r->status == 422);
  CHECK(code_of(r) == "invalid_metric");
  r = anon.Get("/tracks/" + trk + "/leaderboard?format=csv");
  CHECK(r->get_header_value("Content-Type").rfind("text/csv", 0) == 0);
  CHECK(r->body.rfind("rank,version,model_id,submitter,submitted_at,accuracy", 0) == 0);
  CHECK(r->body.find(",epochs,lr\r\n") != std::string::npos);
  CHECK(anon.Get("/tracks/" + trk + "/leaderboard?format=xml")->status == 422);
  CHECK(anon.Get("/tracks/" + trk + "/leaderboard?secret=1")->status == 422);

  auto meta = body_of(anon.Get("/models/" + m1 + "/metadata"));
  CHECK(meta.at("version") == 1);
  CHECK(meta.at("summary").at("parameter_count") == 67);
  CHECK(meta.at("custom_metadata").at("lr") == 0.1);
  CHECK_FALSE(meta.contains("predictions"));

  r = anon.Get("/models/" + m1 + "/artifact");
  REQUIRE(r->status == 200);
  CHECK(r->body == fixture("mlp_4_8_3.onnx"));
  CHECK(r->get_header_value("X-Content-Hash") == sha256_hex(r->body));
  CHECK(r->get_header_value("X-Content-Hash") == meta.at("artifact").at("content_hash"));

  auto same = body_of(anon.Get("/models/" + m1 + "/compare/" + m1));
  for (const auto &row : same.at("rows")) CHECK(row.at("status") == "same");
  CHECK(same.at("parameter_count_delta") == 0);
  auto diff = body_of(anon.Get("/models/" + m1 + "/compare/" + m2));
  CHECK(diff.at("parameter_count_delta") == 64);
  r = anon.Get("/models/" + m1 + "/compare/" + m2 + "?format=text");
  CHECK(r->body.rfind("diff  params +64", 0) == 0);
  CHECK(anon.Get("/models/mdl_nope/metadata")->status == 404);
}

TEST_CASE("GET endpoints leave state untouched") {
  World w;
  const auto pg = w.playground();
  const auto trk = w.track(pg, {{"kind", "competition"}, {"eval_labels", kLabels8}, {"seed", 3}});
  auto c = w.as(w.alice);
  const auto m = body_of(submit(c, trk, fixture("mlp_4_8_3.onnx"), kLabels8)).at("model_id").get<std::string>();
  const auto before = w.srv->hub().state_digest();
  for (const auto &key : {std::string(), w.alice, w.bob, w.carol}) {
    auto cl = w.as(key);
    for (const std::string &path : std::vector<std::string>{"/playgrounds", "/playgrounds/" + pg, "/playgrounds/" + pg + "/schema", "/tracks/" + trk,
                             "/tracks/" + trk + "/leaderboard", "/tracks/" + trk + "/leaderboard?format=csv",
                             "/models/" + m + "/metadata", "/models/" + m + "/artifact",
                             "/models/" + m + "/compare/" + m, "/healthz"})
      REQUIRE(cl.Get(path));
  }
  CHECK(w.srv->hub().state_digest() == before);
}

TEST_CASE("competition secrecy by role") {
  World w;
  const auto pg = w.playground();
  const auto trk = w.track(pg, {{"kind", "competition"}, {"eval_labels", kLabels8}, {"seed", 11}, {"secret_fraction", 0.5}});
  auto alice = w.as(w.alice);
  auto bob = w.as(w.bob);
  auto carol = w.as(w.carol);
  const auto m = body_of(submit(carol, trk, fixture("mlp_4_8_3.onnx"), kLabels8)).at("model_id").get<std::string>();

  for (auto *cl : {&bob, &carol}) {
    auto t = body_of(cl->Get("/tracks/" + trk));
    CHECK_FALSE(t.contains("split"));
    CHECK(t.at("secret_count") == 4);
    CHECK_FALSE(body_of(cl->Get("/models/" + m + "/metadata")).contains("secret_scores"));
    auto board = body_of(cl->Get("/tracks/" + trk + "/leaderboard"));
    CHECK_FALSE(board.at("entries")[0].contains("secret_scores"));
    CHECK(board.at("ranked_on_secret") == false);
    auto r = cl->Get("/tracks/" + trk + "/leaderboard?secret=1");
    CHECK(r->status == 403);
    CHECK(cl->Get("/tracks/" + trk + "/leaderboard?format=csv")->body.find("secret_") == std::string::npos);
    CHECK(post(*cl, "/tracks/" + trk + "/finalize", json::object())->status == 403);
  }
  // The owner may look early.
  CHECK(body_of(alice.Get("/tracks/" + trk)).at("split").at("seed") == 11);
  CHECK(body_of(alice.Get("/models/" + m + "/metadata")).contains("secret_scores"));
  CHECK(alice.Get("/tracks/" + trk + "/leaderboard?secret=1")->status == 200);

  auto fin = body_of(post(alice, "/tracks/" + trk + "/finalize", json::object()));
  CHECK(fin.at("finalized") == true);
  CHECK(fin.at("ranked_on_secret") == true);
  CHECK(fin == body_of(post(alice, "/tracks/" + trk + "/finalize", json::object())));
  auto r = submit(carol, trk, fixture("mlp_4_8_3.onnx"), kLabels8);
  CHECK(r->status == 409);
  CHECK(code_of(r) == "track_finalized");
  // After finalization everything is public.
  CHECK(body_of(carol.Get("/tracks/" + trk)).contains("split"));
  CHECK(body_of(carol.Get("/models/" + m + "/metadata")).contains("secret_scores"));
  CHECK(body_of(carol.Get("/tracks/" + trk + "/leaderboard")).at("ranked_on_secret") == true);
}

TEST_CASE("deploy, predict, schema and restart") {
  World w;
  const auto pg = w.playground();
  const auto trk = w.track(pg, {{"kind", "experiment"}, {"eval_labels", kLabels8}});
  auto alice = w.as(w.alice);
  auto anon = w.as();
  submit(alice, trk, fixture("mlp_4_8_3.onnx"), kLabels8);
  submit(alice, trk, fixture("unsupported_op.onnx"), kLabels8);

  auto r = post(anon, "/playgrounds/" + pg + "/predict", {{"rows", golden_rows()}});
  CHECK(r->status == 409);
  CHECK(code_of(r) == "no_runtime_model");

  CHECK(post(anon, "/playgrounds/" + pg + "/deploy", {{"version", 1}})->status == 401);
  CHECK(post(w.as(w.carol), "/playgrounds/" + pg + "/deploy", {{"version", 1}})->status == 403);
  r = post(w.as(w.bob), "/playgrounds/" + pg + "/deploy", {{"version", 1}});
  REQUIRE(r->status == 200);
  CHECK(body_of(r).at("deployment").at("active_version") == 1);
  CHECK(body_of(r).at("deployment").at("activation_count") == 1);

  r = post(anon, "/playgrounds/" + pg + "/predict", {{"rows", golden_rows()}});
  REQUIRE(r->status == 200);
  auto j = body_of(r);
  CHECK(j.at("model_version") == 1);
  const auto expect = golden_classes();
  REQUIRE(j.at("predictions").size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(j.at("predictions")[i] == expect[i]);
  CHECK(j.at("errors").empty());

  // A bad row is reported without sinking the batch.
  auto rows = golden_rows();
  rows[2].erase("c");
  j = body_of(post(anon, "/playgrounds/" + pg + "/predict", {{"rows", rows}}));
  CHECK(j.at("predictions")[2].is_null());
  CHECK(j.at("errors").size() == 1);
  CHECK(j.at("errors")[0].at("index") == 2);
  CHECK(j.at("errors")[0].at("column") == "c");
  r = post(anon, "/playgrounds/" + pg + "/predict", {{"records", rows}});
  CHECK(r->status == 400);
  CHECK(code_of(r) == "malformed_body");

  r = post(alice, "/playgrounds/" + pg + "/deploy", {{"version", 9}});
  CHECK(r->status == 404);
  r = post(alice, "/playgrounds/" + pg + "/deploy", {{"version", 2}});
  CHECK(r->status == 422);
  CHECK(code_of(r) == "unsupported_op");
  CHECK(body_of(r).at("op_type") == "LeakyRelu");
  CHECK(body_of(post(anon, "/playgrounds/" + pg + "/predict", {{"rows", golden_rows()}})).at("model_version") == 1);
  CHECK(body_of(anon.Get("/playgrounds/" + pg)).at("deployment").at("active_version") == 1);

  auto schema = body_of(anon.Get("/playgrounds/" + pg + "/schema"));
  CHECK(schema.at("model_version") == 1);
  CHECK(schema.at("body_key") == "rows");
  REQUIRE(schema.at("fields").size() == 4);
  CHECK(schema.at("fields")[0].at("name") == "a");
  CHECK(schema.at("fields")[0].at("type") == "numeric");
  CHECK(schema.at("fields")[0].at("example") == 0.5);
  CHECK(schema.at("labels") == json{0, 1, 2});

  w.restart();
  auto anon2 = w.as();
  j = body_of(post(anon2, "/playgrounds/" + pg + "/predict", {{"rows", golden_rows()}}));
  CHECK(j.at("model_version") == 1);
  CHECK(j.at("predictions")[0] == expect[0]);
}

TEST_CASE("schema without a model comes from example data") {
  World w;
  auto c = w.as(w.alice);
  auto r = post(c, "/playgrounds",
                {{"name", "s"},
                 {"input_type", "tabular"},
                 {"task_type", "classification"},
                 {"example_data", {{{"w", 1.5}, {"x", 2}, {"y", 3}, {"z", 4}, {"kind", "a"}}, {{"w", 1}, {"x", 2}, {"y", 3}, {"z", 4}, {"kind", "b"}}}},
                 {"y_train", {"no", "yes", "no"}}});
  REQUIRE(r->status == 201);
  const auto id = body_of(r).at("id").get<std::string>();
  auto s = body_of(c.Get("/playgrounds/" + id + "/schema"));
  CHECK(s.at("model_version").is_null());
  CHECK(s.at("labels") == json{"no", "yes"});
  int numeric = 0, categorical = 0;
  for (const auto &f : s.at("fields")) {
    if (f.at("type") == "numeric") ++numeric;
    if (f.at("type") == "categorical") {
      ++categorical;
      CHECK(f.at("choices") == json{"a", "b"});
    }
  }
  CHECK(numeric == 4);
  CHECK(categorical == 1);
}

TEST_CASE("hot swap under concurrent predicts") {
  World w;
  auto alice = w.as(w.alice);
  auto r = post(alice, "/playgrounds", {{"name", "c"}, {"input_type", "tabular"}, {"task_type", "regression"}});
  const auto pg = body_of(r).at("id").get<std::string>();
  const auto trk = w.track(pg, {{"kind", "experiment"}, {"eval_labels", {1.0, 2.0}}});
  REQUIRE(submit(alice, trk, fixture("const_1.onnx"), {1.0, 1.0}, kConstPreprocessor)->status == 201);
  REQUIRE(submit(alice, trk, fixture("const_2.onnx"), {2.0, 2.0}, kConstPreprocessor)->status == 201);
  REQUIRE(post(alice, "/playgrounds/" + pg + "/deploy", {{"version", 1}})->status == 200);

  std::atomic<bool> go{false};
  std::atomic<int> failures{0}, mixed{0}, regress{0};
  std::vector<std::thread> clients;
  for (int t = 0; t < 4; ++t)
    clients.emplace_back([&] {
      auto c = w.as();
      int last = 1;
      while (!go) std::this_thread::yield();
      for (int i = 0; i < 40; ++i) {
        auto res = post(c, "/playgrounds/" + pg + "/predict", {{"rows", {{{"x", 5}, {"y", 6}}, {{"x", 7}, {"y", 8}}}}});
        if (!res || res->status != 200) {
          ++failures;
          continue;
        }
        auto j = json::parse(res->body);
        const int v = j.at("model_version");
        const double p0 = j.at("predictions")[0], p1 = j.at("predictions")[1];
        if (p0 != v || p1 != v) ++mixed;
        if (v < last) ++regress;
        last = v;
      }
    });
  go = true;
  std::this_thread::sleep_for(std::chrono::milliseconds(20));
  CHECK(post(alice, "/playgrounds/" + pg + "/deploy", {{"version", 2}})->status == 200);
  for (auto &t : clients) t.join();
  CHECK(failures == 0);
  CHECK(mixed == 0);
  CHECK(regress == 0);
  CHECK(body_of(post(alice, "/playgrounds/" + pg + "/predict", {{"rows", {{{"x", 0}, {"y", 0}}}}})).at("model_version") == 2);
}
