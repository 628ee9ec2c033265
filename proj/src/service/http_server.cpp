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

#include "service/http_server.hpp"

#include <httplib.h>

#include <atomic>
#include <chrono>
#include <iostream>
#include <thread>

#include "common/error.hpp"
#include "common/json.hpp"

namespace hub::service {

using nlohmann::json;

namespace {

constexpr const char *kJson = "application/json";

void send_error(httplib::Response &res, const Error &e) {
  res.status = http_status(e.code());
  res.set_content(dump_json(e.to_json()), kJson);
}

std::optional<std::string> bearer(const httplib::Request &req) {
  if (!req.has_header("Authorization")) return std::nullopt;
  const auto value = req.get_header_value("Authorization");
  constexpr std::string_view prefix = "Bearer ";
  if (value.rfind(prefix, 0) != 0) fail(ErrorCode::unauthorized, "Authorization header must be 'Bearer <key>'");
  return value.substr(prefix.size());
}

std::optional<bool> flag_param(const httplib::Request &req, const char *name) {
  if (!req.has_param(name)) return std::nullopt;
  const auto v = req.get_param_value(name);
  if (v == "1" || v == "true") return true;
  if (v == "0" || v == "false") return false;
  fail(ErrorCode::validation_error, std::string(name) + " must be true or false", {{"field", name}});
}

} // namespace

struct HttpServer::Impl {
  ServerOptions opts;
  Hub hub;
  httplib::Server server;
  int port = -1;
  std::atomic<bool> serving{false};
  std::atomic<bool> stop_requested{false};

  explicit Impl(ServerOptions o) : opts(std::move(o)), hub(opts.data_dir, opts.limits) {}

  using Handler = std::function<void(const httplib::Request &, httplib::Response &, const std::string &user)>;

  // Authenticates, runs, and maps every failure to a JSON error body.
  httplib::Server::Handler wrap(Handler h) {
    return [this, h = std::move(h)](const httplib::Request &req, httplib::Response &res) {
      try {
        const auto user = hub.authorize(bearer(req));
        h(req, res, user);
      } catch (const Error &e) {
        send_error(res, e);
      } catch (const json::exception &e) {
        send_error(res, Error(ErrorCode::malformed_body, std::string("unexpected JSON shape: ") + e.what()));
      } catch (const std::exception &e) {
        std::cerr << "hub: " << req.method << " " << req.path << ": " << e.what() << "\n";
        send_error(res, Error(ErrorCode::internal_error, "internal error"));
      }
    };
  }

  json body_json(const httplib::Request &req) const {
    if (req.body.size() > opts.limits.max_json_bytes)
      fail(ErrorCode::payload_too_large, "request body exceeds " + std::to_string(opts.limits.max_json_bytes) + " bytes",
           {{"limit", opts.limits.max_json_bytes}});
    if (req.body.empty()) return json::object();
    return parse_json(req.body, "body");
  }

  static void reply(httplib::Response &res, const json &j, int status = 200) {
    res.status = status;
    res.set_content(dump_json(j), kJson);
  }

  void routes() {
    auto &s = server;
    s.Get("/healthz", wrap([](auto &, auto &res, auto &) { reply(res, {{"status", "ok"}}); }));

    s.Post("/playgrounds", wrap([this](auto &req, auto &res, auto &user) {
             reply(res, hub.create_playground(user, body_json(req)), 201);
           }));
    s.Get("/playgrounds", wrap([this](auto &, auto &res, auto &user) { reply(res, hub.list_playgrounds(user)); }));
    s.Get(R"(/playgrounds/([^/]+))", wrap([this](auto &req, auto &res, auto &user) {
            reply(res, hub.get_playground(user, req.matches[1]));
          }));
    s.Get(R"(/playgrounds/([^/]+)/schema)", wrap([this](auto &req, auto &res, auto &user) {
            reply(res, hub.schema(user, req.matches[1]));
          }));
    s.Post(R"(/playgrounds/([^/]+)/tracks)", wrap([this](auto &req, auto &res, auto &user) {
             reply(res, hub.add_track(user, req.matches[1], body_json(req)), 201);
           }));
    s.Post(R"(/playgrounds/([^/]+)/deploy)", wrap([this](auto &req, auto &res, auto &user) {
             reply(res, hub.deploy(user, req.matches[1], body_json(req)));
           }));
    s.Post(R"(/playgrounds/([^/]+)/predict)", wrap([this](auto &req, auto &res, auto &user) {
             reply(res, hub.predict(user, req.matches[1], body_json(req)));
           }));

    s.Get(R"(/tracks/([^/]+))",
          wrap([this](auto &req, auto &res, auto &user) { reply(res, hub.get_track(user, req.matches[1])); }));
    s.Post(R"(/tracks/([^/]+)/submissions)", wrap([this](auto &req, auto &res, auto &user) {
             if (!req.is_multipart_form_data())
               fail(ErrorCode::malformed_body, "submissions must be multipart/form-data",
                    {{"pointer", "Content-Type"}});
             SubmissionParts parts;
             auto part = [&](const char *name) -> std::optional<std::string> {
               if (!req.has_file(name)) return std::nullopt;
               return req.get_file_value(name).content;
             };
             parts.model = part("model").value_or("");
             parts.predictions = part("predictions").value_or("");
             parts.preprocessor = part("preprocessor");
             parts.custom_metadata = part("custom_metadata");
             parts.example_data = part("example_data");
             reply(res, hub.submit(user, req.matches[1], parts), 201);
           }));
    s.Get(R"(/tracks/([^/]+)/leaderboard)", wrap([this](auto &req, auto &res, auto &user) {
            LeaderboardQuery q;
            q.sort = req.get_param_value("sort");
            q.format = req.get_param_value("format");
            q.secret = flag_param(req, "secret");
            auto body = hub.leaderboard(user, req.matches[1], q);
            res.set_content(std::move(body), q.format == "csv" ? "text/csv; charset=utf-8" : kJson);
          }));
    s.Post(R"(/tracks/([^/]+)/finalize)", wrap([this](auto &req, auto &res, auto &user) {
             reply(res, hub.finalize(user, req.matches[1]));
           }));

    s.Get(R"(/models/([^/]+)/metadata)", wrap([this](auto &req, auto &res, auto &user) {
            reply(res, hub.model_metadata(user, req.matches[1]));
          }));
    s.Get(R"(/models/([^/]+)/artifact)", wrap([this](auto &req, auto &res, auto &user) {
            auto a = hub.artifact(user, req.matches[1]);
            res.set_header("X-Content-Hash", a.content_hash);
            res.set_header("Content-Disposition", "attachment; filename=\"" + a.filename + "\"");
            res.set_content(std::move(a.bytes), "application/octet-stream");
          }));
    s.Get(R"(/models/([^/]+)/compare/([^/]+))", wrap([this](auto &req, auto &res, auto &user) {
            if (req.get_param_value("format") == "text")
              res.set_content(hub.compare_text(user, req.matches[1], req.matches[2]), "text/plain; charset=utf-8");
            else
              reply(res, hub.compare(user, req.matches[1], req.matches[2]));
          }));

    if (!opts.ui_dir.empty() && !s.set_mount_point("/ui", opts.ui_dir.string()))
      std::cerr << "hub: ui directory " << opts.ui_dir << " not found; /ui disabled\n";

    // Transport-level failures (unknown route, oversized body) still get a
    // JSON error body with a code.
    s.set_error_handler([](const httplib::Request &, httplib::Response &res) {
      if (!res.body.empty()) return httplib::Server::HandlerResponse::Unhandled;
      ErrorCode code = ErrorCode::internal_error;
      std::string msg = "request failed";
      switch (res.status) {
      case 404: code = ErrorCode::not_found, msg = "no such route"; break;
      case 405: code = ErrorCode::not_found, msg = "method not allowed"; break;
      case 413: code = ErrorCode::payload_too_large, msg = "request body too large"; break;
      case 400: code = ErrorCode::malformed_body, msg = "malformed request"; break;
      default: break;
      }
      res.set_content(dump_json(Error(code, msg).to_json()), kJson);
      return httplib::Server::HandlerResponse::Handled;
    });
    s.set_exception_handler([](const httplib::Request &, httplib::Response &res, std::exception_ptr) {
      send_error(res, Error(ErrorCode::internal_error, "internal error"));
    });

    const auto &l = opts.limits;
    s.set_payload_max_length(l.max_model_bytes + l.max_predictions_bytes + 3 * l.max_json_bytes + (1u << 20));
    const int threads = std::max(1, opts.threads);
    s.new_task_queue = [threads] { return new httplib::ThreadPool(static_cast<std::size_t>(threads)); };
    s.set_keep_alive_max_count(100);
  }
};

HttpServer::HttpServer(ServerOptions options) : impl_(std::make_unique<Impl>(std::move(options))) { impl_->routes(); }

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
  auto &i = *impl_;
  if (i.opts.port == 0) {
    i.port = i.server.bind_to_any_port(i.opts.host);
  } else {
    i.port = i.server.bind_to_port(i.opts.host, i.opts.port) ? i.opts.port : -1;
  }
  if (i.port < 0)
    fail(ErrorCode::internal_error, "cannot listen on " + i.opts.host + ":" + std::to_string(i.opts.port));
  return i.port;
}

void HttpServer::serve() {
  auto &i = *impl_;
  if (i.port < 0) bind();
  // Announce before checking, so a concurrent stop() either sees us serving
  // or we see its request.
  i.serving = true;
  if (!i.stop_requested) i.server.listen_after_bind();
  i.serving = false;
}

void HttpServer::stop() {
  if (!impl_) return;
  auto &i = *impl_;
  i.stop_requested = true;
  // httplib ignores stop() until its accept loop is running.
  while (i.serving && !i.server.is_running()) std::this_thread::sleep_for(std::chrono::milliseconds(1));
  i.server.stop();
}

Hub &HttpServer::hub() { return impl_->hub; }

} // namespace hub::service
