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

#include "modelhub/modelhub.h"

#include <httplib.h>

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <thread>

#include "common/error.hpp"
#include "common/json.hpp"
#include "common/sha256.hpp"
#include "eval/scoring.hpp"
#include "eval/split.hpp"
#include "metrics/metrics.hpp"
#include "onnx/diff.hpp"
#include "onnx/model.hpp"
#include "onnx/summary.hpp"
#include "registry/registry.hpp"
#include "service/http_server.hpp"

using nlohmann::json;

struct hub_registry {
  std::unique_ptr<hub::registry::Registry> reg;
};

struct hub_server {
  std::unique_ptr<hub::service::HttpServer> srv;
};

struct hub_client {
  std::unique_ptr<httplib::Client> http;
  std::string key;
};

namespace {

thread_local std::string tl_error;
thread_local std::string tl_error_json = "{}";

constexpr const char *kVersion = "1.0.0";

hub_status from_code(hub::ErrorCode c) { return static_cast<hub_status>(static_cast<int>(c) + 1); }

hub_status set_error(hub_status s, const std::string &message, json details = json::object()) {
  tl_error = message;
  json j = {{"code", hub_status_name(s)}, {"message", message}};
  for (auto &[k, v] : details.items()) j[k] = v;
  tl_error_json = hub::dump_json(j);
  return s;
}

// Runs fn, turning exceptions into a status plus thread-local error text.
template <class F> hub_status guard(F &&fn) {
  try {
    return fn();
  } catch (const hub::Error &e) {
    tl_error = e.what();
    tl_error_json = hub::dump_json(e.to_json());
    return from_code(e.code());
  } catch (const json::exception &e) {
    return set_error(HUB_E_MALFORMED_BODY, e.what());
  } catch (const std::bad_alloc &) {
    return set_error(HUB_E_INTERNAL, "out of memory");
  } catch (const std::filesystem::filesystem_error &e) {
    return set_error(HUB_E_IO, e.what());
  } catch (const std::exception &e) {
    return set_error(HUB_E_INTERNAL, e.what());
  }
}

char *dup(std::string_view s) {
  auto *p = static_cast<char *>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.data(), s.size());
  p[s.size()] = '\0';
  return p;
}

hub_status put(char **out, std::string_view s) {
  *out = dup(s);
  return HUB_OK;
}

#define HUB_REQUIRE(cond, what)                                                                                        \
  do {                                                                                                                 \
    if (!(cond)) return set_error(HUB_E_INVALID_ARGUMENT, what);                                                       \
  } while (0)

std::span<const std::byte> bytes_of(const void *p, std::size_t n) {
  return {static_cast<const std::byte *>(p), n};
}

hub_status status_from_name(const std::string &name) {
  for (int s = HUB_E_VALIDATION; s <= HUB_E_INTERNAL; ++s)
    if (name == hub_status_name(static_cast<hub_status>(s))) return static_cast<hub_status>(s);
  return HUB_E_INTERNAL;
}

hub_status fill_response(const httplib::Result &r, hub_response *out) {
  *out = hub_response{};
  if (!r) return set_error(HUB_E_NETWORK, "cannot reach server: " + httplib::to_string(r.error()));
  out->status = r->status;
  out->body = dup(r->body);
  out->body_size = r->body.size();
  out->content_type = dup(r->get_header_value("Content-Type"));
  out->content_hash = dup(r->get_header_value("X-Content-Hash"));
  if (r->status >= 200 && r->status < 300) return HUB_OK;
  try {
    const auto j = json::parse(r->body);
    const auto code = j.value("code", std::string("internal_error"));
    tl_error = j.value("message", "HTTP " + std::to_string(r->status));
    tl_error_json = hub::dump_json(j);
    return status_from_name(code);
  } catch (const json::exception &) {
    return set_error(HUB_E_INTERNAL, "HTTP " + std::to_string(r->status) + " without an error body");
  }
}

httplib::Headers auth_headers(const hub_client *c) {
  httplib::Headers h;
  if (!c->key.empty()) h.emplace("Authorization", "Bearer " + c->key);
  return h;
}

} // namespace

extern "C" {

const char *hub_status_name(hub_status status) {
  switch (status) {
  case HUB_OK: return "ok";
  case HUB_E_NETWORK: return "network_error";
  case HUB_E_INVALID_ARGUMENT: return "invalid_argument";
  case HUB_E_IO: return "io_error";
  default: break;
  }
  const int s = static_cast<int>(status);
  if (s >= HUB_E_VALIDATION && s <= HUB_E_INTERNAL)
    return hub::error_code_name(static_cast<hub::ErrorCode>(s - 1)).data();
  return "unknown";
}

const char *hub_last_error(void) { return tl_error.c_str(); }
const char *hub_last_error_json(void) { return tl_error_json.c_str(); }
void hub_free(void *p) { std::free(p); }
const char *hub_version(void) { return kVersion; }

void hub_sha256_hex(const void *data, size_t size, char out[65]) {
  const auto h = hub::sha256_hex(bytes_of(data, size));
  std::memcpy(out, h.c_str(), 65);
}

hub_status hub_split(int64_t n, double secret_fraction, uint64_t seed, char **out_json) {
  HUB_REQUIRE(out_json, "out_json is NULL");
  return guard([&] { return put(out_json, hub::dump_json(hub::eval::to_json(hub::eval::make_split(n, secret_fraction, seed)))); });
}

hub_status hub_onnx_summary(const void *bytes, size_t size, char **out_json) {
  HUB_REQUIRE(out_json && (bytes || size == 0), "NULL argument");
  return guard([&] {
    const auto s = hub::onnx::extract_summary(hub::onnx::parse_model(bytes_of(bytes, size)));
    return put(out_json, hub::dump_json(hub::onnx::to_json(s)));
  });
}

hub_status hub_onnx_render(const void *bytes, size_t size, char **out_text) {
  HUB_REQUIRE(out_text && (bytes || size == 0), "NULL argument");
  return guard([&] {
    const auto s = hub::onnx::extract_summary(hub::onnx::parse_model(bytes_of(bytes, size)));
    return put(out_text, hub::onnx::render_architecture_text(s));
  });
}

hub_status hub_onnx_compare(const void *left, size_t left_size, const void *right, size_t right_size, int as_text,
                            char **out) {
  HUB_REQUIRE(out && (left || left_size == 0) && (right || right_size == 0), "NULL argument");
  return guard([&] {
    const auto a = hub::onnx::extract_summary(hub::onnx::parse_model(bytes_of(left, left_size)));
    const auto b = hub::onnx::extract_summary(hub::onnx::parse_model(bytes_of(right, right_size)));
    const auto diff = hub::onnx::compare_models(a, b);
    return put(out, as_text ? hub::onnx::render_architecture_text(diff) : hub::dump_json(hub::onnx::to_json(diff)));
  });
}

hub_status hub_metrics(const char *task, const char *y_true_json, const char *y_pred_json, char **out_json) {
  HUB_REQUIRE(task && y_true_json && y_pred_json && out_json, "NULL argument");
  return guard([&] {
    const auto t = hub::parse_task_type(task);
    const auto y = hub::eval::values_from_json(t, hub::parse_json(y_true_json, "y_true"), "y_true");
    const auto p = hub::eval::values_from_json(t, hub::parse_json(y_pred_json, "y_pred"), "y_pred");
    const auto report = hub::eval::score_submission(t, y, hub::eval::experiment_mask(
                                                           static_cast<std::int64_t>(hub::eval::values_size(y))),
                                                    p)
                            .public_report;
    return put(out_json, hub::dump_json(hub::metrics::to_json(report)));
  });
}

// ---- Registry --------------------------------------------------------------

hub_status hub_registry_open(const char *data_dir, hub_registry **out) {
  HUB_REQUIRE(data_dir && out, "NULL argument");
  *out = nullptr;
  return guard([&] {
    auto r = std::make_unique<hub_registry>();
    r->reg = std::make_unique<hub::registry::Registry>(data_dir);
    *out = r.release();
    return HUB_OK;
  });
}

void hub_registry_close(hub_registry *reg) { delete reg; }

hub_status hub_registry_mint_key(hub_registry *reg, const char *user_id, char **out_key) {
  HUB_REQUIRE(reg && user_id && out_key, "NULL argument");
  return guard([&] { return put(out_key, reg->reg->mint_key(user_id)); });
}

hub_status hub_registry_revoke_key(hub_registry *reg, const char *key_id) {
  HUB_REQUIRE(reg && key_id, "NULL argument");
  return guard([&] {
    std::string id = key_id;
    // Accept a whole key as well as its id.
    if (id.size() == 53 && id.rfind("hub_", 0) == 0) id = id.substr(4, 16);
    reg->reg->revoke_key(id);
    return HUB_OK;
  });
}

hub_status hub_registry_export(hub_registry *reg, char **out_json) {
  HUB_REQUIRE(reg && out_json, "NULL argument");
  return guard([&] { return put(out_json, hub::dump_json(reg->reg->export_json(), 2)); });
}

hub_status hub_registry_verify(hub_registry *reg, char **out_json) {
  HUB_REQUIRE(reg && out_json, "NULL argument");
  return guard([&] { return put(out_json, hub::dump_json(reg->reg->verify())); });
}

// ---- Server ----------------------------------------------------------------

void hub_server_options_init(hub_server_options *opts) {
  if (!opts) return;
  const hub::service::ServerOptions d;
  *opts = hub_server_options{};
  opts->host = "127.0.0.1";
  opts->port = d.port;
  opts->data_dir = "hub-data";
  opts->ui_dir = nullptr;
  opts->max_model_bytes = d.limits.max_model_bytes;
  opts->max_predictions_bytes = d.limits.max_predictions_bytes;
  opts->max_json_bytes = d.limits.max_json_bytes;
  opts->threads = d.threads;
}

hub_status hub_server_create(const hub_server_options *opts, hub_server **out) {
  HUB_REQUIRE(opts && out, "NULL argument");
  *out = nullptr;
  return guard([&] {
    hub::service::ServerOptions o;
    if (opts->host) o.host = opts->host;
    o.port = opts->port;
    if (opts->data_dir) o.data_dir = opts->data_dir;
    if (opts->ui_dir) o.ui_dir = opts->ui_dir;
    if (opts->max_model_bytes) o.limits.max_model_bytes = opts->max_model_bytes;
    if (opts->max_predictions_bytes) o.limits.max_predictions_bytes = opts->max_predictions_bytes;
    if (opts->max_json_bytes) o.limits.max_json_bytes = opts->max_json_bytes;
    if (opts->threads > 0) o.threads = opts->threads;
    auto s = std::make_unique<hub_server>();
    s->srv = std::make_unique<hub::service::HttpServer>(std::move(o));
    *out = s.release();
    return HUB_OK;
  });
}

hub_status hub_server_bind(hub_server *srv, int *out_port) {
  HUB_REQUIRE(srv, "NULL server");
  return guard([&] {
    const int port = srv->srv->bind();
    if (out_port) *out_port = port;
    return HUB_OK;
  });
}

hub_status hub_server_run(hub_server *srv) {
  HUB_REQUIRE(srv, "NULL server");
  return guard([&] {
    srv->srv->serve();
    return HUB_OK;
  });
}

void hub_server_stop(hub_server *srv) {
  if (srv) srv->srv->stop();
}

void hub_server_destroy(hub_server *srv) { delete srv; }

// ---- Client ----------------------------------------------------------------

hub_status hub_client_create(const char *base_url, const char *api_key, hub_client **out) {
  HUB_REQUIRE(base_url && out, "NULL argument");
  *out = nullptr;
  return guard([&] {
    std::string url = base_url;
    while (!url.empty() && url.back() == '/') url.pop_back();
    if (url.rfind("http://", 0) != 0)
      return set_error(HUB_E_INVALID_ARGUMENT, "server URL must start with http:// (got '" + url + "')");
    auto c = std::make_unique<hub_client>();
    c->http = std::make_unique<httplib::Client>(url);
    if (!c->http->is_valid()) return set_error(HUB_E_INVALID_ARGUMENT, "invalid server URL '" + url + "'");
    c->http->set_connection_timeout(10);
    c->http->set_read_timeout(300);
    c->http->set_write_timeout(300);
    if (api_key) c->key = api_key;
    *out = c.release();
    return HUB_OK;
  });
}

void hub_client_destroy(hub_client *client) { delete client; }

void hub_client_set_timeout(hub_client *client, int seconds) {
  if (!client || seconds <= 0) return;
  client->http->set_connection_timeout(seconds);
  client->http->set_read_timeout(seconds);
  client->http->set_write_timeout(seconds);
}

hub_status hub_client_request(hub_client *client, const char *method, const char *path, const char *content_type,
                              const void *body, size_t body_size, hub_response *out) {
  HUB_REQUIRE(client && method && path && out && (body || body_size == 0), "NULL argument");
  return guard([&] {
    const std::string m = method;
    const auto headers = auth_headers(client);
    const char *ct = content_type ? content_type : "application/json";
    const auto *b = static_cast<const char *>(body);
    if (m == "GET") return fill_response(client->http->Get(path, headers), out);
    if (m == "POST") return fill_response(client->http->Post(path, headers, b ? b : "", body_size, ct), out);
    if (m == "PUT") return fill_response(client->http->Put(path, headers, b ? b : "", body_size, ct), out);
    if (m == "DELETE") return fill_response(client->http->Delete(path, headers), out);
    return set_error(HUB_E_INVALID_ARGUMENT, "unsupported method " + m);
  });
}

hub_status hub_client_multipart(hub_client *client, const char *path, const hub_part *parts, size_t n_parts,
                                hub_response *out) {
  HUB_REQUIRE(client && path && out && (parts || n_parts == 0), "NULL argument");
  return guard([&] {
    httplib::MultipartFormDataItems items;
    for (size_t i = 0; i < n_parts; ++i) {
      const auto &p = parts[i];
      if (!p.name || (!p.data && p.size)) return set_error(HUB_E_INVALID_ARGUMENT, "part without name or data");
      items.push_back({p.name, std::string(static_cast<const char *>(p.data), p.size), p.filename ? p.filename : "",
                       p.content_type ? p.content_type : "application/octet-stream"});
    }
    return fill_response(client->http->Post(path, auth_headers(client), items), out);
  });
}

void hub_response_free(hub_response *resp) {
  if (!resp) return;
  std::free(resp->body);
  std::free(resp->content_type);
  std::free(resp->content_hash);
  *resp = hub_response{};
}

} // extern "C"
