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

#include "client.hpp"

#include <nlohmann/json.hpp>

namespace hubctl {

void check_local(hub_status st) {
  if (st == HUB_OK) return;
  throw Failure(exit_local, std::string(hub_status_name(st)) + ": " + hub_last_error());
}

Client::Client(const std::string &base_url, const std::string &api_key) {
  const hub_status st = hub_client_create(base_url.c_str(), api_key.empty() ? nullptr : api_key.c_str(), &c_);
  check_local(st);
}

Client::~Client() { hub_client_destroy(c_); }

Reply Client::finish(hub_status st, hub_response &res) {
  Reply r;
  r.http_status = res.status;
  if (res.body) r.body.assign(res.body, res.body_size);
  if (res.content_type) r.content_type = res.content_type;
  if (res.content_hash) r.content_hash = res.content_hash;
  hub_response_free(&res);
  if (st == HUB_OK) return r;
  if (st == HUB_E_NETWORK) throw Failure(exit_network, std::string("network_error: ") + hub_last_error());
  if (st == HUB_E_INVALID_ARGUMENT || st == HUB_E_IO) check_local(st);
  // Relay the server's code verbatim.
  std::string code = hub_status_name(st);
  std::string message = hub_last_error();
  try {
    const auto j = nlohmann::json::parse(r.body);
    code = j.value("code", code);
    message = j.value("message", message);
  } catch (const nlohmann::json::exception &) {
  }
  throw Failure(exit_server, code + ": " + message + " (HTTP " + std::to_string(r.http_status) + ")");
}

Reply Client::get(const std::string &path) {
  hub_response res{};
  const auto st = hub_client_request(c_, "GET", path.c_str(), nullptr, nullptr, 0, &res);
  return finish(st, res);
}

Reply Client::post(const std::string &path, const std::string &json_body) {
  hub_response res{};
  const auto st =
      hub_client_request(c_, "POST", path.c_str(), "application/json", json_body.data(), json_body.size(), &res);
  return finish(st, res);
}

Reply Client::multipart(const std::string &path, const std::vector<Part> &parts) {
  std::vector<hub_part> raw;
  raw.reserve(parts.size());
  for (const auto &p : parts)
    raw.push_back({p.name.c_str(), p.data.data(), p.data.size(), p.filename.c_str(), p.content_type.c_str()});
  hub_response res{};
  const auto st = hub_client_multipart(c_, path.c_str(), raw.data(), raw.size(), &res);
  return finish(st, res);
}

} // namespace hubctl
