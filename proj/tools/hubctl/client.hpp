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

#include <modelhub/modelhub.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hubctl {

enum Exit : int { exit_ok = 0, exit_local = 1, exit_server = 2, exit_network = 3 };

// Carries the process exit code alongside the message printed to stderr.
struct Failure : std::runtime_error {
  int exit_code;
  Failure(int code, const std::string &msg) : std::runtime_error(msg), exit_code(code) {}
};

// Raises a Failure for a non-OK status from a local libmodelhub call.
void check_local(hub_status st);

struct Reply {
  int http_status = 0;
  std::string body;
  std::string content_type;
  std::string content_hash;
};

struct Part {
  std::string name;
  std::string data;
  std::string filename;
  std::string content_type;
};

class Client {
public:
  Client(const std::string &base_url, const std::string &api_key);
  ~Client();
  Client(const Client &) = delete;
  Client &operator=(const Client &) = delete;

  Reply get(const std::string &path);
  Reply post(const std::string &path, const std::string &json_body);
  Reply multipart(const std::string &path, const std::vector<Part> &parts);

private:
  Reply finish(hub_status st, hub_response &res);
  hub_client *c_ = nullptr;
};

} // namespace hubctl
