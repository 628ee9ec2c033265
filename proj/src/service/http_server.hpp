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

#include <filesystem>
#include <memory>
#include <string>

#include "service/hub.hpp"

namespace hub::service {

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080; // 0 picks a free port
  std::filesystem::path data_dir = "hub-data";
  std::filesystem::path ui_dir; // served under /ui/ when set
  Limits limits;
  int threads = 32;
};

// HTTP/1.1 front end over Hub. bind() then serve(); stop() from any thread.
class HttpServer {
public:
  explicit HttpServer(ServerOptions options);
  ~HttpServer();
  HttpServer(const HttpServer &) = delete;
  HttpServer &operator=(const HttpServer &) = delete;

  int bind(); // returns the bound port
  void serve();
  void stop();

  Hub &hub();

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

} // namespace hub::service
