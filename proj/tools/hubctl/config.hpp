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

#include <functional>
#include <optional>
#include <string>

namespace hubctl {

enum class Format { table, json, csv };

Format parse_format(const std::string &s);

struct Config {
  std::string server = "http://127.0.0.1:8080";
  std::string api_key; // never printed
  Format format = Format::table;
  std::string source_file; // config file that was read, if any
};

struct ConfigFlags {
  std::optional<std::string> server;
  std::optional<std::string> api_key;
  std::optional<std::string> api_key_file;
  std::optional<std::string> format;
  std::optional<std::string> config_file;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string &)>;

EnvLookup process_env();

// $HUBCTL_CONFIG, else $XDG_CONFIG_HOME/hubctl/config.json, else
// $HOME/.config/hubctl/config.json.
std::string default_config_path(const EnvLookup &env);

// Flags win over HUB_SERVER / HUB_API_KEY / HUB_FORMAT, which win over the
// config file. Throws std::runtime_error on unreadable or malformed input.
Config resolve_config(const ConfigFlags &flags, const EnvLookup &env);

} // namespace hubctl
