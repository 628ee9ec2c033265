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

#include "config.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hubctl {

namespace fs = std::filesystem;

Format parse_format(const std::string &s) {
  if (s == "table") return Format::table;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw std::runtime_error("unknown format '" + s + "' (expected table, json or csv)");
}

EnvLookup process_env() {
  return [](const std::string &name) -> std::optional<std::string> {
    const char *v = std::getenv(name.c_str());
    if (!v || !*v) return std::nullopt;
    return std::string(v);
  };
}

std::string default_config_path(const EnvLookup &env) {
  if (auto p = env("HUBCTL_CONFIG")) return *p;
  if (auto x = env("XDG_CONFIG_HOME")) return (fs::path(*x) / "hubctl" / "config.json").string();
  if (auto h = env("HOME")) return (fs::path(*h) / ".config" / "hubctl" / "config.json").string();
  return {};
}

namespace {

std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_key_file(const std::string &path) {
  auto s = slurp(path);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  if (s.empty()) throw std::runtime_error("API key file " + path + " is empty");
  return s;
}

} // namespace

Config resolve_config(const ConfigFlags &flags, const EnvLookup &env) {
  Config cfg;

  // An explicit --config must exist; the default path is optional.
  const std::string path = flags.config_file ? *flags.config_file : default_config_path(env);
  std::error_code ec;
  if (!path.empty() && (flags.config_file || fs::exists(path, ec))) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(slurp(path));
    } catch (const nlohmann::json::exception &e) {
      throw std::runtime_error("config file " + path + " is not valid JSON: " + e.what());
    }
    if (!j.is_object()) throw std::runtime_error("config file " + path + " must hold a JSON object");
    auto str = [&](const char *k) -> std::optional<std::string> {
      auto it = j.find(k);
      if (it == j.end() || it->is_null()) return std::nullopt;
      if (!it->is_string()) throw std::runtime_error(std::string("config field '") + k + "' must be a string");
      return it->get<std::string>();
    };
    if (auto v = str("server")) cfg.server = *v;
    if (auto v = str("api_key")) cfg.api_key = *v;
    if (auto v = str("api_key_file")) cfg.api_key = read_key_file(*v);
    if (auto v = str("format")) cfg.format = parse_format(*v);
    cfg.source_file = path;

    const auto perms = fs::status(path, ec).permissions();
    if (!ec && !cfg.api_key.empty() &&
        (perms & (fs::perms::group_read | fs::perms::others_read)) != fs::perms::none)
      std::cerr << "hubctl: warning: " << path << " holds an API key and is readable by other users\n";
  }

  if (auto v = env("HUB_SERVER")) cfg.server = *v;
  if (auto v = env("HUB_API_KEY")) cfg.api_key = *v;
  if (auto v = env("HUB_FORMAT")) cfg.format = parse_format(*v);

  if (flags.server) cfg.server = *flags.server;
  if (flags.api_key_file) cfg.api_key = read_key_file(*flags.api_key_file);
  if (flags.api_key) cfg.api_key = *flags.api_key;
  if (flags.format) cfg.format = parse_format(*flags.format);
  return cfg;
}

} // namespace hubctl
