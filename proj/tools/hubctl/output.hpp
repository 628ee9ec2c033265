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

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

// Human-oriented renderings. Nothing here is a stable format; scripts use
// --format json or csv.
namespace hubctl::out {

using nlohmann::json;

std::string cell(const json &v);

void table(std::ostream &os, const std::vector<std::string> &header, const std::vector<std::vector<std::string>> &rows);
void pairs(std::ostream &os, const std::vector<std::pair<std::string, std::string>> &kv);

void playground(std::ostream &os, const json &pg);
void playground_list(std::ostream &os, const json &body);
void track(std::ostream &os, const json &t);
void schema(std::ostream &os, const json &s);
void submission(std::ostream &os, const json &r);
void leaderboard(std::ostream &os, const json &board);
void model_metadata(std::ostream &os, const json &m);
void deployment(std::ostream &os, const json &d);
void predictions(std::ostream &os, const json &r);
void scores(std::ostream &os, const json &s);

} // namespace hubctl::out
