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

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "common/error.hpp"

namespace hub {

// Serializes with invalid UTF-8 replaced rather than throwing; ONNX string
// attributes are raw bytes.
inline std::string dump_json(const nlohmann::json &j, int indent = -1) {
  return j.dump(indent, ' ', false, nlohmann::json::error_handler_t::replace);
}

// Parses a request/config document; errors become malformed_body with the
// parser's byte offset as the pointer.
inline nlohmann::json parse_json(std::string_view text, std::string_view what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    fail(ErrorCode::malformed_body, std::string(what) + " is not valid JSON: " + e.what(),
         {{"pointer", std::string(what)}, {"byte", e.byte}});
  }
}

} // namespace hub
