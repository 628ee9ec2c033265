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

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace hub {

// Stable machine-readable error taxonomy. The string names are part of the
// HTTP contract (the `code` field of every error body) and must not change.
enum class ErrorCode {
  validation_error,
  malformed_body,
  length_mismatch,
  type_mismatch,
  unauthorized,
  forbidden,
  not_found,
  conflict,
  track_finalized,
  no_runtime_model,
  payload_too_large,
  onnx_parse_error,
  graph_invalid,
  unsupported_op,
  shape_error,
  spec_invalid,
  invalid_metric,
  corruption,
  storage_error,
  internal_error,
};

std::string_view error_code_name(ErrorCode code);

// HTTP status used when an error of this code crosses the wire.
int http_status(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &message,
        nlohmann::json details = nlohmann::json::object())
      : std::runtime_error(message), code_(code), details_(std::move(details)) {}

  ErrorCode code() const noexcept { return code_; }
  const nlohmann::json &details() const noexcept { return details_; }

  // {"code": ..., "message": ..., <details...>}
  nlohmann::json to_json() const;

private:
  ErrorCode code_;
  nlohmann::json details_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &message,
                              nlohmann::json details = nlohmann::json::object()) {
  throw Error(code, message, std::move(details));
}

} // namespace hub
