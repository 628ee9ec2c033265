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

#include "common/error.hpp"

namespace hub {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::validation_error: return "validation_error";
  case ErrorCode::malformed_body: return "malformed_body";
  case ErrorCode::length_mismatch: return "length_mismatch";
  case ErrorCode::type_mismatch: return "type_mismatch";
  case ErrorCode::unauthorized: return "unauthorized";
  case ErrorCode::forbidden: return "forbidden";
  case ErrorCode::not_found: return "not_found";
  case ErrorCode::conflict: return "conflict";
  case ErrorCode::track_finalized: return "track_finalized";
  case ErrorCode::no_runtime_model: return "no_runtime_model";
  case ErrorCode::payload_too_large: return "payload_too_large";
  case ErrorCode::onnx_parse_error: return "onnx_parse_error";
  case ErrorCode::graph_invalid: return "graph_invalid";
  case ErrorCode::unsupported_op: return "unsupported_op";
  case ErrorCode::shape_error: return "shape_error";
  case ErrorCode::spec_invalid: return "spec_invalid";
  case ErrorCode::invalid_metric: return "invalid_metric";
  case ErrorCode::corruption: return "corruption";
  case ErrorCode::storage_error: return "storage_error";
  case ErrorCode::internal_error: return "internal_error";
  }
  return "internal_error";
}

int http_status(ErrorCode code) {
  switch (code) {
  case ErrorCode::malformed_body: return 400;
  case ErrorCode::unauthorized: return 401;
  case ErrorCode::forbidden: return 403;
  case ErrorCode::not_found: return 404;
  case ErrorCode::conflict:
  case ErrorCode::track_finalized:
  case ErrorCode::no_runtime_model: return 409;
  case ErrorCode::payload_too_large: return 413;
  case ErrorCode::validation_error:
  case ErrorCode::length_mismatch:
  case ErrorCode::type_mismatch:
  case ErrorCode::onnx_parse_error:
  case ErrorCode::graph_invalid:
  case ErrorCode::unsupported_op:
  case ErrorCode::shape_error:
  case ErrorCode::spec_invalid:
  case ErrorCode::invalid_metric: return 422;
  case ErrorCode::corruption:
  case ErrorCode::storage_error:
  case ErrorCode::internal_error: return 500;
  }
  return 500;
}

nlohmann::json Error::to_json() const {
  nlohmann::json body = details_.is_object() ? details_ : nlohmann::json::object();
  body["code"] = std::string(error_code_name(code_));
  body["message"] = what();
  return body;
}

} // namespace hub
