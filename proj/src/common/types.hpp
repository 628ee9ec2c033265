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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace hub {

enum class TaskType { classification, regression };
enum class InputType { tabular, image };
enum class Visibility { public_, private_ };
enum class TrackKind { experiment, competition };
enum class TrackPolicy { open, team_only };

std::string_view to_string(TaskType v);
std::string_view to_string(InputType v);
std::string_view to_string(Visibility v);
std::string_view to_string(TrackKind v);
std::string_view to_string(TrackPolicy v);

// Parsers throw validation_error naming the field and the allowed values.
TaskType parse_task_type(std::string_view s);
InputType parse_input_type(std::string_view s);
Visibility parse_visibility(std::string_view s);
TrackKind parse_track_kind(std::string_view s);
TrackPolicy parse_track_policy(std::string_view s);

// A class label. Integers order before strings; within a kind the natural
// order applies, so [2, 0, 1] sorts numerically.
using Label = std::variant<std::int64_t, std::string>;

// Integral JSON numbers (including 3.0) become integer labels, strings stay
// strings. Anything else is a type_mismatch error.
Label label_from_json(const nlohmann::json &j);
nlohmann::json label_to_json(const Label &label);
std::string label_to_string(const Label &label);

std::vector<Label> labels_from_json(const nlohmann::json &array);
nlohmann::json labels_to_json(const std::vector<Label> &labels);

// Finite real values; NaN/inf or non-numbers are rejected.
std::vector<double> reals_from_json(const nlohmann::json &array);

// Microseconds since the Unix epoch, UTC.
using Timestamp = std::int64_t;
Timestamp now_micros();
std::string format_timestamp(Timestamp t);
Timestamp parse_timestamp(std::string_view s);

// Flat string -> scalar map used for user-supplied metadata.
void validate_scalar_map(const nlohmann::json &j, std::string_view what);

} // namespace hub
