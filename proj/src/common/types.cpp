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

#include "common/types.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>

#include "common/error.hpp"

namespace hub {

using nlohmann::json;

std::string_view to_string(TaskType v) {
  return v == TaskType::classification ? "classification" : "regression";
}
std::string_view to_string(InputType v) {
  return v == InputType::tabular ? "tabular" : "image";
}
std::string_view to_string(Visibility v) {
  return v == Visibility::public_ ? "public" : "private";
}
std::string_view to_string(TrackKind v) {
  return v == TrackKind::experiment ? "experiment" : "competition";
}
std::string_view to_string(TrackPolicy v) {
  return v == TrackPolicy::open ? "open" : "team-only";
}

namespace {

[[noreturn]] void bad_enum(std::string_view field, std::string_view got,
                           std::initializer_list<const char *> allowed) {
  json list = json::array();
  std::string text;
  for (const char *a : allowed) {
    list.push_back(a);
    text += text.empty() ? a : std::string(", ") + a;
  }
  fail(ErrorCode::validation_error,
       std::string(field) + " must be one of {" + text + "}, got '" + std::string(got) + "'",
       {{"field", field}, {"allowed", list}});
}

} // namespace

TaskType parse_task_type(std::string_view s) {
  if (s == "classification") return TaskType::classification;
  if (s == "regression") return TaskType::regression;
  bad_enum("task_type", s, {"classification", "regression"});
}

InputType parse_input_type(std::string_view s) {
  if (s == "tabular") return InputType::tabular;
  if (s == "image") return InputType::image;
  bad_enum("input_type", s, {"tabular", "image"});
}

Visibility parse_visibility(std::string_view s) {
  if (s == "public") return Visibility::public_;
  if (s == "private") return Visibility::private_;
  bad_enum("visibility", s, {"public", "private"});
}

TrackKind parse_track_kind(std::string_view s) {
  if (s == "experiment") return TrackKind::experiment;
  if (s == "competition") return TrackKind::competition;
  bad_enum("kind", s, {"experiment", "competition"});
}

TrackPolicy parse_track_policy(std::string_view s) {
  if (s == "open") return TrackPolicy::open;
  if (s == "team-only") return TrackPolicy::team_only;
  bad_enum("policy", s, {"open", "team-only"});
}

Label label_from_json(const json &j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) {
    double v = j.get<double>();
    if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 9.0e15)
      return static_cast<std::int64_t>(v);
  }
  fail(ErrorCode::type_mismatch,
       "class labels must be integers or strings, got " + j.dump());
}

json label_to_json(const Label &label) {
  return std::visit([](const auto &v) { return json(v); }, label);
}

std::string label_to_string(const Label &label) {
  if (const auto *s = std::get_if<std::string>(&label)) return *s;
  return std::to_string(std::get<std::int64_t>(label));
}

std::vector<Label> labels_from_json(const json &array) {
  if (!array.is_array())
    fail(ErrorCode::type_mismatch, "expected a JSON array of labels");
  std::vector<Label> out;
  out.reserve(array.size());
  for (const auto &v : array) out.push_back(label_from_json(v));
  return out;
}

json labels_to_json(const std::vector<Label> &labels) {
  json out = json::array();
  for (const auto &l : labels) out.push_back(label_to_json(l));
  return out;
}

std::vector<double> reals_from_json(const json &array) {
  if (!array.is_array())
    fail(ErrorCode::type_mismatch, "expected a JSON array of numbers");
  std::vector<double> out;
  out.reserve(array.size());
  for (std::size_t i = 0; i < array.size(); ++i) {
    const auto &v = array[i];
    if (!v.is_number() || v.is_boolean())
      fail(ErrorCode::type_mismatch,
           "regression values must be numbers; element " + std::to_string(i) + " is " + v.dump(),
           {{"index", i}});
    double d = v.get<double>();
    if (!std::isfinite(d))
      fail(ErrorCode::validation_error, "non-finite value at index " + std::to_string(i),
           {{"index", i}});
    out.push_back(d);
  }
  return out;
}

Timestamp now_micros() {
  using namespace std::chrono;
  return duration_cast<microseconds>(system_clock::now().time_since_epoch()).count();
}

std::string format_timestamp(Timestamp t) {
  std::time_t secs = static_cast<std::time_t>(t / 1000000);
  long micros = static_cast<long>(t % 1000000);
  if (micros < 0) {
    micros += 1000000;
    secs -= 1;
  }
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d.%06ldZ", tm.tm_year + 1900,
                tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec, micros);
  return buf;
}

Timestamp parse_timestamp(std::string_view s) {
  std::tm tm{};
  long micros = 0;
  std::string str(s);
  if (std::sscanf(str.c_str(), "%4d-%2d-%2dT%2d:%2d:%2d.%6ldZ", &tm.tm_year, &tm.tm_mon,
                  &tm.tm_mday, &tm.tm_hour, &tm.tm_min, &tm.tm_sec, &micros) != 7)
    fail(ErrorCode::validation_error, "bad timestamp '" + str + "'");
  tm.tm_year -= 1900;
  tm.tm_mon -= 1;
  return static_cast<Timestamp>(timegm(&tm)) * 1000000 + micros;
}

void validate_scalar_map(const json &j, std::string_view what) {
  if (!j.is_object())
    fail(ErrorCode::validation_error, std::string(what) + " must be a JSON object");
  for (const auto &[key, value] : j.items()) {
    if (!(value.is_string() || value.is_number() || value.is_boolean() || value.is_null()))
      fail(ErrorCode::validation_error,
           std::string(what) + "." + key + " must be a scalar (string, number, bool)",
           {{"field", key}});
  }
}

} // namespace hub
