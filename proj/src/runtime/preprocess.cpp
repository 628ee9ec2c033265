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

#include "runtime/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "common/error.hpp"

namespace hub::runtime {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string &msg, json details = json::object()) {
  fail(ErrorCode::spec_invalid, "preprocessor: " + msg, std::move(details));
}

const std::map<std::string, StepKind, std::less<>> &step_kinds() {
  static const std::map<std::string, StepKind, std::less<>> kinds = {
      {"standard_scale", StepKind::standard_scale}, {"min_max", StepKind::min_max},
      {"one_hot", StepKind::one_hot},               {"constant_impute", StepKind::constant_impute},
      {"passthrough", StepKind::passthrough},
  };
  return kinds;
}

std::string kind_name(StepKind k) {
  for (const auto &[name, kind] : step_kinds())
    if (kind == k) return name;
  return "?";
}

double finite_number(const json &step, const char *key, std::size_t index) {
  if (!step.contains(key) || !step[key].is_number())
    invalid(std::string("step ") + std::to_string(index) + " needs a numeric '" + key + "'",
            {{"step", index}, {"field", key}});
  const double v = step[key].get<double>();
  if (!std::isfinite(v)) invalid(std::string("'") + key + "' must be finite", {{"step", index}, {"field", key}});
  return v;
}

double numeric_value(const std::string &column, const json &v) {
  if (!v.is_number() || v.is_boolean())
    fail(ErrorCode::type_mismatch, "column '" + column + "' must be numeric", {{"column", column}});
  return v.get<double>();
}

Label categorical_value(const std::string &column, const json &v) {
  try {
    return label_from_json(v);
  } catch (const Error &) {
    fail(ErrorCode::type_mismatch, "column '" + column + "' must be a string or integer category",
         {{"column", column}});
  }
}

} // namespace

std::int64_t PreprocessSpec::output_width() const {
  std::int64_t w = 0;
  for (const auto &s : steps) {
    if (s.kind == StepKind::one_hot)
      w += static_cast<std::int64_t>(s.categories.size());
    else if (s.kind != StepKind::constant_impute)
      ++w;
  }
  return w;
}

const Column *PreprocessSpec::column(std::string_view name) const {
  for (const auto &c : columns)
    if (c.name == name) return &c;
  return nullptr;
}

PreprocessSpec parse_preprocess_spec(const json &j) {
  if (!j.is_object()) invalid("spec must be a JSON object");
  if (!j.contains("columns") || !j["columns"].is_array()) invalid("'columns' must be an array", {{"field", "columns"}});
  if (!j.contains("steps") || !j["steps"].is_array()) invalid("'steps' must be an array", {{"field", "steps"}});

  PreprocessSpec spec;
  for (const auto &c : j["columns"]) {
    if (!c.is_object() || !c.contains("name") || !c["name"].is_string())
      invalid("every column needs a string 'name'", {{"field", "columns"}});
    Column col{c["name"].get<std::string>(), ColumnType::numeric};
    const std::string type = c.value("type", "numeric");
    if (type == "categorical")
      col.type = ColumnType::categorical;
    else if (type != "numeric")
      invalid("column '" + col.name + "' has unknown type '" + type + "'",
              {{"column", col.name}, {"allowed", {"numeric", "categorical"}}});
    if (col.name.empty() || spec.column(col.name)) invalid("duplicate or empty column name '" + col.name + "'");
    spec.columns.push_back(std::move(col));
  }

  std::set<std::string> consumed, emitted;
  for (std::size_t i = 0; i < j["steps"].size(); ++i) {
    const auto &s = j["steps"][i];
    if (!s.is_object() || !s.contains("kind") || !s["kind"].is_string())
      invalid("step " + std::to_string(i) + " needs a string 'kind'", {{"step", i}});
    const auto kind_it = step_kinds().find(s["kind"].get<std::string>());
    if (kind_it == step_kinds().end()) {
      json allowed = json::array();
      for (const auto &[name, _] : step_kinds()) allowed.push_back(name);
      invalid("step " + std::to_string(i) + " has unknown kind", {{"step", i}, {"allowed", allowed}});
    }
    Step step;
    step.kind = kind_it->second;
    if (!s.contains("column") || !s["column"].is_string())
      invalid("step " + std::to_string(i) + " needs a string 'column'", {{"step", i}});
    step.column = s["column"].get<std::string>();
    const Column *col = spec.column(step.column);
    if (!col) invalid("step " + std::to_string(i) + " refers to undeclared column '" + step.column + "'",
                      {{"step", i}, {"column", step.column}});
    const bool numeric = col->type == ColumnType::numeric;
    auto require_type = [&](bool want_numeric) {
      if (numeric != want_numeric)
        invalid(kind_name(step.kind) + " cannot apply to " + (numeric ? "numeric" : "categorical") + " column '" +
                    step.column + "'",
                {{"step", i}, {"column", step.column}});
    };

    switch (step.kind) {
    case StepKind::standard_scale:
      require_type(true);
      step.mean = finite_number(s, "mean", i);
      step.std = finite_number(s, "std", i);
      if (step.std <= 0) invalid("std must be positive for column '" + step.column + "'", {{"step", i}, {"column", step.column}});
      break;
    case StepKind::min_max:
      require_type(true);
      step.min = finite_number(s, "min", i);
      step.max = finite_number(s, "max", i);
      if (step.max <= step.min)
        invalid("max must exceed min for column '" + step.column + "'", {{"step", i}, {"column", step.column}});
      break;
    case StepKind::one_hot: {
      require_type(false);
      if (!s.contains("categories") || !s["categories"].is_array() || s["categories"].empty())
        invalid("one_hot needs a nonempty 'categories' array", {{"step", i}, {"column", step.column}});
      for (const auto &c : s["categories"]) {
        try {
          step.categories.push_back(label_from_json(c));
        } catch (const Error &) {
          invalid("categories must be strings or integers", {{"step", i}, {"column", step.column}});
        }
      }
      auto sorted = step.categories;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        invalid("duplicate category for column '" + step.column + "'", {{"step", i}, {"column", step.column}});
      break;
    }
    case StepKind::constant_impute:
      if (!s.contains("value")) invalid("constant_impute needs a 'value'", {{"step", i}, {"column", step.column}});
      step.value = s["value"];
      try {
        if (numeric)
          numeric_value(step.column, step.value);
        else
          categorical_value(step.column, step.value);
      } catch (const Error &) {
        invalid("impute value does not match the type of column '" + step.column + "'",
                {{"step", i}, {"column", step.column}});
      }
      if (emitted.count(step.column))
        invalid("constant_impute for '" + step.column + "' must come before the steps that use it",
                {{"step", i}, {"column", step.column}});
      break;
    case StepKind::passthrough:
      require_type(true);
      break;
    }
    consumed.insert(step.column);
    if (step.kind != StepKind::constant_impute) emitted.insert(step.column);
    spec.steps.push_back(std::move(step));
  }

  for (const auto &c : spec.columns)
    if (!emitted.count(c.name))
      invalid("column '" + c.name + "' is not used by any step", {{"column", c.name}});
  if (spec.output_width() == 0) invalid("spec produces no features");
  return spec;
}

json to_json(const PreprocessSpec &spec) {
  json cols = json::array(), steps = json::array();
  for (const auto &c : spec.columns)
    cols.push_back({{"name", c.name}, {"type", c.type == ColumnType::numeric ? "numeric" : "categorical"}});
  for (const auto &s : spec.steps) {
    json j = {{"kind", kind_name(s.kind)}, {"column", s.column}};
    switch (s.kind) {
    case StepKind::standard_scale: j["mean"] = s.mean; j["std"] = s.std; break;
    case StepKind::min_max: j["min"] = s.min; j["max"] = s.max; break;
    case StepKind::one_hot: j["categories"] = labels_to_json(s.categories); break;
    case StepKind::constant_impute: j["value"] = s.value; break;
    case StepKind::passthrough: break;
    }
    steps.push_back(std::move(j));
  }
  return {{"columns", cols}, {"steps", steps}};
}

std::vector<double> apply_preprocess(const PreprocessSpec &spec, const json &record) {
  if (!record.is_object()) fail(ErrorCode::type_mismatch, "each row must be a JSON object of column values");

  std::map<std::string, json, std::less<>> working;
  for (const auto &c : spec.columns)
    if (record.contains(c.name) && !record[c.name].is_null()) working[c.name] = record[c.name];

  std::vector<double> row;
  row.reserve(static_cast<std::size_t>(spec.output_width()));
  for (const auto &s : spec.steps) {
    if (s.kind == StepKind::constant_impute) {
      working.try_emplace(s.column, s.value);
      continue;
    }
    const auto it = working.find(s.column);
    if (it == working.end())
      fail(ErrorCode::validation_error, "missing value for column '" + s.column + "'", {{"column", s.column}});
    const json &v = it->second;
    switch (s.kind) {
    case StepKind::standard_scale: row.push_back((numeric_value(s.column, v) - s.mean) / s.std); break;
    case StepKind::min_max: row.push_back((numeric_value(s.column, v) - s.min) / (s.max - s.min)); break;
    case StepKind::passthrough: row.push_back(numeric_value(s.column, v)); break;
    case StepKind::one_hot: {
      const Label cat = categorical_value(s.column, v);
      const auto pos = std::find(s.categories.begin(), s.categories.end(), cat);
      if (pos == s.categories.end())
        fail(ErrorCode::validation_error,
             "unknown category '" + label_to_string(cat) + "' for column '" + s.column + "'",
             {{"column", s.column}, {"allowed", labels_to_json(s.categories)}});
      for (auto c = s.categories.begin(); c != s.categories.end(); ++c) row.push_back(c == pos ? 1.0 : 0.0);
      break;
    }
    case StepKind::constant_impute: break;
    }
  }
  return row;
}

} // namespace hub::runtime
