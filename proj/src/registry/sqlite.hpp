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

struct sqlite3;
struct sqlite3_stmt;

namespace hub::registry {

// Thin RAII layer over the sqlite3 C API. Failures become storage_error.
class Statement {
public:
  Statement(sqlite3 *db, std::string_view sql);
  ~Statement();
  Statement(const Statement &) = delete;
  Statement &operator=(const Statement &) = delete;

  Statement &bind(int idx, std::string_view v);
  Statement &bind(int idx, const std::string &v) { return bind(idx, std::string_view(v)); }
  Statement &bind(int idx, const char *v) { return bind(idx, std::string_view(v)); }
  Statement &bind(int idx, const std::optional<std::string> &v) {
    return v ? bind(idx, std::string_view(*v)) : bind_null(idx);
  }
  Statement &bind(int idx, std::int64_t v);
  Statement &bind(int idx, std::optional<std::string_view> v);
  Statement &bind(int idx, std::optional<std::int64_t> v);
  Statement &bind_null(int idx);

  // True while a row is available.
  bool step();
  void run(); // step to completion, expecting no rows

  std::string text(int col) const;
  std::optional<std::string> opt_text(int col) const;
  std::int64_t integer(int col) const;
  std::optional<std::int64_t> opt_integer(int col) const;
  bool is_integer(int col) const;
  int column_count() const;
  std::string column_name(int col) const;

private:
  sqlite3 *db_;
  sqlite3_stmt *stmt_ = nullptr;
};

class Database {
public:
  explicit Database(const std::string &path);
  ~Database();
  Database(const Database &) = delete;
  Database &operator=(const Database &) = delete;

  void exec(std::string_view sql);
  Statement prepare(std::string_view sql) { return Statement(db_, sql); }
  sqlite3 *handle() const { return db_; }
  int changes() const; // rows touched by the last statement

private:
  sqlite3 *db_ = nullptr;
};

// BEGIN IMMEDIATE ... COMMIT, rolled back if not committed.
class Transaction {
public:
  explicit Transaction(Database &db);
  ~Transaction();
  void commit();

private:
  Database &db_;
  bool done_ = false;
};

} // namespace hub::registry
