// Copyright 2026 The erdsql Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ERDSQL_DB_CONNECTION_H_
#define ERDSQL_DB_CONNECTION_H_

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "erdsql/db/error.h"
#include "erdsql/value.h"

struct sqlite3;

namespace erdsql::db {

using Row = std::vector<SqlValue>;

// An open SQLite database with foreign-key enforcement switched on.
// Move-only; not for concurrent use.
class Connection {
 public:
  // Creates the file if it does not exist.
  static SqlResult<Connection> Open(const std::filesystem::path& path);

  Connection(Connection&& other) noexcept;
  Connection& operator=(Connection&& other) noexcept;
  Connection(const Connection&) = delete;
  Connection& operator=(const Connection&) = delete;
  ~Connection();

  // Further use fails with QueryFailed.
  void Close();
  bool is_open() const { return db_ != nullptr; }
  const std::filesystem::path& path() const { return path_; }

  // Runs one or more statements without parameters.
  SqlResult<Unit> ExecScript(std::string_view sql);

  // Binds `values` to the holes in order and decodes every result column
  // as the matching entry of `types`.
  SqlResult<std::vector<Row>> Query(std::string_view sql,
                                    const std::vector<SqlValue>& values,
                                    const std::vector<SqlType>& types);

  // Runs a non-query statement and returns the number of changed rows.
  SqlResult<std::int64_t> Execute(std::string_view sql,
                                  const std::vector<SqlValue>& values);

  std::int64_t LastInsertRowId() const;
  bool InTransaction() const;

 private:
  Connection(sqlite3* db, std::filesystem::path path)
      : db_(db), path_(std::move(path)) {}

  sqlite3* db_ = nullptr;
  std::filesystem::path path_;
};

}  // namespace erdsql::db

#endif  // ERDSQL_DB_CONNECTION_H_
