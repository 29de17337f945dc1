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

#include "erdsql/db/connection.h"

#include <sqlite3.h>

#include <memory>
#include <string>

namespace erdsql::db {

namespace {

using Kind = DBError::Kind;

Kind KindFor(int code) {
  switch (code & 0xff) {
    case SQLITE_CONSTRAINT:
      return Kind::kConstraintViolated;
    case SQLITE_BUSY:
    case SQLITE_LOCKED:
      return Kind::kLockedDB;
    default:
      return Kind::kQueryFailed;
  }
}

Unexpected<DBError> EngineError(sqlite3* db, int code) {
  std::string msg = db ? sqlite3_errmsg(db) : sqlite3_errstr(code);
  if (msg.empty()) msg = sqlite3_errstr(code);
  return Fail(KindFor(code), msg);
}

Unexpected<DBError> Closed() {
  return Fail(Kind::kQueryFailed, "connection is closed");
}

struct StmtDeleter {
  void operator()(sqlite3_stmt* s) const { sqlite3_finalize(s); }
};
using Stmt = std::unique_ptr<sqlite3_stmt, StmtDeleter>;

SqlResult<Stmt> Prepare(sqlite3* db, std::string_view sql,
                        const std::vector<SqlValue>& values) {
  sqlite3_stmt* raw = nullptr;
  const char* tail = nullptr;
  int rc = sqlite3_prepare_v2(db, sql.data(), static_cast<int>(sql.size()),
                              &raw, &tail);
  Stmt stmt(raw);
  if (rc != SQLITE_OK) return EngineError(db, rc);
  if (!stmt) return Fail(Kind::kQueryFailed, "empty statement");
  std::string_view rest(tail, sql.data() + sql.size() - tail);
  if (rest.find_first_not_of(" \t\r\n") != std::string_view::npos) {
    return Fail(Kind::kQueryFailed, "more than one statement");
  }
  int holes = sqlite3_bind_parameter_count(stmt.get());
  if (holes != static_cast<int>(values.size())) {
    return Fail(Kind::kQueryFailed,
                "statement has " + std::to_string(holes) + " holes but " +
                    std::to_string(values.size()) + " values were given");
  }
  for (int i = 0; i < holes; ++i) {
    const SqlValue& v = values[i];
    int idx = i + 1;
    if (v.is_null()) {
      rc = sqlite3_bind_null(stmt.get(), idx);
    } else {
      switch (*v.type()) {
        case SqlType::kString:
          rc = sqlite3_bind_text(stmt.get(), idx, v.as_string().data(),
                                 static_cast<int>(v.as_string().size()),
                                 SQLITE_TRANSIENT);
          break;
        case SqlType::kChar: {
          std::string text = EncodeUtf8(v.as_char());
          rc = sqlite3_bind_text(stmt.get(), idx, text.data(),
                                 static_cast<int>(text.size()),
                                 SQLITE_TRANSIENT);
          break;
        }
        case SqlType::kInt:
          rc = sqlite3_bind_int64(stmt.get(), idx, v.as_int());
          break;
        case SqlType::kFloat:
          rc = sqlite3_bind_double(stmt.get(), idx, v.as_float());
          break;
        case SqlType::kBool:
          rc = sqlite3_bind_int64(stmt.get(), idx, v.as_bool() ? 1 : 0);
          break;
        case SqlType::kDate:
          rc = sqlite3_bind_int64(stmt.get(), idx, v.as_date().epoch_seconds);
          break;
      }
    }
    if (rc != SQLITE_OK) return EngineError(db, rc);
  }
  return stmt;
}

std::string StorageName(int storage) {
  switch (storage) {
    case SQLITE_INTEGER:
      return "INTEGER";
    case SQLITE_FLOAT:
      return "REAL";
    case SQLITE_TEXT:
      return "TEXT";
    case SQLITE_BLOB:
      return "BLOB";
    default:
      return "NULL";
  }
}

SqlResult<SqlValue> Decode(sqlite3_stmt* stmt, int col, SqlType type) {
  int storage = sqlite3_column_type(stmt, col);
  if (storage == SQLITE_NULL) return SqlValue::Null();
  auto mismatch = [&] {
    return Fail(Kind::kConversionFailed,
                "column " + std::to_string(col + 1) + " holds " +
                    StorageName(storage) + " which is not a valid " +
                    std::string(TypeName(type)));
  };
  auto text = [&] {
    const auto* p =
        reinterpret_cast<const char*>(sqlite3_column_text(stmt, col));
    return std::string(p, sqlite3_column_bytes(stmt, col));
  };
  switch (type) {
    case SqlType::kString:
      if (storage != SQLITE_TEXT) return mismatch();
      return SqlValue::String(text());
    case SqlType::kChar: {
      if (storage != SQLITE_TEXT) return mismatch();
      auto c = DecodeSingleUtf8(text());
      if (!c) return mismatch();
      return SqlValue::Char(*c);
    }
    case SqlType::kInt:
      if (storage != SQLITE_INTEGER) return mismatch();
      return SqlValue::Int(sqlite3_column_int64(stmt, col));
    case SqlType::kFloat:
      if (storage != SQLITE_FLOAT && storage != SQLITE_INTEGER) {
        return mismatch();
      }
      return SqlValue::Float(sqlite3_column_double(stmt, col));
    case SqlType::kBool: {
      if (storage != SQLITE_INTEGER) return mismatch();
      std::int64_t i = sqlite3_column_int64(stmt, col);
      if (i != 0 && i != 1) return mismatch();
      return SqlValue::Bool(i == 1);
    }
    case SqlType::kDate:
      if (storage != SQLITE_INTEGER) return mismatch();
      return SqlValue::FromDate(Date{sqlite3_column_int64(stmt, col)});
  }
  return mismatch();
}

}  // namespace

SqlResult<Connection> Connection::Open(const std::filesystem::path& path) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) {
    return Fail(Kind::kConnectionFailed,
                "'" + path.string() + "' is a directory");
  }
  sqlite3* db = nullptr;
  int rc = sqlite3_open_v2(path.string().c_str(), &db,
                           SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE,
                           nullptr);
  if (rc != SQLITE_OK) {
    std::string msg = db ? sqlite3_errmsg(db) : sqlite3_errstr(rc);
    sqlite3_close(db);
    return Fail(Kind::kConnectionFailed,
                "cannot open '" + path.string() + "': " + msg);
  }
  sqlite3_extended_result_codes(db, 1);
  char* err = nullptr;
  rc = sqlite3_exec(db,
                    "PRAGMA foreign_keys = ON; "
                    "SELECT count(*) FROM sqlite_master;",
                    nullptr, nullptr, &err);
  if (rc != SQLITE_OK) {
    std::string msg = err ? err : sqlite3_errstr(rc);
    sqlite3_free(err);
    sqlite3_close(db);
    return Fail(Kind::kConnectionFailed,
                "cannot open '" + path.string() + "': " + msg);
  }
  return Connection(db, path);
}

Connection::Connection(Connection&& other) noexcept
    : db_(std::exchange(other.db_, nullptr)), path_(std::move(other.path_)) {}

Connection& Connection::operator=(Connection&& other) noexcept {
  if (this != &other) {
    Close();
    db_ = std::exchange(other.db_, nullptr);
    path_ = std::move(other.path_);
  }
  return *this;
}

Connection::~Connection() { Close(); }

void Connection::Close() {
  if (db_) {
    sqlite3_close_v2(db_);
    db_ = nullptr;
  }
}

SqlResult<Unit> Connection::ExecScript(std::string_view sql) {
  if (!db_) return Closed();
  std::string text(sql);
  char* err = nullptr;
  int rc = sqlite3_exec(db_, text.c_str(), nullptr, nullptr, &err);
  if (rc != SQLITE_OK) {
    std::string msg = err ? err : sqlite3_errstr(rc);
    sqlite3_free(err);
    return Fail(KindFor(rc), msg);
  }
  return Unit{};
}

SqlResult<std::vector<Row>> Connection::Query(
    std::string_view sql, const std::vector<SqlValue>& values,
    const std::vector<SqlType>& types) {
  if (!db_) return Closed();
  auto stmt = Prepare(db_, sql, values);
  if (!stmt) return MakeUnexpected(std::move(stmt).error());
  sqlite3_stmt* s = stmt->get();
  int columns = sqlite3_column_count(s);
  if (columns == 0) return Fail(Kind::kQueryFailed, "statement is not a query");
  if (columns != static_cast<int>(types.size())) {
    return Fail(Kind::kQueryFailed,
                "query yields " + std::to_string(columns) +
                    " columns but " + std::to_string(types.size()) +
                    " types were requested");
  }
  std::vector<Row> rows;
  for (;;) {
    int rc = sqlite3_step(s);
    if (rc == SQLITE_DONE) break;
    if (rc != SQLITE_ROW) return EngineError(db_, rc);
    Row row;
    row.reserve(columns);
    for (int c = 0; c < columns; ++c) {
      auto v = Decode(s, c, types[c]);
      if (!v) return MakeUnexpected(std::move(v).error());
      row.push_back(std::move(v).value());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

SqlResult<std::int64_t> Connection::Execute(
    std::string_view sql, const std::vector<SqlValue>& values) {
  if (!db_) return Closed();
  auto stmt = Prepare(db_, sql, values);
  if (!stmt) return MakeUnexpected(std::move(stmt).error());
  for (;;) {
    int rc = sqlite3_step(stmt->get());
    if (rc == SQLITE_DONE) break;
    if (rc != SQLITE_ROW) return EngineError(db_, rc);
  }
  return static_cast<std::int64_t>(sqlite3_changes(db_));
}

std::int64_t Connection::LastInsertRowId() const {
  return db_ ? sqlite3_last_insert_rowid(db_) : 0;
}

bool Connection::InTransaction() const {
  return db_ && sqlite3_get_autocommit(db_) == 0;
}

}  // namespace erdsql::db
