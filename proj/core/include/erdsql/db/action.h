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

#ifndef ERDSQL_DB_ACTION_H_
#define ERDSQL_DB_ACTION_H_

#include <filesystem>
#include <functional>
#include <optional>
#include <type_traits>
#include <utility>

#include "erdsql/db/connection.h"

namespace erdsql::db {

// A deferred computation against an open connection. Composed actions stop
// at the first failing step.
template <typename T>
class DBAction {
 public:
  using value_type = T;
  using Fn = std::function<SqlResult<T>(Connection&)>;

  explicit DBAction(Fn fn) : fn_(std::move(fn)) {}

  static DBAction Pure(T value) {
    return DBAction([value = std::move(value)](Connection&) -> SqlResult<T> {
      return value;
    });
  }
  static DBAction Failure(DBError error) {
    return DBAction([error = std::move(error)](Connection&) -> SqlResult<T> {
      return MakeUnexpected(error);
    });
  }

  SqlResult<T> operator()(Connection& conn) const { return fn_(conn); }

  // `f` maps the value to the next action.
  template <typename F>
  auto Bind(F f) const {
    using Next = std::invoke_result_t<F, const T&>;
    using U = typename Next::value_type;
    Fn self = fn_;
    return DBAction<U>([self, f](Connection& conn) -> SqlResult<U> {
      auto r = self(conn);
      if (!r) return MakeUnexpected(std::move(r).error());
      return f(r.value())(conn);
    });
  }

  template <typename F>
  auto Map(F f) const {
    using U = std::invoke_result_t<F, const T&>;
    Fn self = fn_;
    return DBAction<U>([self, f](Connection& conn) -> SqlResult<U> {
      auto r = self(conn);
      if (!r) return MakeUnexpected(std::move(r).error());
      return f(r.value());
    });
  }

  // Runs `next` after this action, discarding this action's value.
  template <typename U>
  DBAction<U> Then(DBAction<U> next) const {
    Fn self = fn_;
    return DBAction<U>([self, next](Connection& conn) -> SqlResult<U> {
      auto r = self(conn);
      if (!r) return MakeUnexpected(std::move(r).error());
      return next(conn);
    });
  }

 private:
  Fn fn_;
};

// Connects, runs, and disconnects even when the action fails.
template <typename T>
SqlResult<T> RunWithDb(const std::filesystem::path& path,
                       const DBAction<T>& action) {
  auto conn = Connection::Open(path);
  if (!conn) return MakeUnexpected(std::move(conn).error());
  SqlResult<T> result = action(conn.value());
  conn->Close();
  return result;
}

// Keeps one connection open across several actions.
class Session {
 public:
  static SqlResult<Session> Open(const std::filesystem::path& path) {
    auto conn = Connection::Open(path);
    if (!conn) return MakeUnexpected(std::move(conn).error());
    return Session(std::move(conn).value());
  }

  template <typename T>
  SqlResult<T> Run(const DBAction<T>& action) {
    return action(conn_);
  }

  Connection& connection() { return conn_; }
  void Close() { conn_.Close(); }

 private:
  explicit Session(Connection conn) : conn_(std::move(conn)) {}

  Connection conn_;
};

}  // namespace erdsql::db

#endif  // ERDSQL_DB_ACTION_H_
