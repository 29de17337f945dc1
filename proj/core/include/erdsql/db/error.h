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

#ifndef ERDSQL_DB_ERROR_H_
#define ERDSQL_DB_ERROR_H_

#include <string>
#include <string_view>

#include "erdsql/result.h"

namespace erdsql::db {

struct DBError {
  enum class Kind {
    kConnectionFailed,
    kQueryFailed,
    kLockedDB,
    kConversionFailed,
    kConstraintViolated,
  };

  Kind kind = Kind::kQueryFailed;
  std::string message;

  friend bool operator==(const DBError&, const DBError&) = default;
};

// "ConnectionFailed", "QueryFailed", ...
std::string_view KindName(DBError::Kind kind);

// "<Kind>: <message>"
std::string ToString(const DBError& e);

inline Unexpected<DBError> Fail(DBError::Kind kind, std::string message) {
  return {DBError{kind, std::move(message)}};
}

template <typename T>
using SqlResult = Result<T, DBError>;

}  // namespace erdsql::db

#endif  // ERDSQL_DB_ERROR_H_
