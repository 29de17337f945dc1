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

#include "erdsql/db/error.h"

namespace erdsql::db {

std::string_view KindName(DBError::Kind kind) {
  switch (kind) {
    case DBError::Kind::kConnectionFailed:
      return "ConnectionFailed";
    case DBError::Kind::kQueryFailed:
      return "QueryFailed";
    case DBError::Kind::kLockedDB:
      return "LockedDB";
    case DBError::Kind::kConversionFailed:
      return "ConversionFailed";
    case DBError::Kind::kConstraintViolated:
      return "ConstraintViolated";
  }
  return "QueryFailed";
}

std::string ToString(const DBError& e) {
  return std::string(KindName(e.kind)) + ": " + e.message;
}

}  // namespace erdsql::db
