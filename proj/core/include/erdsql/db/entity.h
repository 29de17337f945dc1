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

#ifndef ERDSQL_DB_ENTITY_H_
#define ERDSQL_DB_ENTITY_H_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "erdsql/db/connection.h"
#include "erdsql/erd/parser_info.h"

namespace erdsql::db {

// How values of T map to rows of one table. `column_names` and
// `column_types` are parallel; rows produced by `to_row` hold one value per
// column, tagged with its type or null.
template <typename T>
struct EntityDescription {
  std::string entity_name;
  std::vector<std::string> column_names;
  std::vector<SqlType> column_types;
  std::function<Row(const T&)> to_row;
  std::function<T(const Row&)> from_row;
};

// True if every value is null or carries the type at its position.
bool RowMatchesTypes(const Row& row, const std::vector<SqlType>& types);

// Position of the surrogate key column, or -1.
int KeyIndex(const std::vector<std::string>& column_names);

// Identity description over all columns of `table`, Key first.
EntityDescription<Row> DescribeTable(const erd::ParserInfo& info,
                                     std::string_view table);

}  // namespace erdsql::db

#endif  // ERDSQL_DB_ENTITY_H_
