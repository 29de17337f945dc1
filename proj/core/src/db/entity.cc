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

#include "erdsql/db/entity.h"

#include <algorithm>

namespace erdsql::db {

bool RowMatchesTypes(const Row& row, const std::vector<SqlType>& types) {
  if (row.size() != types.size()) return false;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (!row[i].is_null() && !row[i].HasType(types[i])) return false;
  }
  return true;
}

int KeyIndex(const std::vector<std::string>& column_names) {
  auto it = std::find(column_names.begin(), column_names.end(),
                      std::string(erd::kKeyColumn));
  return it == column_names.end()
             ? -1
             : static_cast<int>(it - column_names.begin());
}

EntityDescription<Row> DescribeTable(const erd::ParserInfo& info,
                                     std::string_view table) {
  EntityDescription<Row> d;
  d.entity_name = std::string(table);
  if (const auto* cols = info.Columns(table)) {
    d.column_names = *cols;
    for (const auto& c : *cols) {
      d.column_types.push_back(info.ColumnType(table, c).value_or(SqlType::kInt));
    }
  }
  d.to_row = [](const Row& r) { return r; };
  d.from_row = [](const Row& r) { return r; };
  return d;
}

}  // namespace erdsql::db
