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

#ifndef ERDSQL_ERD_PARSER_INFO_H_
#define ERDSQL_ERD_PARSER_INFO_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "erdsql/diagnostic.h"
#include "erdsql/erd/model.h"
#include "erdsql/erd/schema.h"
#include "erdsql/result.h"
#include "erdsql/value.h"

namespace erdsql::erd {

struct RelationInfo {
  std::string entity_a;
  std::string entity_b;
  RelKind kind = RelKind::kOneToMany;
  FkSide side = FkSide::kB;
  // See RelationshipLayout::columns.
  std::vector<std::string> columns;

  friend bool operator==(const RelationInfo&, const RelationInfo&) = default;
};

// Everything the SQL compiler knows about a database. Column-indexed maps
// use "Table.Column" keys.
struct ParserInfo {
  std::string db_path;
  std::string model_name;
  std::map<std::string, RelationInfo> relation_types;
  std::map<std::string, bool> nullable_flags;
  std::map<std::string, std::vector<std::string>> attribute_lists;
  std::map<std::string, SqlType> attribute_types;

  bool HasTable(std::string_view table) const;
  // Columns of `table` in schema order; nullptr for unknown tables.
  const std::vector<std::string>* Columns(std::string_view table) const;
  std::optional<SqlType> ColumnType(std::string_view table,
                                    std::string_view column) const;
  bool IsNullable(std::string_view table, std::string_view column) const;
  const RelationInfo* FindRelation(std::string_view name) const;

  friend bool operator==(const ParserInfo&, const ParserInfo&) = default;
};

std::string QualifiedName(std::string_view table, std::string_view column);

// Expects `s == Transform(m)`.
ParserInfo BuildParserInfo(const ERModel& m, const RelationalSchema& s,
                           std::string db_path);

// Checks the cross-map invariants: every listed column is typed and has a
// nullable flag, and no flag or type refers to an unlisted column.
Diagnostics CheckParserInfo(const ParserInfo& info);

struct InfoError {
  enum class Kind { kIo, kMalformed };
  Kind kind = Kind::kMalformed;
  // Line/column into the info file for kMalformed.
  Diagnostic diag;
};

// Line-oriented info file text, documented in docs/info-format.md.
std::string FormatInfo(const ParserInfo& info);
Result<ParserInfo, InfoError> ParseInfo(std::string_view text);

Result<Unit, InfoError> WriteInfo(const std::filesystem::path& path,
                                  const ParserInfo& info);
Result<ParserInfo, InfoError> ReadInfo(const std::filesystem::path& path);

}  // namespace erdsql::erd

#endif  // ERDSQL_ERD_PARSER_INFO_H_
