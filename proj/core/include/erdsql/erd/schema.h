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

#ifndef ERDSQL_ERD_SCHEMA_H_
#define ERDSQL_ERD_SCHEMA_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "erdsql/erd/model.h"
#include "erdsql/value.h"

namespace erdsql::erd {

struct ForeignKeyTarget {
  std::string table;
  std::string column;

  friend bool operator==(const ForeignKeyTarget&,
                         const ForeignKeyTarget&) = default;
};

struct ColumnDef {
  std::string name;
  SqlType type = SqlType::kInt;
  bool not_null = false;
  bool primary_key = false;
  bool unique = false;
  std::optional<ForeignKeyTarget> references;

  friend bool operator==(const ColumnDef&, const ColumnDef&) = default;
};

struct TableDef {
  std::string name;
  std::vector<ColumnDef> columns;
  // Multi-column UNIQUE constraints (join tables).
  std::vector<std::vector<std::string>> unique_groups;

  const ColumnDef* FindColumn(std::string_view column) const;

  friend bool operator==(const TableDef&, const TableDef&) = default;
};

struct RelationalSchema {
  std::vector<TableDef> tables;

  const TableDef* FindTable(std::string_view table) const;

  friend bool operator==(const RelationalSchema&,
                         const RelationalSchema&) = default;
};

// Where the foreign key(s) implementing a relationship live.
enum class FkSide { kA, kB, kJoinTable };

std::string_view FkSideName(FkSide side);
std::optional<FkSide> ParseFkSide(std::string_view name);

// How one relationship is laid out in the relational schema.
//
// kA / kB: the table of that endpoint's entity carries `columns[0]`, which
// references the other endpoint's Key.
// kJoinTable: a table named after the relationship carries `columns[0]`
// referencing endpoint a and `columns[1]` referencing endpoint b.
struct RelationshipLayout {
  RelKind kind = RelKind::kOneToMany;
  FkSide side = FkSide::kB;
  std::vector<std::string> columns;

  friend bool operator==(const RelationshipLayout&,
                         const RelationshipLayout&) = default;
};

// "<Entity><Role>Key", e.g. StudentTakingKey.
std::string ForeignKeyColumnName(std::string_view referenced_entity,
                                 std::string_view role);

// Foreign-key placement: one-to-many puts the key on the side whose
// maximum is 1, one-to-one on endpoint b, many-to-many in a join table.
RelationshipLayout LayoutRelationship(const Relationship& r);

// Each entity becomes a table led by an INTEGER primary key "Key", followed
// by one column per attribute and then the foreign keys of the
// relationships stored there, in declaration order. Join tables follow the
// entity tables in relationship order.
RelationalSchema Transform(const ERModel& m);

// Deterministic CREATE TABLE script, one statement per table.
std::string EmitDdl(const RelationalSchema& s);

// SQLite column type for a value type: TEXT, INTEGER or REAL.
std::string_view StorageType(SqlType type);

}  // namespace erdsql::erd

#endif  // ERDSQL_ERD_SCHEMA_H_
