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

#include "erdsql/erd/schema.h"

namespace erdsql::erd {

const ColumnDef* TableDef::FindColumn(std::string_view column) const {
  for (const auto& c : columns) {
    if (c.name == column) return &c;
  }
  return nullptr;
}

const TableDef* RelationalSchema::FindTable(std::string_view table) const {
  for (const auto& t : tables) {
    if (t.name == table) return &t;
  }
  return nullptr;
}

std::string_view FkSideName(FkSide side) {
  switch (side) {
    case FkSide::kA:
      return "A";
    case FkSide::kB:
      return "B";
    case FkSide::kJoinTable:
      return "join";
  }
  return "?";
}

std::optional<FkSide> ParseFkSide(std::string_view name) {
  for (FkSide s : {FkSide::kA, FkSide::kB, FkSide::kJoinTable}) {
    if (FkSideName(s) == name) return s;
  }
  return std::nullopt;
}

std::string ForeignKeyColumnName(std::string_view referenced_entity,
                                 std::string_view role) {
  std::string name(referenced_entity);
  name += role;
  name += kKeyColumn;
  return name;
}

RelationshipLayout LayoutRelationship(const Relationship& r) {
  RelationshipLayout layout;
  layout.kind = ClassifyRelationship(r);
  const std::string& role = r.EffectiveRole();
  switch (layout.kind) {
    case RelKind::kOneToOne:
      layout.side = FkSide::kB;
      break;
    case RelKind::kOneToMany:
      layout.side = r.a.cardinality.AtMostOne() ? FkSide::kA : FkSide::kB;
      break;
    case RelKind::kManyToMany: {
      layout.side = FkSide::kJoinTable;
      std::string col_a = ForeignKeyColumnName(r.a.entity, role);
      std::string col_b = ForeignKeyColumnName(r.b.entity, role);
      // Self-referential n:m relationships would otherwise repeat a name.
      if (col_a == col_b) col_b += "2";
      layout.columns = {std::move(col_a), std::move(col_b)};
      return layout;
    }
  }
  const std::string& referenced =
      layout.side == FkSide::kA ? r.b.entity : r.a.entity;
  layout.columns = {ForeignKeyColumnName(referenced, role)};
  return layout;
}

namespace {

ColumnDef KeyColumnDef() {
  ColumnDef key;
  key.name = std::string(kKeyColumn);
  key.type = SqlType::kInt;
  key.not_null = true;
  key.primary_key = true;
  return key;
}

ColumnDef ForeignKeyDef(std::string name, const std::string& target,
                        bool not_null, bool unique) {
  ColumnDef c;
  c.name = std::move(name);
  c.type = SqlType::kInt;
  c.not_null = not_null;
  c.unique = unique;
  c.references = ForeignKeyTarget{target, std::string(kKeyColumn)};
  return c;
}

}  // namespace

RelationalSchema Transform(const ERModel& m) {
  RelationalSchema schema;
  for (const auto& e : m.entities) {
    TableDef t;
    t.name = e.name;
    t.columns.push_back(KeyColumnDef());
    for (const auto& a : e.attributes) {
      ColumnDef c;
      c.name = a.name;
      c.type = a.domain;
      c.not_null = !a.nullable;
      c.unique = a.key != KeyStatus::kNoKey;
      t.columns.push_back(std::move(c));
    }
    schema.tables.push_back(std::move(t));
  }
  auto table_of = [&](const std::string& name) -> TableDef& {
    for (auto& t : schema.tables) {
      if (t.name == name) return t;
    }
    return schema.tables.front();  // unreachable for validated models
  };
  for (const auto& r : m.relationships) {
    RelationshipLayout layout = LayoutRelationship(r);
    if (layout.side == FkSide::kJoinTable) {
      TableDef join;
      join.name = r.name;
      join.columns.push_back(KeyColumnDef());
      join.columns.push_back(
          ForeignKeyDef(layout.columns[0], r.a.entity, true, false));
      join.columns.push_back(
          ForeignKeyDef(layout.columns[1], r.b.entity, true, false));
      join.unique_groups.push_back(layout.columns);
      schema.tables.push_back(std::move(join));
      continue;
    }
    const Endpoint& holder = layout.side == FkSide::kA ? r.a : r.b;
    const Endpoint& referenced = layout.side == FkSide::kA ? r.b : r.a;
    // The holder participates in at most one instance; it must participate
    // when its lower bound is positive. A one-to-one key is unique because
    // the referenced side participates at most once too.
    bool not_null = holder.cardinality.min >= 1;
    bool unique = layout.kind == RelKind::kOneToOne;
    table_of(holder.entity)
        .columns.push_back(ForeignKeyDef(layout.columns[0], referenced.entity,
                                         not_null, unique));
  }
  return schema;
}

}  // namespace erdsql::erd
