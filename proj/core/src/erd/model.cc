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

#include "erdsql/erd/model.h"

#include <map>
#include <set>

#include "erdsql/erd/schema.h"
#include "erdsql/sql/token.h"

namespace erdsql::erd {

const Attribute* Entity::FindAttribute(std::string_view attr) const {
  for (const auto& a : attributes) {
    if (a.name == attr) return &a;
  }
  return nullptr;
}

const Entity* ERModel::FindEntity(std::string_view entity) const {
  for (const auto& e : entities) {
    if (e.name == entity) return &e;
  }
  return nullptr;
}

const Relationship* ERModel::FindRelationship(std::string_view rel) const {
  for (const auto& r : relationships) {
    if (r.name == rel) return &r;
  }
  return nullptr;
}

std::string ToString(const Cardinality& c) {
  return std::to_string(c.min) + ".." +
         (c.max ? std::to_string(*c.max) : std::string("n"));
}

std::string_view RelKindName(RelKind kind) {
  switch (kind) {
    case RelKind::kOneToOne:
      return "OneToOne";
    case RelKind::kOneToMany:
      return "OneToMany";
    case RelKind::kManyToMany:
      return "ManyToMany";
  }
  return "?";
}

std::optional<RelKind> ParseRelKind(std::string_view name) {
  for (RelKind k :
       {RelKind::kOneToOne, RelKind::kOneToMany, RelKind::kManyToMany}) {
    if (RelKindName(k) == name) return k;
  }
  return std::nullopt;
}

RelKind ClassifyRelationship(const Relationship& r) {
  bool a_one = r.a.cardinality.AtMostOne();
  bool b_one = r.b.cardinality.AtMostOne();
  if (a_one && b_one) return RelKind::kOneToOne;
  if (a_one || b_one) return RelKind::kOneToMany;
  return RelKind::kManyToMany;
}

namespace {

class Validator {
 public:
  Validator(const ERModel& m, const ModelPositions* positions)
      : m_(m), positions_(positions) {}

  Diagnostics Run() {
    CheckName(m_.name, "model", {});
    std::set<std::string> entity_names;
    for (std::size_t i = 0; i < m_.entities.size(); ++i) {
      CheckEntity(i, entity_names);
    }
    std::set<std::string> rel_names;
    for (std::size_t k = 0; k < m_.relationships.size(); ++k) {
      CheckRelationship(k, entity_names, rel_names);
    }
    if (diags_.empty()) CheckGeneratedColumns();
    return std::move(diags_);
  }

 private:
  SourcePos EntityPos(std::size_t i) const {
    return positions_ && i < positions_->entities.size()
               ? positions_->entities[i]
               : SourcePos{0, 0};
  }
  SourcePos AttributePos(std::size_t i, std::size_t j) const {
    if (positions_ && i < positions_->attributes.size() &&
        j < positions_->attributes[i].size()) {
      return positions_->attributes[i][j];
    }
    return {0, 0};
  }
  SourcePos RelPos(std::size_t k) const {
    return positions_ && k < positions_->relationships.size()
               ? positions_->relationships[k]
               : SourcePos{0, 0};
  }
  SourcePos EndpointPos(std::size_t k, bool second) const {
    if (positions_ && k < positions_->endpoints.size()) {
      return second ? positions_->endpoints[k].second
                    : positions_->endpoints[k].first;
    }
    return {0, 0};
  }

  void Error(SourcePos pos, std::string message) {
    diags_.push_back({pos, std::move(message)});
  }

  void CheckName(const std::string& name, std::string_view what,
                 SourcePos pos) {
    if (!sql::IsIdentifier(name)) {
      Error(pos, std::string(what) + " name '" + name +
                     "' is not a valid identifier");
    } else if (sql::IsKeyword(name)) {
      Error(pos, std::string(what) + " name '" + name +
                     "' is a reserved SQL keyword");
    }
  }

  void CheckEntity(std::size_t i, std::set<std::string>& entity_names) {
    const Entity& e = m_.entities[i];
    CheckName(e.name, "entity", EntityPos(i));
    if (!entity_names.insert(e.name).second) {
      Error(EntityPos(i), "duplicate entity name '" + e.name + "'");
    }
    if (e.attributes.empty()) {
      Error(EntityPos(i), "entity '" + e.name + "' has no attributes");
    }
    std::set<std::string> attr_names;
    for (std::size_t j = 0; j < e.attributes.size(); ++j) {
      const Attribute& a = e.attributes[j];
      CheckName(a.name, "attribute", AttributePos(i, j));
      if (a.name == kKeyColumn) {
        Error(AttributePos(i, j), "attribute name 'Key' is reserved for the "
                                  "surrogate key of entity '" +
                                      e.name + "'");
      }
      if (!attr_names.insert(a.name).second) {
        Error(AttributePos(i, j), "duplicate attribute '" + a.name +
                                      "' in entity '" + e.name + "'");
      }
      if (a.key == KeyStatus::kPrimaryKey && a.nullable) {
        Error(AttributePos(i, j), "key attribute '" + e.name + "." + a.name +
                                      "' cannot be nullable");
      }
    }
  }

  void CheckCardinality(const Cardinality& c, SourcePos pos) {
    if (c.max && *c.max == 0) {
      Error(pos, "cardinality upper bound must be positive");
    } else if (c.max && c.min > *c.max) {
      Error(pos, "cardinality lower bound " + std::to_string(c.min) +
                     " exceeds upper bound " + std::to_string(*c.max));
    }
  }

  void CheckRelationship(std::size_t k,
                         const std::set<std::string>& entity_names,
                         std::set<std::string>& rel_names) {
    const Relationship& r = m_.relationships[k];
    CheckName(r.name, "relationship", RelPos(k));
    if (!r.role.empty()) CheckName(r.role, "role", RelPos(k));
    if (!rel_names.insert(r.name).second) {
      Error(RelPos(k), "duplicate relationship name '" + r.name + "'");
    }
    if (entity_names.count(r.name)) {
      Error(RelPos(k), "relationship name '" + r.name +
                           "' clashes with an entity name");
    }
    for (bool second : {false, true}) {
      const Endpoint& ep = second ? r.b : r.a;
      if (!entity_names.count(ep.entity)) {
        Error(EndpointPos(k, second), "unknown entity '" + ep.entity +
                                          "' in relationship '" + r.name +
                                          "'");
      }
      CheckCardinality(ep.cardinality, EndpointPos(k, second));
    }
  }

  // Foreign-key columns must not clash with attributes or with each other.
  void CheckGeneratedColumns() {
    std::map<std::string, std::set<std::string>> columns;
    for (const auto& e : m_.entities) {
      auto& cols = columns[e.name];
      cols.insert(std::string(kKeyColumn));
      for (const auto& a : e.attributes) cols.insert(a.name);
    }
    for (std::size_t k = 0; k < m_.relationships.size(); ++k) {
      const Relationship& r = m_.relationships[k];
      RelationshipLayout layout = LayoutRelationship(r);
      if (layout.side == FkSide::kJoinTable) continue;
      const std::string& table =
          layout.side == FkSide::kA ? r.a.entity : r.b.entity;
      if (!columns[table].insert(layout.columns[0]).second) {
        Error(RelPos(k), "foreign key column '" + layout.columns[0] +
                             "' for relationship '" + r.name +
                             "' clashes with an existing column of '" + table +
                             "'; declare a distinct role");
      }
    }
  }

  const ERModel& m_;
  const ModelPositions* positions_;
  Diagnostics diags_;
};

}  // namespace

Diagnostics ValidateModel(const ERModel& m, const ModelPositions* positions) {
  return Validator(m, positions).Run();
}

}  // namespace erdsql::erd
