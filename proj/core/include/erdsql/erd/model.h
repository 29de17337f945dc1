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

#ifndef ERDSQL_ERD_MODEL_H_
#define ERDSQL_ERD_MODEL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "erdsql/diagnostic.h"
#include "erdsql/result.h"
#include "erdsql/value.h"

namespace erdsql::erd {

// Attribute domains map one-to-one onto SqlType.
using Domain = SqlType;

enum class KeyStatus { kPrimaryKey, kUnique, kNoKey };

struct Attribute {
  std::string name;
  Domain domain = Domain::kString;
  KeyStatus key = KeyStatus::kNoKey;
  bool nullable = false;

  friend bool operator==(const Attribute&, const Attribute&) = default;
};

struct Entity {
  std::string name;
  std::vector<Attribute> attributes;

  const Attribute* FindAttribute(std::string_view attr) const;

  friend bool operator==(const Entity&, const Entity&) = default;
};

// Participation bounds of one endpoint. An empty `max` is unbounded.
struct Cardinality {
  std::uint32_t min = 0;
  std::optional<std::uint32_t> max;

  bool AtMostOne() const { return max && *max <= 1; }

  friend bool operator==(const Cardinality&, const Cardinality&) = default;
};

// "0..1", "1..n"
std::string ToString(const Cardinality& c);

// One side of a relationship: each instance of `entity` takes part in
// `cardinality` instances of the relationship.
struct Endpoint {
  std::string entity;
  Cardinality cardinality;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Relationship {
  std::string name;
  // Used to name foreign-key columns; defaults to `name` when empty.
  std::string role;
  Endpoint a;
  Endpoint b;

  const std::string& EffectiveRole() const { return role.empty() ? name : role; }

  friend bool operator==(const Relationship&, const Relationship&) = default;
};

struct ERModel {
  std::string name;
  std::vector<Entity> entities;
  std::vector<Relationship> relationships;

  const Entity* FindEntity(std::string_view entity) const;
  const Relationship* FindRelationship(std::string_view rel) const;

  friend bool operator==(const ERModel&, const ERModel&) = default;
};

enum class RelKind { kOneToOne, kOneToMany, kManyToMany };

std::string_view RelKindName(RelKind kind);
std::optional<RelKind> ParseRelKind(std::string_view name);

// (<=1, <=1) is one-to-one, exactly one side bounded by 1 is one-to-many,
// everything else many-to-many.
RelKind ClassifyRelationship(const Relationship& r);

// Name of the surrogate primary-key column every table carries.
inline constexpr std::string_view kKeyColumn = "Key";

// Source positions of model elements, parallel to the model's vectors.
struct ModelPositions {
  std::vector<SourcePos> entities;
  std::vector<std::vector<SourcePos>> attributes;
  std::vector<SourcePos> relationships;
  std::vector<std::pair<SourcePos, SourcePos>> endpoints;
};

// Checks every model invariant, including that the generated relational
// schema will not contain clashing column names. Without `positions`,
// diagnostics carry position 0:0.
Diagnostics ValidateModel(const ERModel& m,
                          const ModelPositions* positions = nullptr);

}  // namespace erdsql::erd

#endif  // ERDSQL_ERD_MODEL_H_
