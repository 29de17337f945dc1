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

#include "support/random_model.h"

namespace erdsql::testing {

namespace {

int Uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

erd::Cardinality RandomCardinality(std::mt19937& rng) {
  erd::Cardinality c;
  c.min = Uniform(rng, 0, 1);
  switch (Uniform(rng, 0, 3)) {
    case 0:
    case 1:
      c.max = 1;
      break;
    case 2:
      c.max = std::nullopt;
      break;
    default:
      c.max = Uniform(rng, 2, 3);
      break;
  }
  return c;
}

}  // namespace

erd::ERModel RandomModel(std::mt19937& rng, const RandomModelOptions& options) {
  erd::ERModel m;
  m.name = "M" + std::to_string(Uniform(rng, 0, 999));
  int entities = Uniform(rng, 1, options.max_entities);
  for (int e = 0; e < entities; ++e) {
    erd::Entity entity;
    entity.name = "Ent" + std::to_string(e);
    int attrs = Uniform(rng, 1, options.max_attributes);
    for (int a = 0; a < attrs; ++a) {
      erd::Attribute attr;
      attr.name = "a" + std::to_string(a);
      attr.domain = kAllSqlTypes[Uniform(rng, 0, 5)];
      int k = Uniform(rng, 0, 9);
      if (attr.domain != SqlType::kBool && k == 0) {
        attr.key = erd::KeyStatus::kPrimaryKey;
      } else if (attr.domain != SqlType::kBool && k == 1) {
        attr.key = erd::KeyStatus::kUnique;
      }
      attr.nullable =
          attr.key != erd::KeyStatus::kPrimaryKey && Uniform(rng, 0, 3) == 0;
      entity.attributes.push_back(attr);
    }
    m.entities.push_back(std::move(entity));
  }
  int rels = Uniform(rng, 0, options.max_relationships);
  for (int r = 0; r < rels; ++r) {
    erd::Relationship rel;
    rel.name = "R" + std::to_string(r);
    if (Uniform(rng, 0, 2) == 0) rel.role = "Role" + std::to_string(r);
    rel.a.entity = m.entities[Uniform(rng, 0, entities - 1)].name;
    rel.b.entity = m.entities[Uniform(rng, 0, entities - 1)].name;
    rel.a.cardinality = RandomCardinality(rng);
    rel.b.cardinality = RandomCardinality(rng);
    m.relationships.push_back(std::move(rel));
  }
  return m;
}

}  // namespace erdsql::testing
