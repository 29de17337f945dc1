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

#ifndef ERDSQL_PLAN_TRANSLATE_H_
#define ERDSQL_PLAN_TRANSLATE_H_

#include "erdsql/analysis/named_ast.h"
#include "erdsql/erd/parser_info.h"
#include "erdsql/plan/plan.h"

namespace erdsql::plan {

// Builds the plan for a fully typed statement. The From list becomes a
// cross-join chain; literals become constants and placeholders parameters.
QueryPlan Translate(const analysis::TypedStatement& stmt,
                    const erd::ParserInfo& info);

// Rewrites `left relationship right` into key equalities.
//
// One-to-one and one-to-many: Equal(referenced.Key, holder.<fk column>).
// Many-to-many: the join table is appended to `tables` under a fresh
// number, and the result is And[Equal(left.Key, join.<col a>),
// Equal(right.Key, join.<col b>)].
Constraint DesugarSatisfies(const TableInstance& left,
                            const std::string& relationship,
                            const TableInstance& right,
                            const erd::ParserInfo& info, TableClause& tables);

}  // namespace erdsql::plan

#endif  // ERDSQL_PLAN_TRANSLATE_H_
