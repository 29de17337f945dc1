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

#ifndef ERDSQL_PLAN_RENDER_H_
#define ERDSQL_PLAN_RENDER_H_

#include <optional>
#include <string>
#include <vector>

#include "erdsql/plan/plan.h"

namespace erdsql::plan {

// One `?` in rendered SQL, in textual order. Constants carry their value;
// parameters are bound by name.
struct Slot {
  std::string name;
  SqlType type = SqlType::kInt;
  bool nullable_allowed = false;
  std::optional<SqlValue> constant;

  bool is_constant() const { return constant.has_value(); }

  friend bool operator==(const Slot&, const Slot&) = default;
};

struct RenderedSql {
  std::string sql;
  std::vector<Slot> slots;

  friend bool operator==(const RenderedSql&, const RenderedSql&) = default;
};

// SQLite text for a plan. Every constant and parameter becomes `?`.
RenderedSql Render(const QueryPlan& plan);

// SQL reference to a table instance: "\"Student\"" or "\"Student#1\"".
std::string InstanceName(const TableInstance& t);

// Condition text as used after `where`; empty for Constraint::True().
std::string RenderCondition(const Constraint& c, std::vector<Slot>& slots);

// "?1 x : Int", "?2 const 2.0 : Float", with "?" suffixed for nullable
// parameters. `index` is 0-based and printed 1-based.
std::string DescribeSlot(std::size_t index, const Slot& slot);

}  // namespace erdsql::plan

#endif  // ERDSQL_PLAN_RENDER_H_
