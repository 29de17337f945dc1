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

#include "erdsql/plan/plan.h"

#include <algorithm>

namespace erdsql::plan {

Value Value::Const(SqlValue v, SqlType type) {
  Value out;
  out.kind = Kind::kConst;
  out.constant = std::move(v);
  out.type = type;
  out.nullable_allowed = out.constant.is_null();
  return out;
}

Value Value::Col(TypedColumn c) {
  Value out;
  out.kind = Kind::kColumn;
  out.type = c.type;
  out.column = std::move(c);
  return out;
}

Value Value::Param(std::string name, SqlType type, bool nullable_allowed) {
  Value out;
  out.kind = Kind::kParam;
  out.param = std::move(name);
  out.type = type;
  out.nullable_allowed = nullable_allowed;
  return out;
}

Constraint Constraint::Compare(Kind kind, Value lhs, Value rhs) {
  Constraint c;
  c.kind = kind;
  c.values = {std::move(lhs), std::move(rhs)};
  return c;
}

Constraint Constraint::Between(Value subject, Value lo, Value hi) {
  Constraint c;
  c.kind = Kind::kBetween;
  c.values = {std::move(subject), std::move(lo), std::move(hi)};
  return c;
}

Constraint Constraint::Null(TypedColumn col, bool negated) {
  Constraint c;
  c.kind = negated ? Kind::kIsNotNull : Kind::kIsNull;
  c.values = {Value::Col(std::move(col))};
  return c;
}

namespace {

Constraint Junction(Constraint::Kind kind, std::vector<Constraint> parts) {
  if (parts.empty()) return Constraint::True();
  if (parts.size() == 1) return std::move(parts.front());
  Constraint c;
  c.kind = kind;
  c.children = std::move(parts);
  return c;
}

}  // namespace

Constraint Constraint::All(std::vector<Constraint> parts) {
  return Junction(Kind::kAnd, std::move(parts));
}

Constraint Constraint::Any(std::vector<Constraint> parts) {
  return Junction(Kind::kOr, std::move(parts));
}

Constraint Constraint::Negate(Constraint inner) {
  Constraint c;
  c.kind = Kind::kNot;
  c.children.push_back(std::move(inner));
  return c;
}

bool TableClause::Contains(const TableInstance& t) const {
  return head == t ||
         std::find(cross_joins.begin(), cross_joins.end(), t) !=
             cross_joins.end();
}

int TableClause::NextNumber(const std::string& table) const {
  int n = head.table == table ? 1 : 0;
  for (const auto& t : cross_joins) {
    if (t.table == table) ++n;
  }
  return n;
}

namespace {

void Collect(const Value& v, std::vector<ParamSlotInfo>& out) {
  if (v.kind != Value::Kind::kParam) return;
  for (const auto& p : out) {
    if (p.name == v.param) return;
  }
  out.push_back({v.param, v.type, v.nullable_allowed});
}

void Collect(const Constraint& c, std::vector<ParamSlotInfo>& out) {
  for (const auto& v : c.values) Collect(v, out);
  for (const auto& child : c.children) Collect(child, out);
}

}  // namespace

std::vector<ParamSlotInfo> Parameters(const QueryPlan& plan) {
  std::vector<ParamSlotInfo> out;
  struct Walker {
    std::vector<ParamSlotInfo>& out;
    void operator()(const SelectPlan& p) { Collect(p.criteria, out); }
    void operator()(const InsertPlan& p) {
      for (const auto& row : p.rows) {
        for (const auto& v : row) Collect(v, out);
      }
    }
    void operator()(const UpdatePlan& p) {
      for (const auto& [col, v] : p.assignments) Collect(v, out);
      Collect(p.criteria, out);
    }
    void operator()(const DeletePlan& p) { Collect(p.criteria, out); }
  };
  std::visit(Walker{out}, plan);
  return out;
}

}  // namespace erdsql::plan
