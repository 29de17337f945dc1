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

#include "erdsql/sql/ast.h"

namespace erdsql::sql {

std::string_view CompareOpSpelling(CompareOp op) {
  switch (op) {
    case CompareOp::kEq:
      return "=";
    case CompareOp::kNe:
      return "<>";
    case CompareOp::kLt:
      return "<";
    case CompareOp::kLe:
      return "<=";
    case CompareOp::kGt:
      return ">";
    case CompareOp::kGe:
      return ">=";
  }
  return "?";
}

std::optional<CompareOp> ParseCompareOp(std::string_view spelling) {
  for (CompareOp op : {CompareOp::kEq, CompareOp::kNe, CompareOp::kLt,
                       CompareOp::kLe, CompareOp::kGt, CompareOp::kGe}) {
    if (CompareOpSpelling(op) == spelling) return op;
  }
  return std::nullopt;
}

ValueExpr ValueExpr::Column(ColumnRef c) {
  ValueExpr v;
  v.kind = Kind::kColumn;
  v.pos = c.pos;
  v.column = std::move(c);
  return v;
}

ValueExpr ValueExpr::Literal(SqlValue value, SourcePos pos) {
  ValueExpr v;
  v.kind = Kind::kLiteral;
  v.literal = std::move(value);
  v.pos = pos;
  return v;
}

ValueExpr ValueExpr::Placeholder(std::string name, SourcePos pos) {
  ValueExpr v;
  v.kind = Kind::kPlaceholder;
  v.placeholder = std::move(name);
  v.pos = pos;
  return v;
}

Condition Condition::Compare(CompareOp op, ValueExpr lhs, ValueExpr rhs) {
  Condition c;
  c.kind = Kind::kCompare;
  c.op = op;
  c.pos = lhs.pos;
  c.operands = {std::move(lhs), std::move(rhs)};
  return c;
}

Condition Condition::Between(ValueExpr subject, ValueExpr lo, ValueExpr hi) {
  Condition c;
  c.kind = Kind::kBetween;
  c.pos = subject.pos;
  c.operands = {std::move(subject), std::move(lo), std::move(hi)};
  return c;
}

Condition Condition::IsNull(ColumnRef column, bool negated) {
  Condition c;
  c.kind = negated ? Kind::kIsNotNull : Kind::kIsNull;
  c.pos = column.pos;
  c.column = std::move(column);
  return c;
}

Condition Condition::Satisfies(std::string left, std::string relationship,
                               std::string right, SourcePos pos) {
  Condition c;
  c.kind = Kind::kSatisfies;
  c.left = std::move(left);
  c.relationship = std::move(relationship);
  c.right = std::move(right);
  c.pos = pos;
  return c;
}

Condition Condition::Junction(Kind kind, std::vector<Condition> children) {
  Condition c;
  c.kind = kind;
  if (!children.empty()) c.pos = children.front().pos;
  c.children = std::move(children);
  return c;
}

Condition Condition::Negate(Condition inner, SourcePos pos) {
  Condition c;
  c.kind = Kind::kNot;
  c.pos = pos;
  c.children.push_back(std::move(inner));
  return c;
}

SourcePos StatementPos(const Statement& stmt) {
  return std::visit([](const auto& s) { return s.pos; }, stmt);
}

namespace {

constexpr SourcePos kOrigin{1, 1};

void Strip(ColumnRef& c) { c.pos = kOrigin; }

void Strip(ValueExpr& v) {
  v.pos = kOrigin;
  Strip(v.column);
}

void Strip(TableRef& t) {
  t.pos = kOrigin;
  t.alias_pos = kOrigin;
}

void Strip(Condition& c) {
  c.pos = c.left_pos = c.relationship_pos = c.right_pos = kOrigin;
  Strip(c.column);
  for (auto& v : c.operands) Strip(v);
  for (auto& child : c.children) Strip(child);
}

void Strip(std::optional<Condition>& c) {
  if (c) Strip(*c);
}

}  // namespace

void StripPositions(Statement& stmt) {
  std::visit(
      [](auto& s) {
        using T = std::decay_t<decltype(s)>;
        s.pos = kOrigin;
        if constexpr (std::is_same_v<T, SelectStmt>) {
          for (auto& item : s.projection) {
            item.pos = kOrigin;
            Strip(item.column);
          }
          for (auto& t : s.from) Strip(t);
          Strip(s.where);
          for (auto& g : s.group_by) Strip(g);
          for (auto& o : s.order_by) Strip(o.column);
        } else if constexpr (std::is_same_v<T, InsertStmt>) {
          Strip(s.table);
          for (auto& c : s.columns) Strip(c);
          for (auto& row : s.rows) {
            for (auto& v : row) Strip(v);
          }
        } else if constexpr (std::is_same_v<T, UpdateStmt>) {
          Strip(s.table);
          for (auto& a : s.assignments) {
            Strip(a.column);
            Strip(a.value);
          }
          Strip(s.where);
        } else {
          Strip(s.table);
          Strip(s.where);
        }
      },
      stmt);
}

}  // namespace erdsql::sql
