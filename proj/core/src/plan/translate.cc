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

#include "erdsql/plan/translate.h"

#include <stdexcept>

namespace erdsql::plan {

namespace {

using analysis::NamedCondition;
using analysis::NamedValue;
using analysis::ResolvedColumn;
using CondKind = sql::Condition::Kind;

Constraint::Kind CompareKind(sql::CompareOp op) {
  switch (op) {
    case sql::CompareOp::kEq:
      return Constraint::Kind::kEqual;
    case sql::CompareOp::kNe:
      return Constraint::Kind::kNotEqual;
    case sql::CompareOp::kLt:
      return Constraint::Kind::kLess;
    case sql::CompareOp::kLe:
      return Constraint::Kind::kLessEq;
    case sql::CompareOp::kGt:
      return Constraint::Kind::kGreater;
    case sql::CompareOp::kGe:
      return Constraint::Kind::kGreaterEq;
  }
  return Constraint::Kind::kEqual;
}

class Translator {
 public:
  explicit Translator(const erd::ParserInfo& info) : info_(info) {}

  TypedColumn Column(const ResolvedColumn& c) const {
    auto type = info_.ColumnType(c.table.table, c.column);
    if (!type) {
      throw std::logic_error("untyped column " + c.table.table + "." +
                             c.column);
    }
    return {c.table, c.column, *type};
  }

  Value Val(const NamedValue& v) const {
    switch (v.kind) {
      case sql::ValueExpr::Kind::kColumn:
        return Value::Col(Column(v.column));
      case sql::ValueExpr::Kind::kLiteral: {
        SqlType type = v.type ? *v.type
                              : (v.literal.is_null() ? SqlType::kInt
                                                     : *v.literal.type());
        return Value::Const(v.literal, type);
      }
      case sql::ValueExpr::Kind::kPlaceholder:
        return Value::Param(v.placeholder, v.type.value_or(SqlType::kInt),
                            v.nullable);
    }
    return {};
  }

  Constraint Cond(const NamedCondition& c, TableClause* tables) const {
    switch (c.kind) {
      case CondKind::kCompare:
        return Constraint::Compare(CompareKind(c.op), Val(c.operands[0]),
                                   Val(c.operands[1]));
      case CondKind::kBetween:
        return Constraint::Between(Val(c.operands[0]), Val(c.operands[1]),
                                   Val(c.operands[2]));
      case CondKind::kIsNull:
        return Constraint::Null(Column(c.column), false);
      case CondKind::kIsNotNull:
        return Constraint::Null(Column(c.column), true);
      case CondKind::kSatisfies: {
        if (!tables) {
          const erd::RelationInfo* rel = info_.FindRelation(c.relationship);
          if (!rel || rel->kind == erd::RelKind::kManyToMany) {
            throw std::logic_error("many-to-many Satisfies outside Select");
          }
          TableClause scratch{c.left, {}};
          return DesugarSatisfies(c.left, c.relationship, c.right, info_,
                                  scratch);
        }
        return DesugarSatisfies(c.left, c.relationship, c.right, info_,
                                *tables);
      }
      case CondKind::kAnd: {
        std::vector<Constraint> parts;
        for (const auto& child : c.children) {
          Constraint part = Cond(child, tables);
          if (child.kind == CondKind::kSatisfies &&
              part.kind == Constraint::Kind::kAnd) {
            for (auto& p : part.children) parts.push_back(std::move(p));
          } else {
            parts.push_back(std::move(part));
          }
        }
        return Constraint::All(std::move(parts));
      }
      case CondKind::kOr: {
        std::vector<Constraint> parts;
        for (const auto& child : c.children) {
          parts.push_back(Cond(child, tables));
        }
        return Constraint::Any(std::move(parts));
      }
      case CondKind::kNot:
        return Constraint::Negate(Cond(c.children[0], tables));
    }
    return Constraint::True();
  }

  Constraint Where(const std::optional<NamedCondition>& where,
                   TableClause* tables) const {
    return where ? Cond(*where, tables) : Constraint::True();
  }

  QueryPlan operator()(const analysis::NamedSelect& s) const {
    SelectPlan p;
    p.quantifier = s.quantifier;
    for (const auto& v : s.projection) p.projection.push_back(Column(v.column));
    p.tables.head = s.from.front().instance;
    for (std::size_t i = 1; i < s.from.size(); ++i) {
      p.tables.cross_joins.push_back(s.from[i].instance);
    }
    p.criteria = Where(s.where, &p.tables);
    for (const auto& g : s.group_by) p.group_by.push_back(Column(g));
    for (const auto& o : s.order_by) {
      p.order_by.push_back({Column(o.column), o.order});
    }
    p.limit = s.limit;
    return p;
  }

  QueryPlan operator()(const analysis::NamedInsert& s) const {
    InsertPlan p;
    p.table = s.table.instance.table;
    for (const auto& c : s.columns) p.columns.push_back(Column(c));
    for (const auto& row : s.rows) {
      std::vector<Value> out;
      for (const auto& v : row) out.push_back(Val(v));
      p.rows.push_back(std::move(out));
    }
    return p;
  }

  QueryPlan operator()(const analysis::NamedUpdate& s) const {
    UpdatePlan p;
    p.table = s.table.instance.table;
    for (const auto& a : s.assignments) {
      p.assignments.emplace_back(Column(a.column), Val(a.value));
    }
    p.criteria = Where(s.where, nullptr);
    return p;
  }

  QueryPlan operator()(const analysis::NamedDelete& s) const {
    DeletePlan p;
    p.table = s.table.instance.table;
    p.criteria = Where(s.where, nullptr);
    return p;
  }

 private:
  const erd::ParserInfo& info_;
};

TypedColumn KeyOf(const TableInstance& t) {
  return {t, std::string(erd::kKeyColumn), SqlType::kInt};
}

}  // namespace

Constraint DesugarSatisfies(const TableInstance& left,
                            const std::string& relationship,
                            const TableInstance& right,
                            const erd::ParserInfo& info, TableClause& tables) {
  const erd::RelationInfo* rel = info.FindRelation(relationship);
  if (!rel) throw std::logic_error("unknown relationship " + relationship);
  switch (rel->side) {
    case erd::FkSide::kA:
      return Constraint::Compare(
          Constraint::Kind::kEqual, Value::Col(KeyOf(right)),
          Value::Col({left, rel->columns.at(0), SqlType::kInt}));
    case erd::FkSide::kB:
      return Constraint::Compare(
          Constraint::Kind::kEqual, Value::Col(KeyOf(left)),
          Value::Col({right, rel->columns.at(0), SqlType::kInt}));
    case erd::FkSide::kJoinTable: {
      TableInstance join{relationship, tables.NextNumber(relationship)};
      tables.cross_joins.push_back(join);
      std::vector<Constraint> parts;
      parts.push_back(Constraint::Compare(
          Constraint::Kind::kEqual, Value::Col(KeyOf(left)),
          Value::Col({join, rel->columns.at(0), SqlType::kInt})));
      parts.push_back(Constraint::Compare(
          Constraint::Kind::kEqual, Value::Col(KeyOf(right)),
          Value::Col({join, rel->columns.at(1), SqlType::kInt})));
      return Constraint::All(std::move(parts));
    }
  }
  return Constraint::True();
}

QueryPlan Translate(const analysis::TypedStatement& stmt,
                    const erd::ParserInfo& info) {
  return std::visit(Translator(info), stmt.statement());
}

}  // namespace erdsql::plan
