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

#include <set>

#include "erdsql/analysis/analysis.h"

namespace erdsql::analysis {

namespace {

struct ConsistencyError {
  AnalysisError error;
};

}  // namespace

class ConsistencyChecker {
 public:
  explicit ConsistencyChecker(const erd::ParserInfo& info) : info_(info) {}

  Result<CheckedStatement, AnalysisError> Run(NamedStatement stmt) {
    try {
      std::visit([this](const auto& s) { Check(s); }, stmt);
    } catch (const ConsistencyError& e) {
      return MakeUnexpected(e.error);
    }
    return CheckedStatement(std::move(stmt));
  }

 private:
  [[noreturn]] void Fail(SourcePos pos, std::string message) {
    throw ConsistencyError{{Phase::kConsistency, std::move(message), pos}};
  }

  void CheckTable(const NamedTable& t) {
    if (!info_.HasTable(t.instance.table)) {
      Fail(t.pos, "unknown table '" + t.instance.table + "'");
    }
  }

  void CheckColumn(const ResolvedColumn& c) {
    if (!info_.ColumnType(c.table.table, c.column)) {
      Fail(c.pos, "unknown column '" + c.column + "' in table '" +
                      c.table.table + "'");
    }
  }

  void CheckValue(const NamedValue& v) {
    if (v.kind == sql::ValueExpr::Kind::kColumn) CheckColumn(v.column);
  }

  void CheckConditionValue(const NamedValue& v) {
    CheckValue(v);
    if (v.kind == sql::ValueExpr::Kind::kLiteral && v.literal.is_null()) {
      Fail(v.pos,
           "null is not allowed in conditions; use 'Is Null' or "
           "'Is Not Null'");
    }
  }

  void CheckSatisfies(const NamedCondition& c, bool under_or) {
    const erd::RelationInfo* rel = info_.FindRelation(c.relationship);
    if (!rel) {
      Fail(c.relationship_pos, "unknown relationship '" + c.relationship + "'");
    }
    if (c.left.table != rel->entity_a || c.right.table != rel->entity_b) {
      Fail(c.relationship_pos,
           "relationship '" + c.relationship + "' relates " + rel->entity_a +
               " to " + rel->entity_b + ", not " + c.left.table + " to " +
               c.right.table);
    }
    if (!in_select_ && rel->kind == erd::RelKind::kManyToMany) {
      Fail(c.pos, "Satisfies over many-to-many relationship '" +
                      c.relationship + "' is only supported in Select");
    }
    if (under_or && rel->kind == erd::RelKind::kManyToMany) {
      Fail(c.pos, "Satisfies over many-to-many relationship '" +
                      c.relationship + "' cannot appear under 'Or'");
    }
  }

  void CheckCondition(const NamedCondition& c, bool under_or) {
    switch (c.kind) {
      case sql::Condition::Kind::kCompare:
      case sql::Condition::Kind::kBetween:
        for (const auto& v : c.operands) CheckConditionValue(v);
        break;
      case sql::Condition::Kind::kIsNull:
      case sql::Condition::Kind::kIsNotNull:
        CheckColumn(c.column);
        break;
      case sql::Condition::Kind::kSatisfies:
        CheckSatisfies(c, under_or);
        break;
      case sql::Condition::Kind::kAnd:
        for (const auto& child : c.children) CheckCondition(child, under_or);
        break;
      case sql::Condition::Kind::kOr:
        for (const auto& child : c.children) CheckCondition(child, true);
        break;
      case sql::Condition::Kind::kNot:
        if (ContainsSatisfies(c.children[0])) {
          Fail(c.pos, "Satisfies cannot appear under 'Not'");
        }
        CheckCondition(c.children[0], under_or);
        break;
    }
  }

  static bool ContainsSatisfies(const NamedCondition& c) {
    if (c.kind == sql::Condition::Kind::kSatisfies) return true;
    for (const auto& child : c.children) {
      if (ContainsSatisfies(child)) return true;
    }
    return false;
  }

  void CheckWhere(const std::optional<NamedCondition>& where) {
    if (where) CheckCondition(*where, false);
  }

  void CheckStoredValue(const ResolvedColumn& target, const NamedValue& v) {
    CheckValue(v);
    if (v.kind == sql::ValueExpr::Kind::kLiteral && v.literal.is_null() &&
        !info_.IsNullable(target.table.table, target.column)) {
      Fail(v.pos, "null value for column '" + target.column +
                      "' which is declared NOT NULL in '" +
                      target.table.table + "'");
    }
  }

  void Check(const NamedSelect& s) {
    in_select_ = true;
    for (const auto& t : s.from) CheckTable(t);
    for (const auto& v : s.projection) CheckValue(v);
    CheckWhere(s.where);
    for (const auto& g : s.group_by) CheckColumn(g);
    for (const auto& o : s.order_by) CheckColumn(o.column);
  }

  void Check(const NamedInsert& s) {
    CheckTable(s.table);
    std::set<std::string> seen;
    for (const auto& c : s.columns) {
      CheckColumn(c);
      if (!seen.insert(c.column).second) {
        Fail(c.pos, "column '" + c.column + "' is listed more than once");
      }
    }
    for (const auto& col : *info_.Columns(s.table.instance.table)) {
      if (col == erd::kKeyColumn || seen.count(col) ||
          info_.IsNullable(s.table.instance.table, col)) {
        continue;
      }
      Fail(s.table.pos, "Insert into '" + s.table.instance.table +
                            "' must provide NOT NULL column '" + col + "'");
    }
    for (const auto& row : s.rows) {
      if (row.size() != s.columns.size()) {
        Fail(row.empty() ? s.pos : row.front().pos,
             "row has " + std::to_string(row.size()) + " values but " +
                 std::to_string(s.columns.size()) + " columns are listed");
      }
      for (std::size_t i = 0; i < row.size(); ++i) {
        CheckStoredValue(s.columns[i], row[i]);
      }
    }
  }

  void Check(const NamedUpdate& s) {
    CheckTable(s.table);
    std::set<std::string> seen;
    for (const auto& a : s.assignments) {
      CheckColumn(a.column);
      if (!seen.insert(a.column.column).second) {
        Fail(a.column.pos,
             "column '" + a.column.column + "' is assigned more than once");
      }
      CheckStoredValue(a.column, a.value);
    }
    CheckWhere(s.where);
  }

  void Check(const NamedDelete& s) {
    CheckTable(s.table);
    CheckWhere(s.where);
  }

  const erd::ParserInfo& info_;
  bool in_select_ = false;
};

Result<CheckedStatement, AnalysisError> CheckConsistency(
    NamedStatement stmt, const erd::ParserInfo& info) {
  return ConsistencyChecker(info).Run(std::move(stmt));
}

}  // namespace erdsql::analysis
