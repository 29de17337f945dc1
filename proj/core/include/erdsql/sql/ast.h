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

#ifndef ERDSQL_SQL_AST_H_
#define ERDSQL_SQL_AST_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "erdsql/diagnostic.h"
#include "erdsql/value.h"

namespace erdsql::sql {

enum class CompareOp { kEq, kNe, kLt, kLe, kGt, kGe };

// "=", "<>", "<", "<=", ">", ">="
std::string_view CompareOpSpelling(CompareOp op);
std::optional<CompareOp> ParseCompareOp(std::string_view spelling);

enum class Quantifier { kAll, kDistinct };
enum class SortOrder { kAsc, kDesc };

// `column` or `qualifier.column`; the qualifier is an alias or table name.
struct ColumnRef {
  std::string qualifier;
  std::string column;
  SourcePos pos;

  friend bool operator==(const ColumnRef&, const ColumnRef&) = default;
};

struct ValueExpr {
  enum class Kind { kColumn, kLiteral, kPlaceholder };

  Kind kind = Kind::kLiteral;
  ColumnRef column;
  SqlValue literal;
  std::string placeholder;
  SourcePos pos;

  static ValueExpr Column(ColumnRef c);
  static ValueExpr Literal(SqlValue v, SourcePos pos);
  static ValueExpr Placeholder(std::string name, SourcePos pos);

  friend bool operator==(const ValueExpr&, const ValueExpr&) = default;
};

struct Condition {
  enum class Kind {
    kCompare,
    kBetween,
    kIsNull,
    kIsNotNull,
    kSatisfies,
    kAnd,
    kOr,
    kNot,
  };

  Kind kind = Kind::kCompare;
  CompareOp op = CompareOp::kEq;
  // kCompare: lhs, rhs. kBetween: subject, low, high.
  std::vector<ValueExpr> operands;
  // kIsNull / kIsNotNull.
  ColumnRef column;
  // kSatisfies: `left relationship right`.
  std::string left;
  std::string relationship;
  std::string right;
  SourcePos left_pos;
  SourcePos relationship_pos;
  SourcePos right_pos;
  // kAnd / kOr: two or more; kNot: exactly one.
  std::vector<Condition> children;
  SourcePos pos;

  static Condition Compare(CompareOp op, ValueExpr lhs, ValueExpr rhs);
  static Condition Between(ValueExpr subject, ValueExpr lo, ValueExpr hi);
  static Condition IsNull(ColumnRef c, bool negated);
  static Condition Satisfies(std::string left, std::string relationship,
                             std::string right, SourcePos pos);
  static Condition Junction(Kind kind, std::vector<Condition> children);
  static Condition Negate(Condition inner, SourcePos pos);

  friend bool operator==(const Condition&, const Condition&) = default;
};

struct TableRef {
  std::string table;
  std::string alias;  // empty when absent
  SourcePos pos;
  SourcePos alias_pos;

  friend bool operator==(const TableRef&, const TableRef&) = default;
};

struct SelectItem {
  bool star = false;
  ColumnRef column;
  SourcePos pos;

  friend bool operator==(const SelectItem&, const SelectItem&) = default;
};

struct OrderTerm {
  ColumnRef column;
  SortOrder order = SortOrder::kAsc;

  friend bool operator==(const OrderTerm&, const OrderTerm&) = default;
};

struct SelectStmt {
  Quantifier quantifier = Quantifier::kAll;
  std::vector<SelectItem> projection;
  std::vector<TableRef> from;
  std::optional<Condition> where;
  std::vector<ColumnRef> group_by;
  std::vector<OrderTerm> order_by;
  std::optional<std::int64_t> limit;
  SourcePos pos;

  friend bool operator==(const SelectStmt&, const SelectStmt&) = default;
};

struct InsertStmt {
  TableRef table;
  std::vector<ColumnRef> columns;
  std::vector<std::vector<ValueExpr>> rows;
  SourcePos pos;

  friend bool operator==(const InsertStmt&, const InsertStmt&) = default;
};

struct Assignment {
  ColumnRef column;
  ValueExpr value;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct UpdateStmt {
  TableRef table;
  std::vector<Assignment> assignments;
  std::optional<Condition> where;
  SourcePos pos;

  friend bool operator==(const UpdateStmt&, const UpdateStmt&) = default;
};

struct DeleteStmt {
  TableRef table;
  std::optional<Condition> where;
  SourcePos pos;

  friend bool operator==(const DeleteStmt&, const DeleteStmt&) = default;
};

using Statement = std::variant<SelectStmt, InsertStmt, UpdateStmt, DeleteStmt>;

SourcePos StatementPos(const Statement& stmt);

// Resets every position to 1:1 so that trees parsed from differently laid
// out text compare equal.
void StripPositions(Statement& stmt);

}  // namespace erdsql::sql

#endif  // ERDSQL_SQL_AST_H_
