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

#ifndef ERDSQL_PLAN_PLAN_H_
#define ERDSQL_PLAN_PLAN_H_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "erdsql/analysis/named_ast.h"
#include "erdsql/sql/ast.h"
#include "erdsql/value.h"

namespace erdsql::plan {

using analysis::TableInstance;
using sql::Quantifier;
using sql::SortOrder;

struct TypedColumn {
  TableInstance table;
  std::string column;
  SqlType type = SqlType::kInt;

  friend bool operator==(const TypedColumn&, const TypedColumn&) = default;
};

// A constant, a column, or a named parameter bound at execution time.
struct Value {
  enum class Kind { kConst, kColumn, kParam };

  Kind kind = Kind::kConst;
  SqlValue constant;
  TypedColumn column;
  std::string param;
  SqlType type = SqlType::kInt;
  bool nullable_allowed = false;

  static Value Const(SqlValue v, SqlType type);
  static Value Col(TypedColumn c);
  static Value Param(std::string name, SqlType type, bool nullable_allowed);

  friend bool operator==(const Value&, const Value&) = default;
};

struct Constraint {
  enum class Kind {
    kEqual,
    kNotEqual,
    kLess,
    kLessEq,
    kGreater,
    kGreaterEq,
    kBetween,
    kIsNull,
    kIsNotNull,
    kAnd,
    kOr,
    kNot,
    kTrue,
  };

  Kind kind = Kind::kTrue;
  // Comparisons: lhs, rhs. Between: subject, low, high. IsNull: the column.
  std::vector<Value> values;
  std::vector<Constraint> children;

  static Constraint True() { return {}; }
  static Constraint Compare(Kind kind, Value lhs, Value rhs);
  static Constraint Between(Value subject, Value lo, Value hi);
  static Constraint Null(TypedColumn c, bool negated);
  static Constraint All(std::vector<Constraint> parts);
  static Constraint Any(std::vector<Constraint> parts);
  static Constraint Negate(Constraint inner);

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

// The head table followed by a chain of cross joins.
struct TableClause {
  TableInstance head;
  std::vector<TableInstance> cross_joins;

  bool Contains(const TableInstance& t) const;
  int NextNumber(const std::string& table) const;

  friend bool operator==(const TableClause&, const TableClause&) = default;
};

struct OrderColumn {
  TypedColumn column;
  SortOrder order = SortOrder::kAsc;

  friend bool operator==(const OrderColumn&, const OrderColumn&) = default;
};

struct SelectPlan {
  Quantifier quantifier = Quantifier::kAll;
  std::vector<TypedColumn> projection;
  TableClause tables;
  Constraint criteria;
  std::vector<TypedColumn> group_by;
  std::vector<OrderColumn> order_by;
  std::optional<std::int64_t> limit;

  friend bool operator==(const SelectPlan&, const SelectPlan&) = default;
};

struct InsertPlan {
  std::string table;
  std::vector<TypedColumn> columns;
  std::vector<std::vector<Value>> rows;

  friend bool operator==(const InsertPlan&, const InsertPlan&) = default;
};

struct UpdatePlan {
  std::string table;
  std::vector<std::pair<TypedColumn, Value>> assignments;
  Constraint criteria;

  friend bool operator==(const UpdatePlan&, const UpdatePlan&) = default;
};

struct DeletePlan {
  std::string table;
  Constraint criteria;

  friend bool operator==(const DeletePlan&, const DeletePlan&) = default;
};

using QueryPlan = std::variant<SelectPlan, InsertPlan, UpdatePlan, DeletePlan>;

inline bool IsQuery(const QueryPlan& p) {
  return std::holds_alternative<SelectPlan>(p);
}

// Parameters in order of first occurrence, one entry per name.
struct ParamSlotInfo {
  std::string name;
  SqlType type = SqlType::kInt;
  bool nullable_allowed = false;

  friend bool operator==(const ParamSlotInfo&, const ParamSlotInfo&) = default;
};
std::vector<ParamSlotInfo> Parameters(const QueryPlan& plan);

// Human-readable multi-line dump, stable across runs.
std::string DebugString(const QueryPlan& plan);
std::string DebugString(const Constraint& c);

}  // namespace erdsql::plan

#endif  // ERDSQL_PLAN_PLAN_H_
