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

#ifndef ERDSQL_ANALYSIS_NAMED_AST_H_
#define ERDSQL_ANALYSIS_NAMED_AST_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "erdsql/diagnostic.h"
#include "erdsql/sql/ast.h"
#include "erdsql/value.h"

namespace erdsql::analysis {

// One occurrence of a table in a statement. Repeated references to the same
// table are numbered densely from 0 in order of appearance.
struct TableInstance {
  std::string table;
  int number = 0;

  friend auto operator<=>(const TableInstance&, const TableInstance&) = default;
};

// "Student#0"
std::string ToString(const TableInstance& t);

struct ResolvedColumn {
  TableInstance table;
  std::string column;
  SourcePos pos;

  friend bool operator==(const ResolvedColumn&, const ResolvedColumn&) = default;
};

struct NamedValue {
  sql::ValueExpr::Kind kind = sql::ValueExpr::Kind::kLiteral;
  ResolvedColumn column;
  SqlValue literal;
  std::string placeholder;
  SourcePos pos;

  // Set by the typer. For columns `nullable` mirrors the declaration; for
  // placeholders it says whether null may be bound.
  std::optional<SqlType> type;
  bool nullable = false;

  friend bool operator==(const NamedValue&, const NamedValue&) = default;
};

struct NamedCondition {
  sql::Condition::Kind kind = sql::Condition::Kind::kCompare;
  sql::CompareOp op = sql::CompareOp::kEq;
  std::vector<NamedValue> operands;
  ResolvedColumn column;
  TableInstance left;
  std::string relationship;
  TableInstance right;
  SourcePos relationship_pos;
  std::vector<NamedCondition> children;
  SourcePos pos;

  friend bool operator==(const NamedCondition&, const NamedCondition&) = default;
};

struct NamedTable {
  TableInstance instance;
  SourcePos pos;

  friend bool operator==(const NamedTable&, const NamedTable&) = default;
};

struct NamedOrder {
  ResolvedColumn column;
  sql::SortOrder order = sql::SortOrder::kAsc;

  friend bool operator==(const NamedOrder&, const NamedOrder&) = default;
};

struct NamedSelect {
  sql::Quantifier quantifier = sql::Quantifier::kAll;
  // Column values only; `*` is expanded.
  std::vector<NamedValue> projection;
  std::vector<NamedTable> from;
  std::optional<NamedCondition> where;
  std::vector<ResolvedColumn> group_by;
  std::vector<NamedOrder> order_by;
  std::optional<std::int64_t> limit;
  SourcePos pos;

  friend bool operator==(const NamedSelect&, const NamedSelect&) = default;
};

struct NamedInsert {
  NamedTable table;
  std::vector<ResolvedColumn> columns;
  std::vector<std::vector<NamedValue>> rows;
  SourcePos pos;

  friend bool operator==(const NamedInsert&, const NamedInsert&) = default;
};

struct NamedAssignment {
  ResolvedColumn column;
  NamedValue value;

  friend bool operator==(const NamedAssignment&, const NamedAssignment&) = default;
};

struct NamedUpdate {
  NamedTable table;
  std::vector<NamedAssignment> assignments;
  std::optional<NamedCondition> where;
  SourcePos pos;

  friend bool operator==(const NamedUpdate&, const NamedUpdate&) = default;
};

struct NamedDelete {
  NamedTable table;
  std::optional<NamedCondition> where;
  SourcePos pos;

  friend bool operator==(const NamedDelete&, const NamedDelete&) = default;
};

using NamedStatement =
    std::variant<NamedSelect, NamedInsert, NamedUpdate, NamedDelete>;

enum class Phase { kSyntax, kNamer, kConsistency, kTyper };

// "syntax", "namer", "consistency", "typer"
std::string_view PhaseName(Phase phase);

struct AnalysisError {
  Phase phase = Phase::kSyntax;
  std::string message;
  SourcePos pos;

  friend bool operator==(const AnalysisError&, const AnalysisError&) = default;
};

// "<source>:<line>:<column>: <phase> error: <message>"
std::string FormatError(const AnalysisError& e, std::string_view source);

// Statement that passed the consistency phase. Only CheckConsistency
// constructs these.
class CheckedStatement {
 public:
  const NamedStatement& statement() const { return stmt_; }

 private:
  friend class ConsistencyChecker;
  explicit CheckedStatement(NamedStatement stmt) : stmt_(std::move(stmt)) {}

  NamedStatement stmt_;
};

struct PlaceholderInfo {
  std::string name;
  SqlType type = SqlType::kInt;
  bool nullable_allowed = false;
  SourcePos first_use;

  friend bool operator==(const PlaceholderInfo&, const PlaceholderInfo&) = default;
};

// Statement with every value typed. Only InferTypes constructs these.
class TypedStatement {
 public:
  const NamedStatement& statement() const { return stmt_; }
  // In order of first use.
  const std::vector<PlaceholderInfo>& placeholders() const {
    return placeholders_;
  }
  const PlaceholderInfo* FindPlaceholder(std::string_view name) const;

 private:
  friend class Typer;
  TypedStatement(NamedStatement stmt, std::vector<PlaceholderInfo> ph)
      : stmt_(std::move(stmt)), placeholders_(std::move(ph)) {}

  NamedStatement stmt_;
  std::vector<PlaceholderInfo> placeholders_;
};

}  // namespace erdsql::analysis

#endif  // ERDSQL_ANALYSIS_NAMED_AST_H_
