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

#ifndef ERDSQL_TESTS_SUPPORT_RANDOM_QUERY_H_
#define ERDSQL_TESTS_SUPPORT_RANDOM_QUERY_H_

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "erdsql/db/operations.h"
#include "erdsql/erd/parser_info.h"
#include "support/dataset.h"

namespace erdsql::testing {

// A SELECT statement described independently of the compiler's AST. The
// generator prints it as dialect text and the oracle evaluates it directly.
struct QTable {
  std::string table;
  std::string alias;
};

struct QColumn {
  int source = 0;  // index into QSelect::from
  std::string column;
  SqlType type = SqlType::kInt;
  bool nullable = false;
};

struct QOperand {
  enum class Kind { kColumn, kConst, kParam };
  Kind kind = Kind::kConst;
  QColumn column;
  SqlValue value;
  std::string param;
};

struct QCond {
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
  std::string op;  // "=", "<>", "<", "<=", ">", ">="
  std::vector<QOperand> operands;
  QColumn column;
  int left = 0;
  int right = 0;
  std::string relationship;
  std::vector<QCond> children;
};

struct QOrder {
  QColumn column;
  bool desc = false;
};

struct QSelect {
  bool distinct = false;
  std::vector<QTable> from;
  std::vector<QColumn> projection;
  std::optional<QCond> where;
  std::vector<QOrder> order_by;
  std::optional<std::int64_t> limit;
  db::Bindings bindings;
};

std::string ToSql(const QSelect& q);

// Feature tally used to prove coverage of generated workloads.
struct QueryFeatures {
  int satisfies_one_to_many = 0;
  int satisfies_one_to_one = 0;
  int satisfies_many_to_many = 0;
  int between = 0;
  int distinct = 0;
  int order_by = 0;
  int limit = 0;
  int params = 0;
  int null_tests = 0;
  int self_joins = 0;
};

QSelect RandomSelect(const erd::ParserInfo& info, std::mt19937& rng,
                     QueryFeatures* features = nullptr);

// Result rows as SQLite would produce them. For queries without Order By
// the order is unspecified.
std::vector<db::Row> Evaluate(const QSelect& q, const erd::ParserInfo& info,
                              const Dataset& data);

// Compares as sequences when `q` has Order By, as multisets otherwise.
bool SameResult(const QSelect& q, std::vector<db::Row> actual,
                std::vector<db::Row> expected);

std::string FormatRows(const std::vector<db::Row>& rows);

}  // namespace erdsql::testing

#endif  // ERDSQL_TESTS_SUPPORT_RANDOM_QUERY_H_
