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

#ifndef ERDSQL_DB_OPERATIONS_H_
#define ERDSQL_DB_OPERATIONS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "erdsql/db/action.h"
#include "erdsql/db/entity.h"
#include "erdsql/plan/plan.h"
#include "erdsql/plan/render.h"

namespace erdsql::db {

using Bindings = std::map<std::string, SqlValue, std::less<>>;

// Raw query with positional holes. Fails with QueryFailed before executing
// when the hole count differs from `values.size()`.
SqlResult<std::vector<Row>> SelectTyped(Connection& conn,
                                        std::string_view sql_with_holes,
                                        const std::vector<SqlValue>& values,
                                        const std::vector<SqlType>& types);

// Values for every slot of `sql`, in slot order. A missing parameter, a
// null for a slot that does not allow it, or a wrongly tagged value is a
// ConversionFailed error.
SqlResult<std::vector<SqlValue>> BindSlots(const plan::RenderedSql& sql,
                                           const Bindings& bindings);

struct PlanResult {
  bool is_query = false;
  std::vector<SqlType> column_types;
  std::vector<Row> rows;
  // Changed rows for Insert, Update and Delete.
  std::int64_t affected = 0;
};

// Validates the bindings, then renders and executes the plan.
SqlResult<PlanResult> RunPlan(Connection& conn, const plan::QueryPlan& plan,
                              const Bindings& bindings);

// Criteria, order and limit refer to instance 0 of the entity's table and
// may only contain constants.
template <typename T>
SqlResult<std::vector<T>> GetEntries(
    Connection& conn, const EntityDescription<T>& desc,
    plan::Quantifier quantifier, const plan::Constraint& criteria,
    const std::vector<plan::OrderColumn>& order_by = {},
    std::optional<std::int64_t> limit = std::nullopt);

// Inserts one entity. A null key lets the database assign one; the stored
// key is returned.
template <typename T>
SqlResult<std::int64_t> InsertEntity(Connection& conn,
                                     const EntityDescription<T>& desc,
                                     const T& entity);

// Rewrites all non-key columns of the row with the entity's key.
template <typename T>
SqlResult<std::int64_t> UpdateEntity(Connection& conn,
                                     const EntityDescription<T>& desc,
                                     const T& entity);

// Zero affected rows is not an error.
template <typename T>
SqlResult<std::int64_t> DeleteEntity(Connection& conn,
                                     const EntityDescription<T>& desc,
                                     const T& entity);

SqlResult<Unit> Begin(Connection& conn);
SqlResult<Unit> Commit(Connection& conn);
SqlResult<Unit> Rollback(Connection& conn);

// Action forms of the operations above.
DBAction<std::vector<Row>> SelectAction(std::string sql,
                                        std::vector<SqlValue> values,
                                        std::vector<SqlType> types);
DBAction<PlanResult> RunPlanAction(plan::QueryPlan plan, Bindings bindings);
DBAction<Unit> BeginAction();
DBAction<Unit> CommitAction();
DBAction<Unit> RollbackAction();

// Runs `action` inside a transaction that is committed on success and
// rolled back on failure.
template <typename T>
DBAction<T> Transactionally(DBAction<T> action) {
  return DBAction<T>([action](Connection& conn) -> SqlResult<T> {
    auto begun = Begin(conn);
    if (!begun) return MakeUnexpected(std::move(begun).error());
    auto r = action(conn);
    if (!r) {
      Rollback(conn);
      return r;
    }
    auto committed = Commit(conn);
    if (!committed) return MakeUnexpected(std::move(committed).error());
    return r;
  });
}

namespace internal {

// Untyped cores of the entity operations.
SqlResult<std::vector<Row>> SelectRows(
    Connection& conn, const std::string& table,
    const std::vector<std::string>& columns,
    const std::vector<SqlType>& types, plan::Quantifier quantifier,
    const plan::Constraint& criteria,
    const std::vector<plan::OrderColumn>& order_by,
    std::optional<std::int64_t> limit);
SqlResult<std::int64_t> InsertRow(Connection& conn, const std::string& table,
                                  const std::vector<std::string>& columns,
                                  const std::vector<SqlType>& types,
                                  const Row& row);
SqlResult<std::int64_t> UpdateRow(Connection& conn, const std::string& table,
                                  const std::vector<std::string>& columns,
                                  const std::vector<SqlType>& types,
                                  const Row& row);
SqlResult<std::int64_t> DeleteRow(Connection& conn, const std::string& table,
                                  const std::vector<std::string>& columns,
                                  const Row& row);

}  // namespace internal

template <typename T>
SqlResult<std::vector<T>> GetEntries(
    Connection& conn, const EntityDescription<T>& desc,
    plan::Quantifier quantifier, const plan::Constraint& criteria,
    const std::vector<plan::OrderColumn>& order_by,
    std::optional<std::int64_t> limit) {
  auto rows = internal::SelectRows(conn, desc.entity_name, desc.column_names,
                                   desc.column_types, quantifier, criteria,
                                   order_by, limit);
  if (!rows) return MakeUnexpected(std::move(rows).error());
  std::vector<T> out;
  out.reserve(rows->size());
  for (const auto& row : *rows) out.push_back(desc.from_row(row));
  return out;
}

template <typename T>
SqlResult<std::int64_t> InsertEntity(Connection& conn,
                                     const EntityDescription<T>& desc,
                                     const T& entity) {
  return internal::InsertRow(conn, desc.entity_name, desc.column_names,
                             desc.column_types, desc.to_row(entity));
}

template <typename T>
SqlResult<std::int64_t> UpdateEntity(Connection& conn,
                                     const EntityDescription<T>& desc,
                                     const T& entity) {
  return internal::UpdateRow(conn, desc.entity_name, desc.column_names,
                             desc.column_types, desc.to_row(entity));
}

template <typename T>
SqlResult<std::int64_t> DeleteEntity(Connection& conn,
                                     const EntityDescription<T>& desc,
                                     const T& entity) {
  return internal::DeleteRow(conn, desc.entity_name, desc.column_names,
                             desc.to_row(entity));
}

}  // namespace erdsql::db

#endif  // ERDSQL_DB_OPERATIONS_H_
