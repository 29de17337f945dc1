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

#include "erdsql/db/operations.h"

namespace erdsql::db {

namespace {

using Kind = DBError::Kind;

std::string QuoteIdent(std::string_view name) {
  std::string out = "\"";
  for (char c : name) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string QuoteTable(std::string_view name) {
  std::string out = "'";
  for (char c : name) {
    if (c == '\'') out += '\'';
    out += c;
  }
  return out + "'";
}

std::string DescribeValue(const SqlValue& v) {
  if (v.is_null()) return "null";
  return std::string(TypeName(*v.type())) + " " + ToLiteral(v);
}

SqlResult<Unit> CheckRow(const Row& row, const std::vector<std::string>& cols,
                         const std::vector<SqlType>& types) {
  if (row.size() != cols.size() || types.size() != cols.size()) {
    return Fail(Kind::kConversionFailed,
                "row has " + std::to_string(row.size()) + " values for " +
                    std::to_string(cols.size()) + " columns");
  }
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (!row[i].is_null() && !row[i].HasType(types[i])) {
      return Fail(Kind::kConversionFailed,
                  "value " + DescribeValue(row[i]) + " for column '" +
                      cols[i] + "' is not a " +
                      std::string(TypeName(types[i])));
    }
  }
  return Unit{};
}

SqlResult<int> RequireKey(const std::vector<std::string>& cols,
                          const Row& row, const std::string& table) {
  int key = KeyIndex(cols);
  if (key < 0) {
    return Fail(Kind::kQueryFailed,
                "description of '" + table + "' has no Key column");
  }
  if (row[key].is_null()) {
    return Fail(Kind::kQueryFailed, "entity of '" + table + "' has no key");
  }
  return key;
}

}  // namespace

SqlResult<std::vector<Row>> SelectTyped(Connection& conn,
                                        std::string_view sql_with_holes,
                                        const std::vector<SqlValue>& values,
                                        const std::vector<SqlType>& types) {
  return conn.Query(sql_with_holes, values, types);
}

SqlResult<std::vector<SqlValue>> BindSlots(const plan::RenderedSql& sql,
                                           const Bindings& bindings) {
  std::vector<SqlValue> out;
  out.reserve(sql.slots.size());
  for (const auto& slot : sql.slots) {
    if (slot.constant) {
      out.push_back(*slot.constant);
      continue;
    }
    auto it = bindings.find(slot.name);
    if (it == bindings.end()) {
      return Fail(Kind::kConversionFailed, "missing parameter: " + slot.name);
    }
    const SqlValue& v = it->second;
    if (v.is_null()) {
      if (!slot.nullable_allowed) {
        return Fail(Kind::kConversionFailed,
                    "parameter " + slot.name + " does not allow null");
      }
    } else if (!v.HasType(slot.type)) {
      return Fail(Kind::kConversionFailed,
                  "parameter " + slot.name + " expects " +
                      std::string(TypeName(slot.type)) + " but got " +
                      DescribeValue(v));
    }
    out.push_back(v);
  }
  return out;
}

SqlResult<PlanResult> RunPlan(Connection& conn, const plan::QueryPlan& plan,
                              const Bindings& bindings) {
  plan::RenderedSql sql = plan::Render(plan);
  auto values = BindSlots(sql, bindings);
  if (!values) return MakeUnexpected(std::move(values).error());
  PlanResult result;
  if (const auto* select = std::get_if<plan::SelectPlan>(&plan)) {
    result.is_query = true;
    for (const auto& c : select->projection) {
      result.column_types.push_back(c.type);
    }
    auto rows = conn.Query(sql.sql, *values, result.column_types);
    if (!rows) return MakeUnexpected(std::move(rows).error());
    result.rows = std::move(rows).value();
    return result;
  }
  auto changed = conn.Execute(sql.sql, *values);
  if (!changed) return MakeUnexpected(std::move(changed).error());
  result.affected = *changed;
  return result;
}

namespace internal {

SqlResult<std::vector<Row>> SelectRows(
    Connection& conn, const std::string& table,
    const std::vector<std::string>& columns,
    const std::vector<SqlType>& types, plan::Quantifier quantifier,
    const plan::Constraint& criteria,
    const std::vector<plan::OrderColumn>& order_by,
    std::optional<std::int64_t> limit) {
  plan::TableInstance self{table, 0};
  std::string sql = "select ";
  if (quantifier == plan::Quantifier::kDistinct) sql += "Distinct ";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) sql += ", ";
    sql += "(" + plan::InstanceName(self) + "." + QuoteIdent(columns[i]) + ")";
  }
  sql += " from " + QuoteTable(table);
  std::vector<plan::Slot> slots;
  std::string where = plan::RenderCondition(criteria, slots);
  if (!where.empty()) sql += " where " + where;
  if (!order_by.empty()) {
    sql += " order by ";
    for (std::size_t i = 0; i < order_by.size(); ++i) {
      if (i) sql += ", ";
      sql += "(" + plan::InstanceName(order_by[i].column.table) + "." +
             QuoteIdent(order_by[i].column.column) + ")";
      sql += order_by[i].order == plan::SortOrder::kDesc ? " desc" : " asc";
    }
  }
  if (limit) sql += " limit " + std::to_string(*limit);
  sql += ";";
  std::vector<SqlValue> values;
  for (const auto& s : slots) {
    if (!s.constant) {
      return Fail(Kind::kConversionFailed,
                  "entity criteria cannot use parameter " + s.name);
    }
    values.push_back(*s.constant);
  }
  return conn.Query(sql, values, types);
}

SqlResult<std::int64_t> InsertRow(Connection& conn, const std::string& table,
                                  const std::vector<std::string>& columns,
                                  const std::vector<SqlType>& types,
                                  const Row& row) {
  auto ok = CheckRow(row, columns, types);
  if (!ok) return MakeUnexpected(std::move(ok).error());
  int key = KeyIndex(columns);
  bool auto_key = key >= 0 && row[key].is_null();
  std::string names;
  std::string holes;
  std::vector<SqlValue> values;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (auto_key && static_cast<int>(i) == key) continue;
    if (!values.empty()) {
      names += ", ";
      holes += ", ";
    }
    names += QuoteIdent(columns[i]);
    holes += "?";
    values.push_back(row[i]);
  }
  std::string sql = "insert into " + QuoteTable(table);
  sql += values.empty() ? " default values;"
                        : " (" + names + ") values (" + holes + ");";
  auto changed = conn.Execute(sql, values);
  if (!changed) return MakeUnexpected(std::move(changed).error());
  if (key >= 0 && !auto_key) return row[key].as_int();
  return conn.LastInsertRowId();
}

SqlResult<std::int64_t> UpdateRow(Connection& conn, const std::string& table,
                                  const std::vector<std::string>& columns,
                                  const std::vector<SqlType>& types,
                                  const Row& row) {
  auto ok = CheckRow(row, columns, types);
  if (!ok) return MakeUnexpected(std::move(ok).error());
  auto key = RequireKey(columns, row, table);
  if (!key) return MakeUnexpected(std::move(key).error());
  std::string sets;
  std::vector<SqlValue> values;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (static_cast<int>(i) == *key) continue;
    if (!sets.empty()) sets += ", ";
    sets += QuoteIdent(columns[i]) + " = ?";
    values.push_back(row[i]);
  }
  if (values.empty()) return std::int64_t{0};
  values.push_back(row[*key]);
  return conn.Execute("update " + QuoteTable(table) + " set " + sets +
                          " where " + QuoteIdent(erd::kKeyColumn) + " = ?;",
                      values);
}

SqlResult<std::int64_t> DeleteRow(Connection& conn, const std::string& table,
                                  const std::vector<std::string>& columns,
                                  const Row& row) {
  if (row.size() != columns.size()) {
    return Fail(Kind::kConversionFailed, "row does not match description");
  }
  auto key = RequireKey(columns, row, table);
  if (!key) return MakeUnexpected(std::move(key).error());
  return conn.Execute("delete from " + QuoteTable(table) + " where " +
                          QuoteIdent(erd::kKeyColumn) + " = ?;",
                      {row[*key]});
}

}  // namespace internal

SqlResult<Unit> Begin(Connection& conn) {
  if (conn.is_open() && conn.InTransaction()) {
    return Fail(Kind::kQueryFailed, "a transaction is already open");
  }
  return conn.ExecScript("BEGIN;");
}

SqlResult<Unit> Commit(Connection& conn) {
  if (conn.is_open() && !conn.InTransaction()) {
    return Fail(Kind::kQueryFailed, "no transaction is open");
  }
  return conn.ExecScript("COMMIT;");
}

SqlResult<Unit> Rollback(Connection& conn) {
  if (conn.is_open() && !conn.InTransaction()) {
    return Fail(Kind::kQueryFailed, "no transaction is open");
  }
  return conn.ExecScript("ROLLBACK;");
}

DBAction<std::vector<Row>> SelectAction(std::string sql,
                                        std::vector<SqlValue> values,
                                        std::vector<SqlType> types) {
  return DBAction<std::vector<Row>>(
      [sql = std::move(sql), values = std::move(values),
       types = std::move(types)](Connection& conn) {
        return SelectTyped(conn, sql, values, types);
      });
}

DBAction<PlanResult> RunPlanAction(plan::QueryPlan plan, Bindings bindings) {
  return DBAction<PlanResult>(
      [plan = std::move(plan), bindings = std::move(bindings)](
          Connection& conn) { return RunPlan(conn, plan, bindings); });
}

DBAction<Unit> BeginAction() {
  return DBAction<Unit>([](Connection& conn) { return Begin(conn); });
}

DBAction<Unit> CommitAction() {
  return DBAction<Unit>([](Connection& conn) { return Commit(conn); });
}

DBAction<Unit> RollbackAction() {
  return DBAction<Unit>([](Connection& conn) { return Rollback(conn); });
}

}  // namespace erdsql::db
