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

#include "support/dataset.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "erdsql/erd/schema.h"

namespace erdsql::testing {

namespace {

int Uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::string Quoted(const std::string& name) { return "\"" + name + "\""; }

}  // namespace

SqlValue RandomValue(SqlType type, std::mt19937& rng) {
  static const char* kWords[] = {"Ann", "Bob", "Eve", "Joe", "Kim", "it's"};
  switch (type) {
    case SqlType::kString:
      return SqlValue::String(kWords[Uniform(rng, 0, 5)]);
    case SqlType::kInt:
      return SqlValue::Int(Uniform(rng, -2, 6));
    case SqlType::kFloat:
      return SqlValue::Float(Uniform(rng, -2, 8) * 0.5);
    case SqlType::kChar:
      return SqlValue::Char(U'a' + Uniform(rng, 0, 4));
    case SqlType::kBool:
      return SqlValue::Bool(Uniform(rng, 0, 1) == 1);
    case SqlType::kDate:
      return SqlValue::FromDate(Date{86400LL * Uniform(rng, 0, 5)});
  }
  return SqlValue::Null();
}

namespace {

// Distinct values for unique columns; `n` is at most 20.
std::vector<SqlValue> DistinctValues(SqlType type, int n, std::mt19937& rng) {
  std::vector<int> ids(20);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<SqlValue> out;
  for (int i = 0; i < n; ++i) {
    int k = ids[i];
    switch (type) {
      case SqlType::kString:
        out.push_back(SqlValue::String("u" + std::to_string(k)));
        break;
      case SqlType::kInt:
        out.push_back(SqlValue::Int(k));
        break;
      case SqlType::kFloat:
        out.push_back(SqlValue::Float(k * 0.5));
        break;
      case SqlType::kChar:
        out.push_back(SqlValue::Char(U'a' + k));
        break;
      case SqlType::kBool:
        out.push_back(SqlValue::Bool(k % 2 == 1));
        break;
      case SqlType::kDate:
        out.push_back(SqlValue::FromDate(Date{86400LL * k}));
        break;
    }
  }
  return out;
}

// Largest row count a unique column of `type` can hold.
int UniqueCapacity(SqlType type) { return type == SqlType::kBool ? 2 : 20; }

}  // namespace

Dataset RandomDataset(const erd::ParserInfo& info,
                      const erd::RelationalSchema& schema, std::mt19937& rng,
                      int max_rows) {
  std::map<std::string, int> count;
  for (const auto& t : schema.tables) count[t.name] = Uniform(rng, 0, max_rows);

  auto is_unique_single = [](const erd::ColumnDef& c) { return c.unique; };
  // Shrink counts until every NOT NULL or unique column can be filled.
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& t : schema.tables) {
      int& n = count[t.name];
      for (const auto& c : t.columns) {
        if (c.primary_key) continue;
        int cap = n;
        if (c.references) {
          int target = count[c.references->table];
          if (c.not_null && target == 0) cap = 0;
          if (is_unique_single(c) && c.not_null) cap = std::min(cap, target);
        } else if (is_unique_single(c) && c.not_null) {
          cap = std::min(cap, UniqueCapacity(c.type));
        }
        if (cap < n) {
          n = cap;
          changed = true;
        }
      }
      // Join tables: the (a, b) pair is unique.
      for (const auto& group : t.unique_groups) {
        int pairs = 1;
        for (const auto& col : group) {
          const erd::ColumnDef* c = t.FindColumn(col);
          pairs *= c && c->references ? count[c->references->table] : 20;
        }
        if (pairs < n) {
          n = pairs;
          changed = true;
        }
      }
    }
  }

  Dataset data;
  for (const auto& t : schema.tables) {
    int n = count[t.name];
    std::vector<db::Row> rows(n);
    for (int r = 0; r < n; ++r) rows[r].push_back(SqlValue::Int(r + 1));
    for (const auto& c : t.columns) {
      if (c.primary_key) continue;
      std::vector<SqlValue> values;
      if (c.references) {
        int target = count[c.references->table];
        std::vector<int> keys(target);
        std::iota(keys.begin(), keys.end(), 1);
        std::shuffle(keys.begin(), keys.end(), rng);
        for (int r = 0; r < n; ++r) {
          bool null = target == 0 || (!c.not_null && Uniform(rng, 0, 3) == 0);
          if (c.unique && r >= target) null = true;
          if (null) {
            values.push_back(SqlValue::Null());
          } else if (c.unique) {
            values.push_back(SqlValue::Int(keys[r]));
          } else {
            values.push_back(SqlValue::Int(Uniform(rng, 1, target)));
          }
        }
      } else if (c.unique) {
        int cap = UniqueCapacity(c.type);
        values = DistinctValues(c.type, std::min(n, cap), rng);
        for (int r = cap; r < n; ++r) values.push_back(SqlValue::Null());
        std::shuffle(values.begin(), values.end(), rng);
        if (!c.not_null) {
          for (auto& v : values) {
            if (Uniform(rng, 0, 3) == 0) v = SqlValue::Null();
          }
        }
      } else {
        for (int r = 0; r < n; ++r) {
          bool null = !c.not_null && Uniform(rng, 0, 3) == 0;
          values.push_back(null ? SqlValue::Null() : RandomValue(c.type, rng));
        }
      }
      for (int r = 0; r < n; ++r) rows[r].push_back(values[r]);
    }
    // Enforce unique groups by dropping duplicate rows, then renumber.
    for (const auto& group : t.unique_groups) {
      std::vector<std::size_t> idx;
      for (const auto& col : group) {
        auto it = std::find_if(t.columns.begin(), t.columns.end(),
                               [&](const auto& c) { return c.name == col; });
        idx.push_back(it - t.columns.begin());
      }
      std::set<std::vector<SqlValue>> seen;
      std::vector<db::Row> kept;
      for (auto& row : rows) {
        std::vector<SqlValue> k;
        for (auto i : idx) k.push_back(row[i]);
        if (seen.insert(k).second) kept.push_back(std::move(row));
      }
      rows = std::move(kept);
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      rows[r][0] = SqlValue::Int(static_cast<std::int64_t>(r + 1));
    }
    data[t.name] = std::move(rows);
  }
  // Dropping join-table rows never breaks references since nothing refers
  // to join tables; entity tables are never shortened above.
  (void)info;
  return data;
}

void LoadDataset(db::Connection& conn, const erd::ParserInfo& info,
                 const Dataset& data) {
  auto check = [](const auto& r) {
    if (!r) throw std::runtime_error(db::ToString(r.error()));
  };
  check(conn.ExecScript("PRAGMA defer_foreign_keys = ON; BEGIN;"));
  for (const auto& [table, rows] : data) {
    const auto* cols = info.Columns(table);
    if (!cols) throw std::runtime_error("unknown table " + table);
    std::string sql = "INSERT INTO " + Quoted(table) + " (";
    std::string holes;
    for (std::size_t i = 0; i < cols->size(); ++i) {
      sql += (i ? ", " : "") + Quoted((*cols)[i]);
      holes += i ? ", ?" : "?";
    }
    sql += ") VALUES (" + holes + ")";
    for (const auto& row : rows) check(conn.Execute(sql, row));
  }
  check(conn.ExecScript("COMMIT;"));
}

std::map<std::string, std::int64_t> RowCounts(db::Connection& conn,
                                              const erd::ParserInfo& info) {
  std::map<std::string, std::int64_t> out;
  for (const auto& [table, cols] : info.attribute_lists) {
    auto rows = conn.Query("SELECT count(*) FROM " + Quoted(table), {},
                           {SqlType::kInt});
    if (!rows) throw std::runtime_error(db::ToString(rows.error()));
    out[table] = (*rows)[0][0].as_int();
  }
  return out;
}

}  // namespace erdsql::testing
