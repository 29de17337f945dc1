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

#include <algorithm>
#include <map>

#include "erdsql/analysis/analysis.h"

namespace erdsql::analysis {

namespace {

struct NamerError {
  AnalysisError error;
};

struct Scope {
  struct Entry {
    sql::TableRef ref;
    TableInstance instance;
    bool used = false;
  };
  std::vector<Entry> entries;
};

class Namer {
 public:
  explicit Namer(const erd::ParserInfo& info) : info_(info) {}

  NamedStatement Run(const sql::Statement& stmt) {
    return std::visit([this](const auto& s) { return Name(s); }, stmt);
  }

 private:
  [[noreturn]] void Fail(SourcePos pos, std::string message) {
    throw NamerError{{Phase::kNamer, std::move(message), pos}};
  }

  void Bind(const std::vector<sql::TableRef>& tables) {
    std::map<std::string, int> counts;
    for (const auto& ref : tables) {
      if (!ref.alias.empty()) {
        for (const auto& e : scope_.entries) {
          if (e.ref.alias == ref.alias) {
            Fail(ref.alias_pos, "pseudonym '" + ref.alias +
                                    "' is defined for more than one table");
          }
        }
      }
      TableInstance inst{ref.table, counts[ref.table]++};
      scope_.entries.push_back({ref, inst, false});
    }
  }

  // Resolves an alias, or a table name that was not given an alias.
  Scope::Entry& Lookup(const std::string& qualifier, SourcePos pos) {
    for (auto& e : scope_.entries) {
      if (e.ref.alias == qualifier) {
        e.used = true;
        return e;
      }
    }
    Scope::Entry* found = nullptr;
    int matches = 0;
    bool aliased = false;
    for (auto& e : scope_.entries) {
      if (e.ref.table != qualifier) continue;
      if (!e.ref.alias.empty()) {
        aliased = true;
        continue;
      }
      found = &e;
      ++matches;
    }
    if (matches > 1) {
      Fail(pos, "table '" + qualifier +
                    "' occurs more than once; give each occurrence a "
                    "pseudonym");
    }
    if (matches == 1) return *found;
    if (aliased) {
      Fail(pos, "table '" + qualifier +
                    "' is only visible through its pseudonym");
    }
    Fail(pos, "pseudonym '" + qualifier + "' is not defined");
  }

  bool TableHasColumn(const std::string& table, const std::string& column) const {
    const auto* cols = info_.Columns(table);
    return cols && std::find(cols->begin(), cols->end(), column) != cols->end();
  }

  ResolvedColumn Resolve(const sql::ColumnRef& c) {
    if (!c.qualifier.empty()) {
      return {Lookup(c.qualifier, c.pos).instance, c.column, c.pos};
    }
    std::vector<const Scope::Entry*> owners;
    for (const auto& e : scope_.entries) {
      if (TableHasColumn(e.ref.table, c.column)) owners.push_back(&e);
    }
    if (owners.size() == 1) return {owners[0]->instance, c.column, c.pos};
    if (owners.size() > 1) {
      std::string tables;
      for (const auto* o : owners) {
        if (!tables.empty()) tables += ", ";
        tables += ToString(o->instance);
      }
      Fail(c.pos, "column '" + c.column + "' is ambiguous (" + tables + ")");
    }
    if (scope_.entries.size() == 1) {
      // Leave unknown columns of a single table to the consistency check.
      return {scope_.entries[0].instance, c.column, c.pos};
    }
    Fail(c.pos, "cannot resolve column '" + c.column +
                    "': no table in the From list has it");
  }

  NamedValue Name(const sql::ValueExpr& v) {
    NamedValue out;
    out.kind = v.kind;
    out.pos = v.pos;
    switch (v.kind) {
      case sql::ValueExpr::Kind::kColumn:
        out.column = Resolve(v.column);
        break;
      case sql::ValueExpr::Kind::kLiteral:
        out.literal = v.literal;
        break;
      case sql::ValueExpr::Kind::kPlaceholder:
        out.placeholder = v.placeholder;
        break;
    }
    return out;
  }

  NamedCondition Name(const sql::Condition& c) {
    NamedCondition out;
    out.kind = c.kind;
    out.op = c.op;
    out.pos = c.pos;
    switch (c.kind) {
      case sql::Condition::Kind::kCompare:
      case sql::Condition::Kind::kBetween:
        for (const auto& v : c.operands) out.operands.push_back(Name(v));
        break;
      case sql::Condition::Kind::kIsNull:
      case sql::Condition::Kind::kIsNotNull:
        out.column = Resolve(c.column);
        break;
      case sql::Condition::Kind::kSatisfies:
        out.left = Lookup(c.left, c.left_pos).instance;
        out.relationship = c.relationship;
        out.relationship_pos = c.relationship_pos;
        out.right = Lookup(c.right, c.right_pos).instance;
        break;
      case sql::Condition::Kind::kAnd:
      case sql::Condition::Kind::kOr:
      case sql::Condition::Kind::kNot:
        for (const auto& child : c.children) out.children.push_back(Name(child));
        break;
    }
    return out;
  }

  std::optional<NamedCondition> Name(const std::optional<sql::Condition>& c) {
    if (!c) return std::nullopt;
    return Name(*c);
  }

  void CheckAllUsed() {
    for (const auto& e : scope_.entries) {
      if (!e.ref.alias.empty() && !e.used) {
        Fail(e.ref.alias_pos,
             "pseudonym '" + e.ref.alias + "' is defined but not used");
      }
    }
  }

  NamedTable Single(const sql::TableRef& ref) {
    Bind({ref});
    return {scope_.entries[0].instance, ref.pos};
  }

  NamedStatement Name(const sql::SelectStmt& s) {
    NamedSelect out;
    out.quantifier = s.quantifier;
    out.limit = s.limit;
    out.pos = s.pos;
    Bind(s.from);
    for (const auto& e : scope_.entries) {
      out.from.push_back({e.instance, e.ref.pos});
    }
    for (const auto& item : s.projection) {
      if (item.star) {
        for (const auto& e : scope_.entries) {
          const auto* cols = info_.Columns(e.ref.table);
          if (!cols) continue;
          for (const auto& col : *cols) {
            NamedValue v;
            v.kind = sql::ValueExpr::Kind::kColumn;
            v.column = {e.instance, col, item.pos};
            v.pos = item.pos;
            out.projection.push_back(std::move(v));
          }
        }
      } else {
        out.projection.push_back(Name(sql::ValueExpr::Column(item.column)));
      }
    }
    out.where = Name(s.where);
    for (const auto& g : s.group_by) out.group_by.push_back(Resolve(g));
    for (const auto& o : s.order_by) {
      out.order_by.push_back({Resolve(o.column), o.order});
    }
    CheckAllUsed();
    return out;
  }

  NamedStatement Name(const sql::InsertStmt& s) {
    NamedInsert out;
    out.pos = s.pos;
    out.table = Single(s.table);
    for (const auto& c : s.columns) {
      out.columns.push_back({out.table.instance, c.column, c.pos});
    }
    for (const auto& row : s.rows) {
      std::vector<NamedValue> named;
      for (const auto& v : row) named.push_back(Name(v));
      out.rows.push_back(std::move(named));
    }
    return out;
  }

  NamedStatement Name(const sql::UpdateStmt& s) {
    NamedUpdate out;
    out.pos = s.pos;
    out.table = Single(s.table);
    for (const auto& a : s.assignments) {
      out.assignments.push_back({Resolve(a.column), Name(a.value)});
    }
    out.where = Name(s.where);
    CheckAllUsed();
    return out;
  }

  NamedStatement Name(const sql::DeleteStmt& s) {
    NamedDelete out;
    out.pos = s.pos;
    out.table = Single(s.table);
    out.where = Name(s.where);
    CheckAllUsed();
    return out;
  }

  const erd::ParserInfo& info_;
  Scope scope_;
};

}  // namespace

Result<NamedStatement, AnalysisError> ResolveNames(const sql::Statement& stmt,
                                                   const erd::ParserInfo& info) {
  try {
    return Namer(info).Run(stmt);
  } catch (const NamerError& e) {
    return MakeUnexpected(e.error);
  }
}

}  // namespace erdsql::analysis
