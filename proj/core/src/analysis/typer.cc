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

#include "erdsql/analysis/analysis.h"

namespace erdsql::analysis {

namespace {

struct TypeError {
  AnalysisError error;
};

using Kind = sql::ValueExpr::Kind;

}  // namespace

class Typer {
 public:
  explicit Typer(const erd::ParserInfo& info) : info_(info) {}

  Result<TypedStatement, AnalysisError> Run(const CheckedStatement& checked) {
    NamedStatement stmt = checked.statement();
    try {
      std::visit([this](auto& s) { Type(s); }, stmt);
    } catch (const TypeError& e) {
      return MakeUnexpected(e.error);
    }
    // Every placeholder occurrence carries its unified type and null flag.
    std::visit([this](auto& s) { Finalize(s); }, stmt);
    return TypedStatement(std::move(stmt), std::move(placeholders_));
  }

 private:
  [[noreturn]] void Fail(SourcePos pos, std::string message) {
    throw TypeError{{Phase::kTyper, std::move(message), pos}};
  }

  // "Int (Age)" for columns, "Float" for literals.
  static std::string Describe(const NamedValue& v) {
    std::string out(TypeName(*v.type));
    if (v.kind == Kind::kColumn) out += " (" + v.column.column + ")";
    return out;
  }

  void TypeColumn(NamedValue& v) {
    v.type = info_.ColumnType(v.column.table.table, v.column.column);
    v.nullable = info_.IsNullable(v.column.table.table, v.column.column);
  }

  // Types columns and literals; placeholders stay untyped.
  void TypeLeaf(NamedValue& v) {
    if (v.kind == Kind::kColumn) {
      TypeColumn(v);
    } else if (v.kind == Kind::kLiteral) {
      v.type = v.literal.type();
    }
  }

  // Records one use of a placeholder at `type`.
  void UsePlaceholder(NamedValue& v, SqlType type, bool nullable_context) {
    for (auto& p : placeholders_) {
      if (p.name != v.placeholder) continue;
      if (p.type != type) {
        Fail(v.pos, "placeholder {" + v.placeholder + "} is used as " +
                        std::string(TypeName(p.type)) + " and as " +
                        std::string(TypeName(type)));
      }
      p.nullable_allowed = p.nullable_allowed && nullable_context;
      v.type = type;
      return;
    }
    placeholders_.push_back({v.placeholder, type, nullable_context, v.pos});
    v.type = type;
  }

  // Unifies operands that must share a type: a comparison's two sides or
  // Between's subject and bounds.
  void Unify(std::vector<NamedValue>& operands) {
    const NamedValue* reference = nullptr;
    bool nullable_context = false;
    for (auto& v : operands) {
      TypeLeaf(v);
      if (v.kind == Kind::kPlaceholder) continue;
      if (v.kind == Kind::kColumn && v.nullable) nullable_context = true;
      if (!reference) {
        reference = &v;
      } else if (*reference->type != *v.type) {
        Fail(v.pos, "Type error: " + Describe(*reference) + " and " +
                        Describe(v) + " are not compatible.");
      }
    }
    if (!reference) {
      Fail(operands.front().pos,
           operands.size() == 2
               ? "two embedded expressions cannot be compared; their types "
                 "cannot be inferred"
               : "cannot infer a type for Between over embedded expressions "
                 "only");
    }
    SqlType type = *reference->type;
    for (auto& v : operands) {
      if (v.kind == Kind::kPlaceholder) UsePlaceholder(v, type, nullable_context);
    }
  }

  void Type(NamedCondition& c) {
    switch (c.kind) {
      case sql::Condition::Kind::kCompare:
        Unify(c.operands);
        break;
      case sql::Condition::Kind::kBetween:
        Unify(c.operands);
        if (!IsNumeric(*c.operands[0].type)) {
          const NamedValue& subject = c.operands[0];
          Fail(subject.pos, "Between requires a numeric type, got " +
                                (subject.kind == Kind::kPlaceholder
                                     ? std::string(TypeName(*subject.type))
                                     : Describe(subject)));
        }
        break;
      case sql::Condition::Kind::kIsNull:
      case sql::Condition::Kind::kIsNotNull:
      case sql::Condition::Kind::kSatisfies:
        break;
      case sql::Condition::Kind::kAnd:
      case sql::Condition::Kind::kOr:
      case sql::Condition::Kind::kNot:
        for (auto& child : c.children) Type(child);
        break;
    }
  }

  void Type(std::optional<NamedCondition>& c) {
    if (c) Type(*c);
  }

  // A value stored into `target` by Insert or Update.
  void TypeStored(const ResolvedColumn& target, NamedValue& v) {
    SqlType want = *info_.ColumnType(target.table.table, target.column);
    bool nullable = info_.IsNullable(target.table.table, target.column);
    if (v.kind == Kind::kPlaceholder) {
      UsePlaceholder(v, want, nullable);
      return;
    }
    TypeLeaf(v);
    if (v.kind == Kind::kLiteral && v.literal.is_null()) {
      v.type = want;
      return;
    }
    if (*v.type != want) {
      Fail(v.pos, "Type error: " + std::string(TypeName(want)) + " (" +
                      target.column + ") and " + Describe(v) +
                      " are not compatible.");
    }
  }

  void Type(NamedSelect& s) {
    for (auto& v : s.projection) TypeColumn(v);
    Type(s.where);
  }

  void Type(NamedInsert& s) {
    for (auto& row : s.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        TypeStored(s.columns[i], row[i]);
      }
    }
  }

  void Type(NamedUpdate& s) {
    for (auto& a : s.assignments) TypeStored(a.column, a.value);
    Type(s.where);
  }

  void Type(NamedDelete& s) { Type(s.where); }

  void Finalize(NamedValue& v) {
    if (v.kind != Kind::kPlaceholder) return;
    for (const auto& p : placeholders_) {
      if (p.name == v.placeholder) {
        v.type = p.type;
        v.nullable = p.nullable_allowed;
      }
    }
  }

  void Finalize(std::optional<NamedCondition>& c) {
    if (c) Finalize(*c);
  }

  void Finalize(NamedCondition& c) {
    for (auto& v : c.operands) Finalize(v);
    for (auto& child : c.children) Finalize(child);
  }

  void Finalize(NamedSelect& s) { Finalize(s.where); }
  void Finalize(NamedInsert& s) {
    for (auto& row : s.rows) {
      for (auto& v : row) Finalize(v);
    }
  }
  void Finalize(NamedUpdate& s) {
    for (auto& a : s.assignments) Finalize(a.value);
    Finalize(s.where);
  }
  void Finalize(NamedDelete& s) { Finalize(s.where); }

  const erd::ParserInfo& info_;
  std::vector<PlaceholderInfo> placeholders_;
};

Result<TypedStatement, AnalysisError> InferTypes(const CheckedStatement& stmt,
                                                 const erd::ParserInfo& info) {
  return Typer(info).Run(stmt);
}

}  // namespace erdsql::analysis
