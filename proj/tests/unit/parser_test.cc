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

#include <random>

#include <gtest/gtest.h>

#include "erdsql/sql/parser.h"
#include "erdsql/sql/printer.h"
#include "support/random_query.h"
#include "support/uni_fixture.h"

namespace erdsql::sql {
namespace {

std::string ParseError(std::string_view text) {
  auto stmt = ParseStatement(text);
  if (stmt) return "<accepted>";
  return FormatDiagnostic(stmt.error().front());
}

Statement MustParse(std::string_view text) {
  auto stmt = ParseStatement(text);
  EXPECT_TRUE(stmt.ok()) << text << "\n"
                         << (stmt ? "" : FormatDiagnostic(stmt.error().front()));
  return stmt ? std::move(stmt).value() : Statement{};
}

TEST(ParserTest, ParsesSelect) {
  auto stmt = MustParse(
      "Select Distinct s.Name, Grade From Student as s, Result "
      "Where Satisfies s has_a Result And Grade < 2.0 "
      "Order By s.Name Desc, Grade Limit 3;");
  const auto& s = std::get<SelectStmt>(stmt);
  EXPECT_EQ(s.quantifier, Quantifier::kDistinct);
  ASSERT_EQ(s.projection.size(), 2u);
  EXPECT_EQ(s.projection[0].column.qualifier, "s");
  EXPECT_EQ(s.projection[1].column.column, "Grade");
  ASSERT_EQ(s.from.size(), 2u);
  EXPECT_EQ(s.from[0].alias, "s");
  ASSERT_TRUE(s.where);
  EXPECT_EQ(s.where->kind, Condition::Kind::kAnd);
  EXPECT_EQ(s.where->children[0].kind, Condition::Kind::kSatisfies);
  EXPECT_EQ(s.where->children[0].relationship, "has_a");
  EXPECT_EQ(s.where->children[1].operands[1].literal, SqlValue::Float(2.0));
  ASSERT_EQ(s.order_by.size(), 2u);
  EXPECT_EQ(s.order_by[0].order, SortOrder::kDesc);
  EXPECT_EQ(s.order_by[1].order, SortOrder::kAsc);
  EXPECT_EQ(s.limit, 3);
}

TEST(ParserTest, OrBindsLooserThanAnd) {
  auto stmt = MustParse("Select * From T Where a = 1 Or b = 2 And Not c = 3;");
  const auto& w = *std::get<SelectStmt>(stmt).where;
  ASSERT_EQ(w.kind, Condition::Kind::kOr);
  ASSERT_EQ(w.children[1].kind, Condition::Kind::kAnd);
  EXPECT_EQ(w.children[1].children[1].kind, Condition::Kind::kNot);
}

TEST(ParserTest, BetweenConsumesItsAnd) {
  auto stmt = MustParse("Select * From T Where a Between 1 And 5 And b Is Not Null;");
  const auto& w = *std::get<SelectStmt>(stmt).where;
  ASSERT_EQ(w.kind, Condition::Kind::kAnd);
  EXPECT_EQ(w.children[0].kind, Condition::Kind::kBetween);
  EXPECT_EQ(w.children[1].kind, Condition::Kind::kIsNotNull);
}

TEST(ParserTest, ParsesMutations) {
  auto ins = MustParse("insert into Student (Name, Age) values ('A', {a}), ('B', 3);");
  const auto& i = std::get<InsertStmt>(ins);
  EXPECT_EQ(i.columns.size(), 2u);
  ASSERT_EQ(i.rows.size(), 2u);
  EXPECT_EQ(i.rows[0][1].kind, ValueExpr::Kind::kPlaceholder);
  EXPECT_EQ(i.rows[0][1].placeholder, "a");

  auto upd = MustParse("Update Student as s Set s.Email = null Where s.Key = {k};");
  const auto& u = std::get<UpdateStmt>(upd);
  EXPECT_EQ(u.table.alias, "s");
  EXPECT_TRUE(u.assignments[0].value.literal.is_null());

  auto del = MustParse("Delete From Result;");
  EXPECT_FALSE(std::get<DeleteStmt>(del).where);
}

TEST(ParserTest, RecordsPositions) {
  auto stmt = MustParse("Select Name\nFrom Student\nWhere Age = {x};");
  const auto& s = std::get<SelectStmt>(stmt);
  EXPECT_EQ(s.from[0].pos, (SourcePos{2, 6}));
  EXPECT_EQ(s.where->operands[1].pos, (SourcePos{3, 13}));
}

TEST(ParserTest, Errors) {
  EXPECT_EQ(ParseError("Select Name From Student"),
            "1:18: unexpected end of input; expected ';'");
  EXPECT_EQ(ParseError("Select From Student;"),
            "1:8: unexpected 'From'; expected '*' or column name");
  EXPECT_EQ(ParseError("Select * From Student Limit 0;"),
            "1:29: limit must be a positive integer");
  EXPECT_EQ(ParseError("Select * From T Where 1 Is Null;"),
            "1:23: 'Is Null' requires a column");
  EXPECT_EQ(ParseError("Insert Into T (a) Values (b);"),
            "1:27: unexpected 'b'; expected literal or placeholder");
  EXPECT_EQ(ParseError("Select * From T; Select"),
            "1:18: unexpected 'Select' after end of statement");
  EXPECT_EQ(ParseError("Drop Table T;"),
            "1:1: unexpected 'Drop'; expected 'Select', 'Insert', 'Update' or 'Delete'");
  EXPECT_EQ(ParseError("Select * From T Where a != 1;"),
            "1:25: '!=' is not supported; write '<>'");
}

TEST(ParserTest, SplitsScripts) {
  auto parts = SplitStatements(
      "-- header; not a statement\n"
      "Select * From T Where a = 'x;y';\n"
      "  Delete From T;\n\n");
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].text, "Select * From T Where a = 'x;y';");
  EXPECT_EQ(parts[0].origin, (SourcePos{2, 1}));
  EXPECT_EQ(parts[1].text, "Delete From T;");
  EXPECT_EQ(parts[1].origin, (SourcePos{3, 3}));
  auto again = ParseStatement(parts[1].text, parts[1].origin);
  ASSERT_TRUE(again.ok());
  EXPECT_EQ(StatementPos(*again), (SourcePos{3, 3}));
}

// Random syntax trees, built without reference to any schema.
class TreeGen {
 public:
  explicit TreeGen(unsigned seed) : rng_(seed) {}

  Statement Any() {
    switch (Pick(4)) {
      case 0:
        return Select();
      case 1:
        return Insert();
      case 2:
        return Update();
      default:
        return Delete();
    }
  }

 private:
  int Pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  std::string Name() {
    static const char* names[] = {"Student", "s", "Key", "Age", "x_1", "T2"};
    return names[Pick(6)];
  }

  ColumnRef Column(bool qualified) {
    ColumnRef c;
    if (qualified && Pick(2)) c.qualifier = Name();
    c.column = Name();
    return c;
  }

  SqlValue Literal() {
    switch (Pick(7)) {
      case 0:
        return SqlValue::Int(Pick(400) - 200);
      case 1:
        return SqlValue::Float((Pick(4000) - 2000) / 16.0);
      case 2:
        return SqlValue::String(Pick(2) ? "it's" : "a -- b; c");
      case 3:
        return SqlValue::Char(Pick(2) ? U'\'' : U'é');
      case 4:
        return SqlValue::Bool(Pick(2));
      case 5:
        return SqlValue::Null();
      default:
        return SqlValue::Int(0);
    }
  }

  ValueExpr Value(bool allow_column) {
    int k = Pick(allow_column ? 3 : 2);
    if (k == 0) return ValueExpr::Literal(Literal(), {});
    if (k == 1) return ValueExpr::Placeholder("p" + std::to_string(Pick(3)), {});
    return ValueExpr::Column(Column(true));
  }

  Condition Cond(int depth) {
    int k = Pick(depth > 0 ? 8 : 5);
    switch (k) {
      case 0:
      case 1:
        return Condition::Compare(static_cast<CompareOp>(Pick(6)), Value(true),
                                  Value(true));
      case 2:
        return Condition::Between(Value(true), Value(true), Value(true));
      case 3:
        return Condition::IsNull(Column(true), Pick(2));
      case 4:
        return Condition::Satisfies(Name(), Name(), Name(), {});
      case 5:
      case 6: {
        std::vector<Condition> parts;
        for (int i = 0, n = 2 + Pick(2); i < n; ++i) parts.push_back(Cond(depth - 1));
        return Condition::Junction(k == 5 ? Condition::Kind::kAnd
                                          : Condition::Kind::kOr,
                                   std::move(parts));
      }
      default:
        return Condition::Negate(Cond(depth - 1), {});
    }
  }

  std::optional<Condition> Where() {
    if (Pick(4) == 0) return std::nullopt;
    return Cond(3);
  }

  TableRef Table(bool allow_alias) {
    TableRef t;
    t.table = Name();
    if (allow_alias && Pick(2)) t.alias = "a" + std::to_string(Pick(3));
    return t;
  }

  Statement Select() {
    SelectStmt s;
    s.quantifier = Pick(2) ? Quantifier::kDistinct : Quantifier::kAll;
    for (int i = 0, n = 1 + Pick(3); i < n; ++i) {
      SelectItem item;
      if (Pick(5) == 0) {
        item.star = true;
      } else {
        item.column = Column(true);
      }
      s.projection.push_back(item);
    }
    for (int i = 0, n = 1 + Pick(3); i < n; ++i) s.from.push_back(Table(true));
    s.where = Where();
    if (Pick(4) == 0) s.group_by = {Column(true)};
    for (int i = 0, n = Pick(3); i < n; ++i) {
      s.order_by.push_back({Column(true), Pick(2) ? SortOrder::kDesc : SortOrder::kAsc});
    }
    if (Pick(3) == 0) s.limit = 1 + Pick(50);
    return s;
  }

  Statement Insert() {
    InsertStmt s;
    s.table = Table(false);
    int width = 1 + Pick(3);
    for (int i = 0; i < width; ++i) s.columns.push_back(Column(false));
    for (int r = 0, n = 1 + Pick(3); r < n; ++r) {
      std::vector<ValueExpr> row;
      for (int i = 0; i < width; ++i) row.push_back(Value(false));
      s.rows.push_back(std::move(row));
    }
    return s;
  }

  Statement Update() {
    UpdateStmt s;
    s.table = Table(true);
    for (int i = 0, n = 1 + Pick(3); i < n; ++i) {
      s.assignments.push_back({Column(true), Value(true)});
    }
    s.where = Where();
    return s;
  }

  Statement Delete() {
    DeleteStmt s;
    s.table = Table(true);
    s.where = Where();
    return s;
  }

  std::mt19937 rng_;
};

TEST(ParserTest, PrintParseRoundTripOnRandomTrees) {
  TreeGen gen(7);
  for (int i = 0; i < 500; ++i) {
    Statement tree = gen.Any();
    std::string text = PrintStatement(tree);
    auto parsed = ParseStatement(text);
    ASSERT_TRUE(parsed.ok()) << text << "\n"
                             << FormatDiagnostic(parsed.error().front());
    StripPositions(*parsed);
    StripPositions(tree);
    EXPECT_EQ(*parsed, tree) << text;
    EXPECT_EQ(PrintStatement(*parsed), text);
  }
}

// Generated workload text goes through parse and print unchanged in
// meaning: printing the parsed form and parsing again is a fixed point.
TEST(ParserTest, GeneratedQueriesReachAFixedPoint) {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto q = testing::RandomSelect(testing::UniInfo(), rng);
    std::string text = testing::ToSql(q);
    Statement first = MustParse(text);
    std::string printed = PrintStatement(first);
    Statement second = MustParse(printed);
    StripPositions(first);
    StripPositions(second);
    EXPECT_EQ(first, second) << text;
  }
}

}  // namespace
}  // namespace erdsql::sql
