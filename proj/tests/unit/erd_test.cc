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
#include <set>

#include <gtest/gtest.h>

#include "erdsql/db/connection.h"
#include "erdsql/erd/erd_parser.h"
#include "erdsql/erd/model.h"
#include "erdsql/erd/schema.h"
#include "support/random_model.h"
#include "support/test_env.h"
#include "support/uni_fixture.h"

namespace erdsql::erd {
namespace {

using testing::UniModel;
using testing::UniSchema;

std::string FirstError(std::string_view text) {
  auto m = ParseErd(text);
  if (m.ok()) return "<accepted>";
  return FormatDiagnostic(m.error().front());
}

TEST(ErdParserTest, ParsesUniModel) {
  const ERModel& m = UniModel();
  EXPECT_EQ(m.name, "Uni");
  ASSERT_EQ(m.entities.size(), 3u);
  ASSERT_EQ(m.relationships.size(), 2u);
  const Relationship& has_a = m.relationships[0];
  EXPECT_EQ(has_a.name, "has_a");
  EXPECT_EQ(has_a.EffectiveRole(), "Taking");
  EXPECT_EQ(has_a.a.entity, "Student");
  EXPECT_EQ(has_a.a.cardinality, (Cardinality{0, std::nullopt}));
  EXPECT_EQ(has_a.b.cardinality, (Cardinality{1, 1}));
  const Attribute* email = m.FindEntity("Student")->FindAttribute("Email");
  ASSERT_NE(email, nullptr);
  EXPECT_TRUE(email->nullable);
  EXPECT_EQ(m.FindEntity("Student")->FindAttribute("MatNum")->key,
            KeyStatus::kUnique);
}

TEST(ErdParserTest, AcceptsCardinalitySpellings) {
  auto m = ParseErd(
      "model M entity A { x : Int; } entity B { y : Int key }\n"
      "relationship R { A 1..* ; B 2 }\n");
  ASSERT_TRUE(m.ok()) << FormatDiagnostic(m.error().front());
  EXPECT_EQ(m->relationships[0].a.cardinality, (Cardinality{1, std::nullopt}));
  EXPECT_EQ(m->relationships[0].b.cardinality, (Cardinality{2, 2}));
}

TEST(ErdParserTest, ReportsSyntaxErrorsWithPositions) {
  EXPECT_EQ(FirstError("model M\nentity A {\n  a : Strin\n}\n"),
            "3:7: unknown domain 'Strin' (expected String, Int, Float, Char, "
            "Bool or Date)");
  EXPECT_EQ(FirstError("model M\nentity A { a : Int }\nfoo"),
            "3:1: expected 'entity' or 'relationship' but found 'foo'");
}

TEST(ErdParserTest, ReportsEveryValidationError) {
  auto m = ParseErd(
      "model M\n"
      "entity A { Key : Int }\n"
      "entity A { b : Int key null }\n"
      "relationship R { A 2..1  Z 0..n }\n");
  ASSERT_FALSE(m.ok());
  std::set<std::string> messages;
  for (const auto& d : m.error()) messages.insert(d.message);
  EXPECT_TRUE(messages.count(
      "attribute name 'Key' is reserved for the surrogate key of entity 'A'"));
  EXPECT_TRUE(messages.count("duplicate entity name 'A'"));
  EXPECT_TRUE(messages.count("key attribute 'A.b' cannot be nullable"));
  EXPECT_TRUE(messages.count("cardinality lower bound 2 exceeds upper bound 1"));
  EXPECT_TRUE(messages.count("unknown entity 'Z' in relationship 'R'"));
}

TEST(ErdParserTest, RejectsKeywordNames) {
  EXPECT_EQ(FirstError("model M entity Select { a : Int }"),
            "1:16: entity name 'Select' is a reserved SQL keyword");
}

TEST(ErdParserTest, PrintParseRoundTrip) {
  auto again = ParseErd(PrintErd(UniModel()));
  ASSERT_TRUE(again.ok());
  EXPECT_EQ(again.value(), UniModel());
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    ERModel m = testing::RandomModel(rng);
    ASSERT_TRUE(ValidateModel(m).empty()) << PrintErd(m);
    auto parsed = ParseErd(PrintErd(m));
    ASSERT_TRUE(parsed.ok()) << PrintErd(m);
    EXPECT_EQ(parsed.value(), m);
  }
}

TEST(ClassifyTest, FollowsUpperBounds) {
  auto rel = [](std::optional<std::uint32_t> a, std::optional<std::uint32_t> b) {
    return Relationship{"R", "", {"A", {0, a}}, {"B", {0, b}}};
  };
  EXPECT_EQ(ClassifyRelationship(rel(1, 1)), RelKind::kOneToOne);
  EXPECT_EQ(ClassifyRelationship(rel(1, std::nullopt)), RelKind::kOneToMany);
  EXPECT_EQ(ClassifyRelationship(rel(std::nullopt, 1)), RelKind::kOneToMany);
  EXPECT_EQ(ClassifyRelationship(rel(2, 3)), RelKind::kManyToMany);
  EXPECT_EQ(ClassifyRelationship(rel(std::nullopt, std::nullopt)),
            RelKind::kManyToMany);
}

TEST(TransformTest, UniTables) {
  const RelationalSchema& s = UniSchema();
  ASSERT_EQ(s.tables.size(), 4u);
  EXPECT_EQ(s.tables[0].name, "Student");
  EXPECT_EQ(s.tables[3].name, "Participation");

  const ColumnDef* fk = s.FindTable("Result")->FindColumn("StudentTakingKey");
  ASSERT_NE(fk, nullptr);
  EXPECT_TRUE(fk->not_null);
  EXPECT_FALSE(fk->unique);
  ASSERT_TRUE(fk->references.has_value());
  EXPECT_EQ(fk->references->table, "Student");
  EXPECT_EQ(fk->references->column, "Key");

  const TableDef* join = s.FindTable("Participation");
  ASSERT_EQ(join->columns.size(), 3u);
  EXPECT_EQ(join->columns[1].name, "StudentParticipationKey");
  EXPECT_EQ(join->columns[2].name, "LectureParticipationKey");
  ASSERT_EQ(join->unique_groups.size(), 1u);

  const ColumnDef* mat = s.FindTable("Student")->FindColumn("MatNum");
  EXPECT_TRUE(mat->unique);
  EXPECT_FALSE(s.FindTable("Student")->FindColumn("Email")->not_null);
}

TEST(TransformTest, OneToOneForeignKeyIsUniqueOnSecondEndpoint) {
  auto m = ParseErd(
      "model M entity P { n : String } entity Q { n : String }\n"
      "relationship owns { P 1..1  Q 0..1 }");
  ASSERT_TRUE(m.ok());
  RelationalSchema s = Transform(*m);
  ASSERT_EQ(s.tables.size(), 2u);
  const ColumnDef* fk = s.FindTable("Q")->FindColumn("PownsKey");
  ASSERT_NE(fk, nullptr);
  EXPECT_TRUE(fk->unique);
  EXPECT_FALSE(fk->not_null);
  EXPECT_EQ(s.FindTable("P")->columns.size(), 2u);
}

TEST(TransformTest, SelfManyToManySuffixesSecondColumn) {
  auto m = ParseErd(
      "model M entity P { n : String }\n"
      "relationship knows { P 0..n  P 0..n }");
  ASSERT_TRUE(m.ok());
  RelationshipLayout layout = LayoutRelationship(m->relationships[0]);
  EXPECT_EQ(layout.side, FkSide::kJoinTable);
  EXPECT_EQ(layout.columns,
            (std::vector<std::string>{"PknowsKey", "PknowsKey2"}));
}

TEST(TransformTest, ClashingForeignKeyIsReported) {
  auto m = ParseErd(
      "model M entity P { n : String } entity Q { PrKey : Int }\n"
      "relationship r { P 0..n  Q 1..1 }");
  ASSERT_FALSE(m.ok());
  EXPECT_NE(m.error().front().message.find("clashes with an existing column"),
            std::string::npos);
}

TEST(DdlTest, UniMatchesGolden) {
  EXPECT_EQ(EmitDdl(UniSchema()),
            testing::ReadText(testing::GoldenPath("uni_ddl.sql")));
}

TEST(DdlTest, StorageTypes) {
  EXPECT_EQ(StorageType(SqlType::kString), "TEXT");
  EXPECT_EQ(StorageType(SqlType::kChar), "TEXT");
  EXPECT_EQ(StorageType(SqlType::kInt), "INTEGER");
  EXPECT_EQ(StorageType(SqlType::kBool), "INTEGER");
  EXPECT_EQ(StorageType(SqlType::kDate), "INTEGER");
  EXPECT_EQ(StorageType(SqlType::kFloat), "REAL");
}

// Table and column lists read back from SQLite match the schema.
TEST(DdlTest, RandomModelsLoadIntoSqlite) {
  std::mt19937 rng(5);
  testing::TempDir dir;
  for (int i = 0; i < 50; ++i) {
    RelationalSchema s = Transform(testing::RandomModel(rng));
    auto conn = db::Connection::Open(dir / ("m" + std::to_string(i) + ".db"));
    ASSERT_TRUE(conn.ok());
    ASSERT_TRUE(conn->ExecScript(EmitDdl(s)).ok()) << EmitDdl(s);
    for (const auto& t : s.tables) {
      auto cols = conn->Query("SELECT name FROM pragma_table_info(?)",
                              {SqlValue::String(t.name)}, {SqlType::kString});
      ASSERT_TRUE(cols.ok());
      ASSERT_EQ(cols->size(), t.columns.size()) << t.name;
      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        EXPECT_EQ((*cols)[c][0].as_string(), t.columns[c].name);
      }
    }
  }
}

}  // namespace
}  // namespace erdsql::erd
