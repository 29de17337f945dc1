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

#include <gtest/gtest.h>

#include "erdsql/analysis/analysis.h"
#include "erdsql/erd/erd_parser.h"
#include "erdsql/erd/schema.h"
#include "support/uni_fixture.h"

namespace erdsql::analysis {
namespace {

using testing::UniInfo;

std::string CompileError(std::string_view text) {
  auto typed = Compile(text, UniInfo());
  if (typed) return "<accepted>";
  return FormatError(typed.error(), "q");
}

TypedStatement MustCompile(std::string_view text) {
  auto typed = Compile(text, UniInfo());
  if (!typed) ADD_FAILURE() << FormatError(typed.error(), "q");
  return std::move(typed).value();
}

TEST(NamerTest, ExpandsStarInFromOrder) {
  auto typed = MustCompile("Select * From Student, Result Where Satisfies Student has_a Result;");
  const auto& s = std::get<NamedSelect>(typed.statement());
  ASSERT_EQ(s.projection.size(), 11u);
  EXPECT_EQ(s.projection[0].column.column, "Key");
  EXPECT_EQ(s.projection[0].column.table.table, "Student");
  EXPECT_EQ(s.projection[6].column.table.table, "Result");
  EXPECT_EQ(s.projection[10].column.column, "StudentTakingKey");
}

TEST(NamerTest, NumbersRepeatedTables) {
  auto typed = MustCompile(
      "Select a.Name, b.Name From Student as a, Student as b Where a.Age = b.Age;");
  const auto& s = std::get<NamedSelect>(typed.statement());
  EXPECT_EQ(s.from[0].instance, (TableInstance{"Student", 0}));
  EXPECT_EQ(s.from[1].instance, (TableInstance{"Student", 1}));
  EXPECT_EQ(s.projection[1].column.table, (TableInstance{"Student", 1}));
}

TEST(NamerTest, ResolvesUnqualifiedColumns) {
  auto typed = MustCompile("Select Grade From Student, Result Where Name = 'x';");
  const auto& s = std::get<NamedSelect>(typed.statement());
  EXPECT_EQ(s.projection[0].column.table.table, "Result");
}

TEST(NamerTest, Errors) {
  EXPECT_EQ(CompileError("Select s.Name From Student as s, Result as s;"),
            "q:1:44: namer error: pseudonym 's' is defined for more than one table");
  EXPECT_EQ(CompileError("Select t.Name From Student as s;"),
            "q:1:8: namer error: pseudonym 't' is not defined");
  EXPECT_EQ(CompileError("Select Name From Student as s;"),
            "q:1:29: namer error: pseudonym 's' is defined but not used");
  EXPECT_EQ(CompileError("Select Student.Name From Student as s Where s.Age = 1;"),
            "q:1:8: namer error: table 'Student' is only visible through its pseudonym");
  EXPECT_EQ(CompileError("Select Key From Student, Result;"),
            "q:1:8: namer error: column 'Key' is ambiguous (Student#0, Result#0)");
  EXPECT_EQ(CompileError("Select Title From Student, Result;"),
            "q:1:8: namer error: cannot resolve column 'Title': no table in the "
            "From list has it");
}

TEST(ConsistencyTest, Errors) {
  EXPECT_EQ(CompileError("Select * From Teacher;"),
            "q:1:15: consistency error: unknown table 'Teacher'");
  EXPECT_EQ(CompileError("Select s.Salary From Student as s;"),
            "q:1:8: consistency error: unknown column 'Salary' in table 'Student'");
  EXPECT_EQ(CompileError("Select * From Student, Result Where Satisfies Result has_a Student;"),
            "q:1:54: consistency error: relationship 'has_a' relates Student to "
            "Result, not Result to Student");
  EXPECT_EQ(CompileError("Select * From Student, Result Where Satisfies Student owns Result;"),
            "q:1:55: consistency error: unknown relationship 'owns'");
  EXPECT_EQ(CompileError("Select * From Student, Result Where Not Satisfies Student has_a Result;"),
            "q:1:37: consistency error: Satisfies cannot appear under 'Not'");
  EXPECT_EQ(CompileError("Select * From Student, Lecture Where Age = 1 Or "
                         "Satisfies Student Participation Lecture;"),
            "q:1:49: consistency error: Satisfies over many-to-many relationship "
            "'Participation' cannot appear under 'Or'");
  EXPECT_EQ(CompileError("Select * From Student Where Email = null;"),
            "q:1:37: consistency error: null is not allowed in conditions; use "
            "'Is Null' or 'Is Not Null'");
  EXPECT_EQ(CompileError("Update Student Set Age = null;"),
            "q:1:26: consistency error: null value for column 'Age' which is "
            "declared NOT NULL in 'Student'");
  EXPECT_EQ(CompileError("Insert Into Student (Name, First, MatNum) Values ('a', 'b', 1);"),
            "q:1:13: consistency error: Insert into 'Student' must provide NOT "
            "NULL column 'Age'");
  EXPECT_EQ(CompileError("Insert Into Result (Attempt, Grade, StudentTakingKey) "
                         "Values (1, 2.0);"),
            "q:1:63: consistency error: row has 2 values but 3 columns are listed");
}

TEST(ConsistencyTest, ManyToManySatisfiesOnlyInSelect) {
  auto model = erd::ParseErd(
      "model Net\n"
      "entity Person { Name : String }\n"
      "relationship knows { Person 0..n Person 0..n }\n");
  ASSERT_TRUE(model.ok());
  auto info = erd::BuildParserInfo(*model, erd::Transform(*model), "net.db");
  auto del = Compile("Delete From Person Where Satisfies Person knows Person;", info);
  ASSERT_FALSE(del.ok());
  EXPECT_EQ(FormatError(del.error(), "q"),
            "q:1:26: consistency error: Satisfies over many-to-many relationship "
            "'knows' is only supported in Select");
  EXPECT_TRUE(Compile("Select a.Name From Person as a, Person as b "
                      "Where Satisfies a knows b;",
                      info)
                  .ok());
}

TEST(ConsistencyTest, AcceptsOneToManyUnderOrAndNullAssignments) {
  MustCompile("Select * From Student, Result Where Age = 1 Or Satisfies Student has_a Result;");
  MustCompile("Update Student Set Email = null Where Email Is Not Null;");
}

TEST(TyperTest, InfersPlaceholderTypes) {
  auto typed = MustCompile(
      "Select Name From Student Where Age Between {lo} And {hi} And Email = {e} "
      "And Name = {e};");
  ASSERT_EQ(typed.placeholders().size(), 3u);
  EXPECT_EQ(typed.placeholders()[0].name, "lo");
  EXPECT_EQ(typed.placeholders()[0].type, SqlType::kInt);
  EXPECT_EQ(typed.placeholders()[2].type, SqlType::kString);
  EXPECT_FALSE(typed.placeholders()[2].nullable_allowed);

  auto upd = MustCompile("Update Student Set Email = {e};");
  ASSERT_NE(upd.FindPlaceholder("e"), nullptr);
  EXPECT_TRUE(upd.FindPlaceholder("e")->nullable_allowed);

  auto both = MustCompile("Update Student Set Email = {e} Where Name = {e};");
  EXPECT_FALSE(both.FindPlaceholder("e")->nullable_allowed);

  auto date = MustCompile("Select Title From Lecture Where Start > {d} And Building = {b};");
  EXPECT_EQ(date.FindPlaceholder("d")->type, SqlType::kDate);
  EXPECT_EQ(date.FindPlaceholder("b")->type, SqlType::kChar);
}

TEST(TyperTest, Errors) {
  EXPECT_EQ(CompileError("Select Name From Student Where Age = 2.5;"),
            "q:1:38: typer error: Type error: Int (Age) and Float are not compatible.");
  EXPECT_EQ(CompileError("Select Name From Student Where {a} = {b};"),
            "q:1:32: typer error: two embedded expressions cannot be compared; "
            "their types cannot be inferred");
  EXPECT_EQ(CompileError("Select Name From Student Where Name Between 'a' And 'b';"),
            "q:1:32: typer error: Between requires a numeric type, got String (Name)");
  EXPECT_EQ(CompileError("Select Name From Student Where Age = {x} And Name = {x};"),
            "q:1:53: typer error: placeholder {x} is used as Int and as String");
  EXPECT_EQ(CompileError("Update Lecture Set Elective = 1;"),
            "q:1:31: typer error: Type error: Bool (Elective) and Int are not compatible.");
  EXPECT_EQ(CompileError("Select Name From Student Where Age = Name;"),
            "q:1:38: typer error: Type error: Int (Age) and String (Name) are not "
            "compatible.");
}

TEST(TyperTest, SyntaxErrorsCarryPhase) {
  auto typed = Compile("Select Name From;", UniInfo());
  ASSERT_FALSE(typed.ok());
  EXPECT_EQ(typed.error().phase, Phase::kSyntax);
  EXPECT_EQ(FormatError(typed.error(), "f.sql"),
            "f.sql:1:17: syntax error: unexpected ';'; expected table name");
}

}  // namespace
}  // namespace erdsql::analysis
