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

#include "support/uni_fixture.h"

#include <stdexcept>

#include "erdsql/erd/erd_parser.h"

namespace erdsql::testing {

namespace {

SqlValue S(const char* s) { return SqlValue::String(s); }
SqlValue I(std::int64_t i) { return SqlValue::Int(i); }
SqlValue F(double d) { return SqlValue::Float(d); }
SqlValue B(bool b) { return SqlValue::Bool(b); }
SqlValue D(std::int64_t s) { return SqlValue::FromDate(Date{s}); }
SqlValue C(char32_t c) { return SqlValue::Char(c); }
SqlValue N() { return SqlValue::Null(); }

}  // namespace

const erd::ERModel& UniModel() {
  static const erd::ERModel model = [] {
    auto m = erd::ParseErd(ReadText(DataPath("uni.erd")));
    if (!m) throw std::runtime_error("uni.erd does not parse");
    return std::move(m).value();
  }();
  return model;
}

const erd::RelationalSchema& UniSchema() {
  static const erd::RelationalSchema schema = erd::Transform(UniModel());
  return schema;
}

const erd::ParserInfo& UniInfo() {
  static const erd::ParserInfo info =
      erd::BuildParserInfo(UniModel(), UniSchema(), "uni.db");
  return info;
}

const Dataset& UniSeed() {
  // Column orders: Student Key Name First MatNum Email Age; Lecture Key
  // Title Hours Elective Start Building; Result Key Attempt Grade Points
  // StudentTakingKey; Participation Key StudentParticipationKey
  // LectureParticipationKey.
  static const Dataset seed = {
      {"Student",
       {
           {I(1), S("Fisher"), S("Joe"), I(1001), S("joe@uni.example"), I(30)},
           {I(2), S("Smith"), S("Ann"), I(1002), N(), I(22)},
           {I(3), S("Miller"), S("Bob"), I(1003), S("bob@uni.example"), I(30)},
           {I(4), S("Jones"), S("Eve"), I(1004), N(), I(25)},
           {I(5), S("Brown"), S("Tom"), I(1005), S("tom@uni.example"), I(19)},
       }},
      {"Lecture",
       {
           {I(1), S("Databases"), I(4), B(false), D(1759276800), C(U'A')},
           {I(2), S("Logic"), I(2), B(true), N(), N()},
           {I(3), S("Compilers"), I(3), B(true), D(1760486400), C(U'C')},
       }},
      {"Result",
       {
           {I(1), I(1), F(1.3), I(90), I(1)},
           {I(2), I(1), F(2.7), I(60), I(2)},
           {I(3), I(2), F(1.7), N(), I(3)},
           {I(4), I(1), F(3.0), I(40), I(1)},
           {I(5), I(1), F(1.0), I(95), I(4)},
       }},
      {"Participation",
       {
           {I(1), I(1), I(1)},
           {I(2), I(1), I(2)},
           {I(3), I(2), I(1)},
           {I(4), I(3), I(3)},
           {I(5), I(4), I(2)},
       }},
  };
  return seed;
}

db::Connection UniDatabase::Connect() const {
  auto conn = db::Connection::Open(db_path);
  if (!conn) throw std::runtime_error(db::ToString(conn.error()));
  return std::move(conn).value();
}

void CreateDatabase(const std::filesystem::path& path,
                    const erd::RelationalSchema& schema,
                    const erd::ParserInfo& info, const Dataset& data) {
  auto conn = db::Connection::Open(path);
  if (!conn) throw std::runtime_error(db::ToString(conn.error()));
  auto ddl = conn->ExecScript(erd::EmitDdl(schema));
  if (!ddl) throw std::runtime_error(db::ToString(ddl.error()));
  LoadDataset(conn.value(), info, data);
}

UniDatabase MakeUniDatabase(bool seed) {
  UniDatabase out;
  out.dir = std::make_unique<TempDir>();
  out.db_path = *out.dir / "uni.db";
  out.info_path = *out.dir / "uni.info";
  out.info = UniInfo();
  CreateDatabase(out.db_path, UniSchema(), out.info,
                 seed ? UniSeed() : Dataset{});
  auto written = erd::WriteInfo(out.info_path, out.info);
  if (!written) throw std::runtime_error("cannot write info file");
  return out;
}

}  // namespace erdsql::testing
