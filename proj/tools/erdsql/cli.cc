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

#include "erdsql/cli.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "erdsql/analysis/analysis.h"
#include "erdsql/db/operations.h"
#include "erdsql/erd/erd_parser.h"
#include "erdsql/erd/parser_info.h"
#include "erdsql/erd/schema.h"
#include "erdsql/plan/render.h"
#include "erdsql/plan/translate.h"
#include "erdsql/sql/parser.h"

namespace erdsql::cli {

namespace fs = std::filesystem;

namespace {

struct Failure {
  int code;
};

std::optional<std::string> ReadFile(const fs::path& path) {
  std::error_code ec;
  if (fs::is_directory(path, ec)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return ss.str();
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err, const Environment& env)
      : out_(out), err_(err), env_(env) {}

  int ErdCompile(const std::string& file, const std::string& db, bool force) {
    auto text = ReadFile(file);
    if (!text) return Error(kExitIo, "cannot read '" + file + "'");
    auto model = erd::ParseErd(*text);
    if (!model) {
      for (const auto& d : model.error()) {
        err_ << file << ":" << d.pos << ": erd error: " << d.message << "\n";
      }
      return kExitCompile;
    }
    fs::path db_path(db);
    fs::path info_path = fs::path(db_path).replace_extension(".info");
    std::error_code ec;
    if (fs::exists(db_path, ec)) {
      if (!force) {
        return Error(kExitIo, "'" + db + "' exists; use --force to replace it");
      }
      if (fs::is_directory(db_path, ec) || !fs::remove(db_path, ec)) {
        return Error(kExitIo, "cannot replace '" + db + "'");
      }
    }
    erd::RelationalSchema schema = erd::Transform(*model);
    auto conn = db::Connection::Open(db_path);
    if (!conn) return Error(kExitIo, db::ToString(conn.error()));
    auto loaded = conn->ExecScript("BEGIN;\n" + erd::EmitDdl(schema) + "COMMIT;");
    conn->Close();
    if (!loaded) return Error(kExitDatabase, db::ToString(loaded.error()));
    erd::ParserInfo info = erd::BuildParserInfo(
        *model, schema, db_path.filename().string());
    auto written = erd::WriteInfo(info_path, info);
    if (!written) return Error(kExitIo, written.error().diag.message);
    out_ << "model " << model->name << "\n";
    out_ << "tables " << schema.tables.size() << ":";
    for (const auto& t : schema.tables) out_ << " " << t.name;
    out_ << "\nrelationships " << model->relationships.size() << ":";
    for (const auto& r : model->relationships) {
      out_ << " " << r.name << "("
           << erd::RelKindName(erd::ClassifyRelationship(r)) << ")";
    }
    out_ << "\ndatabase " << db_path.string() << "\ninfo "
         << info_path.string() << "\n";
    return kExitOk;
  }

  int Check(const std::string& file, const std::string& info_path) {
    erd::ParserInfo info = LoadInfo(info_path);
    auto text = ReadFile(file);
    if (!text) return Error(kExitIo, "cannot read '" + file + "'");
    bool failed = false;
    for (const auto& stmt : sql::SplitStatements(*text)) {
      auto typed = analysis::Compile(stmt.text, info, stmt.origin);
      if (!typed) {
        err_ << analysis::FormatError(typed.error(), file) << "\n";
        failed = true;
      }
    }
    return failed ? kExitCompile : kExitOk;
  }

  int Translate(const std::string& input, const std::string& info_path,
                const std::string& format) {
    erd::ParserInfo info = LoadInfo(info_path);
    auto compiled = CompileAll(input, info);
    bool first = true;
    for (const auto& typed : compiled) {
      if (!first) out_ << "\n";
      first = false;
      plan::QueryPlan p = plan::Translate(typed, info);
      if (format == "plan") {
        out_ << plan::DebugString(p);
        continue;
      }
      plan::RenderedSql sql = plan::Render(p);
      out_ << sql.sql << "\n";
      for (std::size_t i = 0; i < sql.slots.size(); ++i) {
        out_ << plan::DescribeSlot(i, sql.slots[i]) << "\n";
      }
    }
    return kExitOk;
  }

  int Run(const std::string& input, const std::string& info_path,
          const std::vector<std::string>& params,
          const std::optional<std::string>& db_flag) {
    erd::ParserInfo info = LoadInfo(info_path);
    auto compiled = CompileAll(input, info);

    std::map<std::string, std::string> raw;
    for (const auto& p : params) {
      auto eq = p.find('=');
      if (eq == std::string::npos || eq == 0) {
        return Error(kExitCompile, "malformed parameter '" + p +
                                       "'; expected name=value");
      }
      if (!raw.emplace(p.substr(0, eq), p.substr(eq + 1)).second) {
        return Error(kExitCompile,
                     "parameter " + p.substr(0, eq) + " given twice");
      }
    }
    std::vector<plan::QueryPlan> plans;
    std::vector<db::Bindings> bindings;
    std::map<std::string, bool> used;
    for (const auto& typed : compiled) {
      db::Bindings b;
      for (const auto& ph : typed.placeholders()) {
        auto it = raw.find(ph.name);
        if (it == raw.end()) {
          return Error(kExitCompile, "missing parameter: " + ph.name);
        }
        used[ph.name] = true;
        auto v = ParseValueAs(ph.type, it->second);
        if (!v) {
          return Error(kExitCompile, "invalid value for parameter " +
                                         ph.name + " : " +
                                         std::string(TypeName(ph.type)) +
                                         ": " + v.error());
        }
        if (v->is_null() && !ph.nullable_allowed) {
          return Error(kExitCompile,
                       "parameter " + ph.name + " does not allow null");
        }
        b.emplace(ph.name, std::move(v).value());
      }
      plans.push_back(plan::Translate(typed, info));
      bindings.push_back(std::move(b));
    }
    for (const auto& [name, value] : raw) {
      if (!used.count(name)) {
        return Error(kExitCompile, "unknown parameter: " + name);
      }
    }

    fs::path db_path = ResolveDb(info, info_path, db_flag);
    std::error_code ec;
    if (!fs::exists(db_path, ec)) {
      return Error(kExitIo, "database '" + db_path.string() +
                                "' does not exist");
    }
    auto session = db::Session::Open(db_path);
    if (!session) return Error(kExitDatabase, db::ToString(session.error()));
    for (std::size_t i = 0; i < plans.size(); ++i) {
      auto result = db::RunPlan(session->connection(), plans[i], bindings[i]);
      if (!result) return Error(kExitDatabase, db::ToString(result.error()));
      if (!result->is_query) {
        out_ << "affected: " << result->affected << "\n";
        continue;
      }
      for (const auto& row : result->rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          if (c) out_ << "\t";
          out_ << ToDisplay(row[c]);
        }
        out_ << "\n";
      }
    }
    return kExitOk;
  }

 private:
  int Error(int code, const std::string& message) {
    err_ << "erdsql: " << message << "\n";
    return code;
  }

  [[noreturn]] void Abort(int code, const std::string& message) {
    Error(code, message);
    throw Failure{code};
  }

  erd::ParserInfo LoadInfo(const std::string& path) {
    auto info = erd::ReadInfo(path);
    if (!info) {
      const auto& e = info.error();
      if (e.kind == erd::InfoError::Kind::kIo) {
        Abort(kExitIo, e.diag.message);
      }
      std::ostringstream os;
      os << path << ":" << e.diag.pos << ": " << e.diag.message;
      Abort(kExitIo, "malformed info file: " + os.str());
    }
    return std::move(info).value();
  }

  // A path naming a readable file is read as a script; anything else is
  // taken as statement text.
  std::vector<analysis::TypedStatement> CompileAll(
      const std::string& input, const erd::ParserInfo& info) {
    std::string source = "<argument>";
    std::string text = input;
    std::error_code ec;
    if (input.find(';') == std::string::npos &&
        fs::is_regular_file(input, ec)) {
      auto content = ReadFile(input);
      if (!content) Abort(kExitIo, "cannot read '" + input + "'");
      source = input;
      text = *content;
    }
    auto statements = sql::SplitStatements(text);
    if (statements.empty()) Abort(kExitCompile, "no statement given");
    std::vector<analysis::TypedStatement> out;
    bool failed = false;
    for (const auto& stmt : statements) {
      auto typed = analysis::Compile(stmt.text, info, stmt.origin);
      if (!typed) {
        err_ << analysis::FormatError(typed.error(), source) << "\n";
        failed = true;
        continue;
      }
      out.push_back(std::move(typed).value());
    }
    if (failed) throw Failure{kExitCompile};
    return out;
  }

  fs::path ResolveDb(const erd::ParserInfo& info, const std::string& info_path,
                     const std::optional<std::string>& db_flag) {
    if (db_flag) return *db_flag;
    if (env_.db_override) return *env_.db_override;
    fs::path stored(info.db_path);
    if (stored.is_absolute()) return stored;
    return fs::path(info_path).parent_path() / stored;
  }

  std::ostream& out_;
  std::ostream& err_;
  const Environment& env_;
};

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err, const Environment& env) {
  CLI::App app{"ERD-checked SQL compiler and SQLite runner", "erdsql"};
  app.require_subcommand(1);

  std::string erd_file, db_path;
  bool force = false;
  auto* compile = app.add_subcommand(
      "erd-compile", "Create a database and info file from an ER model");
  compile->add_option("file", erd_file, "ER model file")->required();
  compile->add_option("--db", db_path, "Database file to create")->required();
  compile->add_flag("--force", force, "Replace an existing database");

  std::string check_file, info_path;
  auto* check = app.add_subcommand("check", "Check every statement in a file");
  check->add_option("file", check_file, "SQL file")->required();
  check->add_option("--info", info_path, "Info file")->required();

  std::string input, format = "sql";
  auto* translate =
      app.add_subcommand("translate", "Print the SQL for statements");
  translate->add_option("statement", input, "Statement text or SQL file")
      ->required();
  translate->add_option("--info", info_path, "Info file")->required();
  translate->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"sql", "plan"}));

  std::vector<std::string> params;
  std::optional<std::string> run_db;
  auto* run = app.add_subcommand("run", "Execute statements");
  run->add_option("statement", input, "Statement text or SQL file")
      ->required();
  run->add_option("--info", info_path, "Info file")->required();
  run->add_option("--param", params, "Binding name=value")->take_all();
  run->add_option("--db", run_db, "Database file overriding the info file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "erdsql: " << e.what() << "\n";
    return kExitUsage;
  }

  Runner runner(out, err, env);
  try {
    if (*compile) return runner.ErdCompile(erd_file, db_path, force);
    if (*check) return runner.Check(check_file, info_path);
    if (*translate) return runner.Translate(input, info_path, format);
    return runner.Run(input, info_path, params, run_db);
  } catch (const Failure& f) {
    return f.code;
  }
}

}  // namespace erdsql::cli
