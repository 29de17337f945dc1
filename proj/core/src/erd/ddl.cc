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

#include <sstream>

#include "erdsql/erd/schema.h"

namespace erdsql::erd {

std::string_view StorageType(SqlType type) {
  switch (type) {
    case SqlType::kString:
    case SqlType::kChar:
      return "TEXT";
    case SqlType::kFloat:
      return "REAL";
    case SqlType::kInt:
    case SqlType::kBool:
    case SqlType::kDate:
      return "INTEGER";
  }
  return "BLOB";
}

namespace {

std::string Quote(std::string_view ident) {
  std::string out = "\"";
  for (char c : ident) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string EmitDdl(const RelationalSchema& s) {
  std::ostringstream os;
  for (const auto& t : s.tables) {
    std::vector<std::string> lines;
    for (const auto& c : t.columns) {
      std::string line = Quote(c.name) + " " + std::string(StorageType(c.type));
      if (c.primary_key) {
        line += " PRIMARY KEY";
      } else {
        if (c.not_null) line += " NOT NULL";
        if (c.unique) line += " UNIQUE";
      }
      lines.push_back(std::move(line));
    }
    for (const auto& group : t.unique_groups) {
      std::string line = "UNIQUE (";
      for (std::size_t i = 0; i < group.size(); ++i) {
        if (i) line += ", ";
        line += Quote(group[i]);
      }
      lines.push_back(line + ")");
    }
    for (const auto& c : t.columns) {
      if (!c.references) continue;
      lines.push_back("FOREIGN KEY (" + Quote(c.name) + ") REFERENCES " +
                      Quote(c.references->table) + " (" +
                      Quote(c.references->column) + ")");
    }
    os << "CREATE TABLE " << Quote(t.name) << " (\n";
    for (std::size_t i = 0; i < lines.size(); ++i) {
      os << "  " << lines[i] << (i + 1 < lines.size() ? ",\n" : "\n");
    }
    os << ");\n";
  }
  return os.str();
}

}  // namespace erdsql::erd
