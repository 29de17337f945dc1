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

#include "erdsql/erd/parser_info.h"

#include <fstream>
#include <set>
#include <sstream>

namespace erdsql::erd {

namespace {

constexpr std::string_view kMagic = "erdsql-info 1";

}  // namespace

std::string QualifiedName(std::string_view table, std::string_view column) {
  std::string out(table);
  out += '.';
  out += column;
  return out;
}

bool ParserInfo::HasTable(std::string_view table) const {
  return attribute_lists.find(std::string(table)) != attribute_lists.end();
}

const std::vector<std::string>* ParserInfo::Columns(
    std::string_view table) const {
  auto it = attribute_lists.find(std::string(table));
  return it == attribute_lists.end() ? nullptr : &it->second;
}

std::optional<SqlType> ParserInfo::ColumnType(std::string_view table,
                                              std::string_view column) const {
  auto it = attribute_types.find(QualifiedName(table, column));
  if (it == attribute_types.end()) return std::nullopt;
  return it->second;
}

bool ParserInfo::IsNullable(std::string_view table,
                            std::string_view column) const {
  auto it = nullable_flags.find(QualifiedName(table, column));
  return it != nullable_flags.end() && it->second;
}

const RelationInfo* ParserInfo::FindRelation(std::string_view name) const {
  auto it = relation_types.find(std::string(name));
  return it == relation_types.end() ? nullptr : &it->second;
}

ParserInfo BuildParserInfo(const ERModel& m, const RelationalSchema& s,
                           std::string db_path) {
  ParserInfo info;
  info.db_path = std::move(db_path);
  info.model_name = m.name;
  for (const auto& r : m.relationships) {
    RelationshipLayout layout = LayoutRelationship(r);
    info.relation_types[r.name] =
        RelationInfo{r.a.entity, r.b.entity, layout.kind, layout.side,
                     std::move(layout.columns)};
  }
  for (const auto& t : s.tables) {
    auto& list = info.attribute_lists[t.name];
    for (const auto& c : t.columns) {
      list.push_back(c.name);
      std::string key = QualifiedName(t.name, c.name);
      info.nullable_flags[key] = !c.not_null;
      info.attribute_types[key] = c.type;
    }
  }
  return info;
}

Diagnostics CheckParserInfo(const ParserInfo& info) {
  Diagnostics out;
  std::set<std::string> listed;
  for (const auto& [table, columns] : info.attribute_lists) {
    for (const auto& c : columns) {
      std::string key = QualifiedName(table, c);
      listed.insert(key);
      if (!info.attribute_types.count(key)) {
        out.push_back({{0, 0}, "column '" + key + "' has no type"});
      }
      if (!info.nullable_flags.count(key)) {
        out.push_back({{0, 0}, "column '" + key + "' has no nullable flag"});
      }
    }
  }
  for (const auto& [key, type] : info.attribute_types) {
    if (!listed.count(key)) {
      out.push_back({{0, 0}, "type given for unlisted column '" + key + "'"});
    }
  }
  for (const auto& [key, flag] : info.nullable_flags) {
    if (!listed.count(key)) {
      out.push_back({{0, 0}, "nullable flag given for unlisted column '" + key + "'"});
    }
  }
  for (const auto& [name, rel] : info.relation_types) {
    if (!info.HasTable(rel.entity_a) || !info.HasTable(rel.entity_b)) {
      out.push_back({{0, 0}, "relation '" + name + "' names an unknown table"});
    }
    std::size_t want = rel.side == FkSide::kJoinTable ? 2 : 1;
    if (rel.columns.size() != want) {
      out.push_back({{0, 0}, "relation '" + name +
                                 "' has the wrong number of key columns"});
    }
  }
  return out;
}

std::string FormatInfo(const ParserInfo& info) {
  std::ostringstream os;
  os << kMagic << "\n";
  os << "db " << info.db_path << "\n";
  os << "model " << info.model_name << "\n";
  os << "[relations]\n";
  for (const auto& [name, rel] : info.relation_types) {
    os << name << " " << rel.entity_a << " " << rel.entity_b << " "
       << RelKindName(rel.kind) << " " << FkSideName(rel.side);
    for (const auto& c : rel.columns) os << " " << c;
    os << "\n";
  }
  os << "[nullable]\n";
  for (const auto& [col, flag] : info.nullable_flags) {
    os << col << " " << (flag ? "true" : "false") << "\n";
  }
  os << "[attributes]\n";
  for (const auto& [table, columns] : info.attribute_lists) {
    os << table;
    for (const auto& c : columns) os << " " << c;
    os << "\n";
  }
  os << "[types]\n";
  for (const auto& [col, type] : info.attribute_types) {
    os << col << " " << TypeName(type) << "\n";
  }
  os << "end\n";
  return os.str();
}

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::vector<std::string_view> Words(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ') ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

class InfoReader {
 public:
  explicit InfoReader(std::string_view text) {
    int number = 1;
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) {
        lines_.push_back({number, text.substr(start)});
        break;
      }
      lines_.push_back({number++, text.substr(start, end - start)});
      start = end + 1;
    }
    eof_line_ = number;
  }

  Result<ParserInfo, InfoError> Read() {
    ParserInfo info;
    if (!ExpectExact(kMagic)) return Fail("missing 'erdsql-info 1' header");
    auto db = ExpectPrefixed("db ");
    if (!db) return Fail("expected 'db <path>'");
    info.db_path = std::string(*db);
    auto model = ExpectPrefixed("model ");
    if (!model) return Fail("expected 'model <name>'");
    info.model_name = std::string(*model);

    if (!ExpectExact("[relations]")) return Fail("expected '[relations]'");
    while (!AtSection()) {
      auto w = Words(Current().text);
      if (w.size() < 6 || w.size() > 7) return Fail("malformed relation entry");
      auto kind = ParseRelKind(w[3]);
      auto side = ParseFkSide(w[4]);
      if (!kind || !side) return Fail("malformed relation kind or side");
      RelationInfo rel{std::string(w[1]), std::string(w[2]), *kind, *side, {}};
      for (std::size_t i = 5; i < w.size(); ++i) {
        rel.columns.emplace_back(w[i]);
      }
      info.relation_types[std::string(w[0])] = std::move(rel);
      ++pos_;
    }

    if (!ExpectExact("[nullable]")) return Fail("expected '[nullable]'");
    while (!AtSection()) {
      auto w = Words(Current().text);
      if (w.size() != 2 || (w[1] != "true" && w[1] != "false")) {
        return Fail("malformed nullable entry");
      }
      info.nullable_flags[std::string(w[0])] = w[1] == "true";
      ++pos_;
    }

    if (!ExpectExact("[attributes]")) return Fail("expected '[attributes]'");
    while (!AtSection()) {
      auto w = Words(Current().text);
      if (w.size() < 2) return Fail("malformed attribute list");
      auto& list = info.attribute_lists[std::string(w[0])];
      for (std::size_t i = 1; i < w.size(); ++i) list.emplace_back(w[i]);
      ++pos_;
    }

    if (!ExpectExact("[types]")) return Fail("expected '[types]'");
    while (!AtSection()) {
      auto w = Words(Current().text);
      if (w.size() != 2) return Fail("malformed type entry");
      auto type = ParseTypeName(w[1]);
      if (!type) return Fail("unknown type '" + std::string(w[1]) + "'");
      info.attribute_types[std::string(w[0])] = *type;
      ++pos_;
    }
    if (!ExpectExact("end")) return Fail("expected 'end' (truncated file?)");
    if (pos_ != lines_.size()) return Fail("unexpected text after 'end'");

    Diagnostics problems = CheckParserInfo(info);
    if (!problems.empty()) {
      return MakeUnexpected(InfoError{
          InfoError::Kind::kMalformed,
          {{eof_line_, 1}, "inconsistent info file: " + problems[0].message}});
    }
    return info;
  }

 private:
  bool AtEnd() const { return pos_ >= lines_.size(); }
  const Line& Current() const { return lines_[pos_]; }

  // True at a section header, the end marker, or end of input.
  bool AtSection() const {
    if (AtEnd()) return true;
    std::string_view t = Current().text;
    return t == "end" || (!t.empty() && t.front() == '[');
  }

  bool ExpectExact(std::string_view text) {
    if (AtEnd() || Current().text != text) return false;
    ++pos_;
    return true;
  }

  std::optional<std::string_view> ExpectPrefixed(std::string_view prefix) {
    if (AtEnd()) return std::nullopt;
    std::string_view t = Current().text;
    if (t.substr(0, prefix.size()) != prefix || t.size() == prefix.size()) {
      return std::nullopt;
    }
    ++pos_;
    return t.substr(prefix.size());
  }

  Unexpected<InfoError> Fail(std::string message) {
    int line = AtEnd() ? eof_line_ : Current().number;
    return {InfoError{InfoError::Kind::kMalformed, {{line, 1}, std::move(message)}}};
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  int eof_line_ = 1;
};

}  // namespace

Result<ParserInfo, InfoError> ParseInfo(std::string_view text) {
  return InfoReader(text).Read();
}

Result<Unit, InfoError> WriteInfo(const std::filesystem::path& path,
                                  const ParserInfo& info) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return MakeUnexpected(InfoError{
        InfoError::Kind::kIo, {{0, 0}, "cannot open '" + path.string() +
                                           "' for writing"}});
  }
  out << FormatInfo(info);
  out.flush();
  if (!out) {
    return MakeUnexpected(InfoError{
        InfoError::Kind::kIo, {{0, 0}, "write to '" + path.string() +
                                           "' failed"}});
  }
  return Unit{};
}

Result<ParserInfo, InfoError> ReadInfo(const std::filesystem::path& path) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) {
    return MakeUnexpected(InfoError{
        InfoError::Kind::kIo, {{0, 0}, "'" + path.string() + "' is a directory"}});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return MakeUnexpected(InfoError{
        InfoError::Kind::kIo, {{0, 0}, "cannot open '" + path.string() + "'"}});
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseInfo(buf.str());
}

}  // namespace erdsql::erd
