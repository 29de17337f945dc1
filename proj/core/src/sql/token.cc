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

#include "erdsql/sql/token.h"

#include <array>
#include <cctype>

namespace erdsql::sql {

namespace {

struct KeywordEntry {
  Keyword kw;
  std::string_view spelling;
};

constexpr std::array kKeywords = {
    KeywordEntry{Keyword::kSelect, "Select"},
    KeywordEntry{Keyword::kDistinct, "Distinct"},
    KeywordEntry{Keyword::kAll, "All"},
    KeywordEntry{Keyword::kFrom, "From"},
    KeywordEntry{Keyword::kAs, "As"},
    KeywordEntry{Keyword::kWhere, "Where"},
    KeywordEntry{Keyword::kAnd, "And"},
    KeywordEntry{Keyword::kOr, "Or"},
    KeywordEntry{Keyword::kNot, "Not"},
    KeywordEntry{Keyword::kBetween, "Between"},
    KeywordEntry{Keyword::kIs, "Is"},
    KeywordEntry{Keyword::kNull, "Null"},
    KeywordEntry{Keyword::kSatisfies, "Satisfies"},
    KeywordEntry{Keyword::kGroup, "Group"},
    KeywordEntry{Keyword::kOrder, "Order"},
    KeywordEntry{Keyword::kBy, "By"},
    KeywordEntry{Keyword::kAsc, "Asc"},
    KeywordEntry{Keyword::kDesc, "Desc"},
    KeywordEntry{Keyword::kLimit, "Limit"},
    KeywordEntry{Keyword::kInsert, "Insert"},
    KeywordEntry{Keyword::kInto, "Into"},
    KeywordEntry{Keyword::kValues, "Values"},
    KeywordEntry{Keyword::kUpdate, "Update"},
    KeywordEntry{Keyword::kSet, "Set"},
    KeywordEntry{Keyword::kDelete, "Delete"},
};

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kKeyword:
      return "keyword";
    case TokenKind::kIdentifier:
      return "identifier";
    case TokenKind::kInteger:
      return "integer";
    case TokenKind::kFloat:
      return "float";
    case TokenKind::kString:
      return "string";
    case TokenKind::kChar:
      return "char";
    case TokenKind::kBoolean:
      return "boolean";
    case TokenKind::kOperator:
      return "operator";
    case TokenKind::kPunctuation:
      return "punctuation";
    case TokenKind::kPlaceholderOpen:
      return "placeholder-open";
    case TokenKind::kPlaceholderClose:
      return "placeholder-close";
    case TokenKind::kSemicolon:
      return "semicolon";
    case TokenKind::kEnd:
      return "end of input";
  }
  return "?";
}

std::string_view KeywordSpelling(Keyword kw) {
  for (const auto& e : kKeywords) {
    if (e.kw == kw) return e.spelling;
  }
  return "?";
}

std::optional<Keyword> LookupKeyword(std::string_view word) {
  for (const auto& e : kKeywords) {
    if (EqualsIgnoreCase(e.spelling, word)) return e.kw;
  }
  return std::nullopt;
}

bool IsKeyword(std::string_view word) {
  return LookupKeyword(word).has_value() || EqualsIgnoreCase(word, "true") ||
         EqualsIgnoreCase(word, "false");
}

bool IsIdentifier(std::string_view word) {
  if (word.empty()) return false;
  auto first = static_cast<unsigned char>(word[0]);
  if (!std::isalpha(first) && first != '_') return false;
  for (char c : word) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && u != '_') return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Token& t) {
  os << TokenKindName(t.kind);
  if (t.kind != TokenKind::kEnd) os << " '" << t.lexeme << "'";
  return os << " at " << t.pos;
}

}  // namespace erdsql::sql
