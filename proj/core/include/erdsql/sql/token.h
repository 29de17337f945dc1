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

#ifndef ERDSQL_SQL_TOKEN_H_
#define ERDSQL_SQL_TOKEN_H_

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "erdsql/diagnostic.h"

namespace erdsql::sql {

enum class TokenKind {
  kKeyword,
  kIdentifier,
  kInteger,
  kFloat,
  kString,
  kChar,
  kBoolean,
  kOperator,     // = <> < <= > >=
  kPunctuation,  // , . ( ) *
  kPlaceholderOpen,
  kPlaceholderClose,
  kSemicolon,
  kEnd,
};

std::string_view TokenKindName(TokenKind kind);

enum class Keyword {
  kSelect, kDistinct, kAll, kFrom, kAs, kWhere, kAnd, kOr, kNot, kBetween,
  kIs, kNull, kSatisfies, kGroup, kOrder, kBy, kAsc, kDesc, kLimit, kInsert,
  kInto, kValues, kUpdate, kSet, kDelete,
};

std::string_view KeywordSpelling(Keyword kw);
// Case-insensitive. true/false are boolean literals, not keywords.
std::optional<Keyword> LookupKeyword(std::string_view word);
// Keywords plus the boolean literals, i.e. words unusable as identifiers.
bool IsKeyword(std::string_view word);
bool IsIdentifier(std::string_view word);

struct Token {
  TokenKind kind = TokenKind::kEnd;
  // Source text, except for string and char literals where it holds the
  // unescaped payload.
  std::string lexeme;
  SourcePos pos;
  std::optional<Keyword> keyword;

  bool Is(Keyword kw) const { return kind == TokenKind::kKeyword && keyword == kw; }
  bool IsPunct(std::string_view p) const {
    return kind == TokenKind::kPunctuation && lexeme == p;
  }

  friend bool operator==(const Token&, const Token&) = default;
};

std::ostream& operator<<(std::ostream& os, const Token& t);

}  // namespace erdsql::sql

#endif  // ERDSQL_SQL_TOKEN_H_
