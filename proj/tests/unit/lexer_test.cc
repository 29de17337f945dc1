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

#include "erdsql/sql/lexer.h"
#include "erdsql/value.h"

namespace erdsql::sql {
namespace {

std::vector<TokenKind> Kinds(std::string_view text) {
  auto tokens = Tokenize(text);
  EXPECT_TRUE(tokens.ok()) << (tokens.ok() ? "" : tokens.error().message);
  std::vector<TokenKind> out;
  if (tokens.ok()) {
    for (const auto& t : *tokens) out.push_back(t.kind);
  }
  return out;
}

std::string LexError(std::string_view text) {
  auto tokens = Tokenize(text);
  if (tokens.ok()) return "<accepted>";
  return FormatDiagnostic(tokens.error());
}

using K = TokenKind;

TEST(LexerTest, ClassifiesTokens) {
  EXPECT_EQ(Kinds("select s.Age From Student as s where s.Age >= {x};"),
            (std::vector<K>{K::kKeyword, K::kIdentifier, K::kPunctuation,
                            K::kIdentifier, K::kKeyword, K::kIdentifier,
                            K::kKeyword, K::kIdentifier, K::kKeyword,
                            K::kIdentifier, K::kPunctuation, K::kIdentifier,
                            K::kOperator, K::kPlaceholderOpen, K::kIdentifier,
                            K::kPlaceholderClose, K::kSemicolon, K::kEnd}));
  EXPECT_EQ(Kinds("-3 2.5 1e3 'a''b' c'x' TRUE null"),
            (std::vector<K>{K::kInteger, K::kFloat, K::kFloat, K::kString,
                            K::kChar, K::kBoolean, K::kKeyword, K::kEnd}));
}

TEST(LexerTest, KeywordsAreCaseInsensitive) {
  auto tokens = Tokenize("SeLeCt DISTINCT satisfies");
  ASSERT_TRUE(tokens.ok());
  EXPECT_TRUE((*tokens)[0].Is(Keyword::kSelect));
  EXPECT_TRUE((*tokens)[1].Is(Keyword::kDistinct));
  EXPECT_TRUE((*tokens)[2].Is(Keyword::kSatisfies));
}

TEST(LexerTest, UnescapesLiterals) {
  auto tokens = Tokenize("'it''s' c''''");
  ASSERT_TRUE(tokens.ok());
  EXPECT_EQ((*tokens)[0].lexeme, "it's");
  EXPECT_EQ((*tokens)[1].lexeme, "'");
}

TEST(LexerTest, PositionsCountCodePoints) {
  auto tokens = Tokenize("'\xc3\xa9\xc3\xa9' x\n  -- comment\n  y", {3, 5});
  ASSERT_TRUE(tokens.ok());
  EXPECT_EQ((*tokens)[0].pos, (SourcePos{3, 5}));
  EXPECT_EQ((*tokens)[1].pos, (SourcePos{3, 10}));
  EXPECT_EQ((*tokens)[2].pos, (SourcePos{5, 3}));
}

TEST(LexerTest, Errors) {
  EXPECT_EQ(LexError("a != b"), "1:3: '!=' is not supported; write '<>'");
  EXPECT_EQ(LexError("'abc"), "1:1: unterminated string literal");
  EXPECT_EQ(LexError("c'ab'"),
            "1:1: character literal must hold exactly one character");
  EXPECT_EQ(LexError("a # b"), "1:3: illegal character '#'");
  EXPECT_EQ(LexError("12ab"), "1:3: unexpected character 'a' after number");
  EXPECT_EQ(LexError("{ }"), "1:3: placeholder must contain an identifier");
  EXPECT_EQ(LexError("{x"), "1:1: unterminated placeholder");
  EXPECT_EQ(LexError("{select}"), "1:2: placeholder name 'select' is a reserved word");
  EXPECT_EQ(LexError("99999999999999999999"), "1:1: integer literal out of range");
}

// Random token sequences printed with single spaces lex back to the same
// kinds, payloads and columns.
TEST(LexerTest, RandomTokenStreamsRoundTrip) {
  std::mt19937 rng(23);
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  const char* idents[] = {"s", "Student", "a_1", "Key", "x"};
  const char* keywords[] = {"Select", "from", "WHERE", "and", "Satisfies", "limit"};
  const char* ops[] = {"=", "<>", "<", "<=", ">", ">="};
  const char* puncts[] = {",", ".", "(", ")", "*"};
  for (int round = 0; round < 300; ++round) {
    std::string text;
    std::vector<std::pair<TokenKind, std::string>> expected;
    std::vector<int> columns;
    int n = 1 + pick(12);
    for (int i = 0; i < n; ++i) {
      if (!text.empty()) text += ' ';
      int col = static_cast<int>(text.size()) + 1;
      std::string spelled, payload;
      TokenKind kind;
      switch (pick(9)) {
        case 0:
          spelled = payload = idents[pick(5)];
          kind = K::kIdentifier;
          break;
        case 1:
          spelled = payload = keywords[pick(6)];
          kind = K::kKeyword;
          break;
        case 2:
          spelled = payload = std::to_string(pick(2000) - 1000);
          kind = K::kInteger;
          break;
        case 3:
          spelled = payload = FormatFloat((pick(2000) - 1000) / 8.0);
          kind = K::kFloat;
          break;
        case 4: {
          payload = pick(2) ? "it's" : "a;b--c";
          spelled = ToLiteral(SqlValue::String(payload));
          kind = K::kString;
          break;
        }
        case 5:
          spelled = payload = ops[pick(6)];
          kind = K::kOperator;
          break;
        case 6:
          spelled = payload = puncts[pick(5)];
          kind = K::kPunctuation;
          break;
        case 7:
          spelled = payload = pick(2) ? "true" : "false";
          kind = K::kBoolean;
          break;
        default:
          payload = "x";
          spelled = "c'x'";
          kind = K::kChar;
          break;
      }
      text += spelled;
      expected.emplace_back(kind, payload);
      columns.push_back(col);
    }
    auto tokens = Tokenize(text);
    ASSERT_TRUE(tokens.ok()) << text;
    ASSERT_EQ(tokens->size(), expected.size() + 1) << text;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      EXPECT_EQ((*tokens)[i].kind, expected[i].first) << text;
      EXPECT_EQ((*tokens)[i].lexeme, expected[i].second) << text;
      EXPECT_EQ((*tokens)[i].pos.column, columns[i]) << text;
    }
    EXPECT_EQ(tokens->back().kind, K::kEnd);
  }
}

}  // namespace
}  // namespace erdsql::sql
