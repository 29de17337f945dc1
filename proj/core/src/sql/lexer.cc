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

#include "erdsql/sql/lexer.h"

#include <cctype>
#include <charconv>
#include <cmath>

#include "erdsql/value.h"

namespace erdsql::sql {

namespace {

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Lexer {
 public:
  Lexer(std::string_view text, SourcePos origin)
      : text_(text), line_(origin.line), col_(origin.column) {}

  Result<std::vector<Token>, Diagnostic> Run() {
    while (true) {
      SkipTrivia();
      if (AtEnd()) {
        Push(TokenKind::kEnd, "", Here());
        return std::move(tokens_);
      }
      if (auto err = LexOne()) return MakeUnexpected(std::move(*err));
    }
  }

 private:
  bool AtEnd() const { return i_ >= text_.size(); }
  char Peek(std::size_t ahead = 0) const {
    return i_ + ahead < text_.size() ? text_[i_ + ahead] : '\0';
  }
  SourcePos Here() const { return {line_, col_}; }

  void Advance() {
    // Columns count code points, not bytes.
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(text_[i_]) & 0xC0) != 0x80) {
      ++col_;
    }
    ++i_;
  }

  void SkipTrivia() {
    while (!AtEnd()) {
      if (std::isspace(static_cast<unsigned char>(Peek()))) {
        Advance();
      } else if (Peek() == '-' && Peek(1) == '-') {
        while (!AtEnd() && Peek() != '\n') Advance();
      } else {
        return;
      }
    }
  }

  void Push(TokenKind kind, std::string lexeme, SourcePos pos,
            std::optional<Keyword> kw = std::nullopt) {
    tokens_.push_back(Token{kind, std::move(lexeme), pos, kw});
  }

  std::optional<Diagnostic> LexOne() {
    SourcePos pos = Here();
    char c = Peek();
    if ((c == 'c' || c == 'C') && Peek(1) == '\'') {
      Advance();
      return LexQuoted(pos, /*is_char=*/true);
    }
    if (IsIdentStart(c)) {
      std::size_t start = i_;
      while (!AtEnd() && IsIdentChar(Peek())) Advance();
      std::string word(text_.substr(start, i_ - start));
      if (auto kw = LookupKeyword(word)) {
        Push(TokenKind::kKeyword, std::move(word), pos, kw);
      } else if (IsKeyword(word)) {
        Push(TokenKind::kBoolean, std::move(word), pos);
      } else {
        Push(TokenKind::kIdentifier, std::move(word), pos);
      }
      return std::nullopt;
    }
    if (IsDigit(c) || (c == '-' && IsDigit(Peek(1)))) return LexNumber(pos);
    if (c == '\'') return LexQuoted(pos, /*is_char=*/false);
    if (c == '{') return LexPlaceholder(pos);
    switch (c) {
      case '=':
        Advance();
        Push(TokenKind::kOperator, "=", pos);
        return std::nullopt;
      case '<':
        Advance();
        if (Peek() == '=' || Peek() == '>') {
          std::string op = std::string("<") + Peek();
          Advance();
          Push(TokenKind::kOperator, std::move(op), pos);
        } else {
          Push(TokenKind::kOperator, "<", pos);
        }
        return std::nullopt;
      case '>':
        Advance();
        if (Peek() == '=') {
          Advance();
          Push(TokenKind::kOperator, ">=", pos);
        } else {
          Push(TokenKind::kOperator, ">", pos);
        }
        return std::nullopt;
      case '!':
        if (Peek(1) == '=') {
          return Diagnostic{pos, "'!=' is not supported; write '<>'"};
        }
        break;
      case ',':
      case '.':
      case '(':
      case ')':
      case '*':
        Advance();
        Push(TokenKind::kPunctuation, std::string(1, c), pos);
        return std::nullopt;
      case ';':
        Advance();
        Push(TokenKind::kSemicolon, ";", pos);
        return std::nullopt;
      case '}':
        return Diagnostic{pos, "'}' without a matching '{'"};
      default:
        break;
    }
    std::string shown = std::isprint(static_cast<unsigned char>(c))
                            ? std::string(1, c)
                            : "\\x" + std::to_string(static_cast<unsigned char>(c));
    return Diagnostic{pos, "illegal character '" + shown + "'"};
  }

  std::optional<Diagnostic> LexNumber(SourcePos pos) {
    std::size_t start = i_;
    if (Peek() == '-') Advance();
    while (IsDigit(Peek())) Advance();
    bool is_float = false;
    if (Peek() == '.' && IsDigit(Peek(1))) {
      is_float = true;
      Advance();
      while (IsDigit(Peek())) Advance();
    }
    if ((Peek() == 'e' || Peek() == 'E') &&
        (IsDigit(Peek(1)) ||
         ((Peek(1) == '+' || Peek(1) == '-') && IsDigit(Peek(2))))) {
      is_float = true;
      Advance();
      if (Peek() == '+' || Peek() == '-') Advance();
      while (IsDigit(Peek())) Advance();
    }
    if (IsIdentChar(Peek())) {
      return Diagnostic{Here(), "unexpected character '" +
                                    std::string(1, Peek()) +
                                    "' after number"};
    }
    std::string_view lexeme = text_.substr(start, i_ - start);
    const char* first = lexeme.data();
    const char* last = first + lexeme.size();
    if (is_float) {
      double d;
      auto [p, ec] = std::from_chars(first, last, d);
      if (ec != std::errc() || p != last || !std::isfinite(d)) {
        return Diagnostic{pos, "float literal out of range"};
      }
      Push(TokenKind::kFloat, std::string(lexeme), pos);
    } else {
      std::int64_t v;
      auto [p, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || p != last) {
        return Diagnostic{pos, "integer literal out of range"};
      }
      Push(TokenKind::kInteger, std::string(lexeme), pos);
    }
    return std::nullopt;
  }

  std::optional<Diagnostic> LexQuoted(SourcePos pos, bool is_char) {
    Advance();  // opening quote
    std::string payload;
    while (true) {
      if (AtEnd()) {
        return Diagnostic{pos, is_char ? "unterminated character literal"
                                       : "unterminated string literal"};
      }
      if (Peek() == '\'') {
        if (Peek(1) == '\'') {
          payload += '\'';
          Advance();
          Advance();
          continue;
        }
        Advance();
        break;
      }
      payload += Peek();
      Advance();
    }
    if (is_char) {
      if (!DecodeSingleUtf8(payload)) {
        return Diagnostic{pos,
                          "character literal must hold exactly one character"};
      }
      Push(TokenKind::kChar, std::move(payload), pos);
    } else {
      Push(TokenKind::kString, std::move(payload), pos);
    }
    return std::nullopt;
  }

  std::optional<Diagnostic> LexPlaceholder(SourcePos pos) {
    Advance();  // {
    Push(TokenKind::kPlaceholderOpen, "{", pos);
    while (Peek() == ' ' || Peek() == '\t') Advance();
    SourcePos name_pos = Here();
    if (!IsIdentStart(Peek())) {
      if (AtEnd() || Peek() == '\n' || Peek() == ';') {
        return Diagnostic{pos, "unterminated placeholder"};
      }
      return Diagnostic{name_pos, "placeholder must contain an identifier"};
    }
    std::size_t start = i_;
    while (!AtEnd() && IsIdentChar(Peek())) Advance();
    std::string name(text_.substr(start, i_ - start));
    if (IsKeyword(name)) {
      return Diagnostic{name_pos, "placeholder name '" + name +
                                      "' is a reserved word"};
    }
    Push(TokenKind::kIdentifier, std::move(name), name_pos);
    while (Peek() == ' ' || Peek() == '\t') Advance();
    if (Peek() != '}') return Diagnostic{pos, "unterminated placeholder"};
    Push(TokenKind::kPlaceholderClose, "}", Here());
    Advance();
    return std::nullopt;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  int line_;
  int col_;
  std::vector<Token> tokens_;
};

}  // namespace

Result<std::vector<Token>, Diagnostic> Tokenize(std::string_view text,
                                                SourcePos origin) {
  return Lexer(text, origin).Run();
}

}  // namespace erdsql::sql
