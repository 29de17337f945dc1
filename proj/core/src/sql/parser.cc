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

#include "erdsql/sql/parser.h"

#include <cctype>
#include <charconv>

#include "erdsql/sql/lexer.h"

namespace erdsql::sql {

namespace {

struct ParseError {
  Diagnostic diag;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Statement ParseStatementTokens() {
    Statement stmt = ParseAnyStatement();
    if (Peek().kind != TokenKind::kSemicolon) Unexpected({"';'"});
    Next();
    if (Peek().kind != TokenKind::kEnd) {
      Fail(Peek().pos, "unexpected " + Describe(Peek()) +
                           " after end of statement");
    }
    return stmt;
  }

 private:
  const Token& Peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(i_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  const Token& Next() {
    const Token& t = toks_[i_];
    if (t.kind != TokenKind::kEnd) ++i_;
    return t;
  }

  static std::string Describe(const Token& t) {
    switch (t.kind) {
      case TokenKind::kEnd:
        return "end of input";
      case TokenKind::kString:
        return "string literal";
      case TokenKind::kChar:
        return "character literal";
      default:
        return "'" + t.lexeme + "'";
    }
  }

  [[noreturn]] void Fail(SourcePos pos, std::string message) {
    throw ParseError{{pos, std::move(message)}};
  }

  // Errors at end of input point at the last real token so that positions
  // stay inside the statement.
  SourcePos ErrorPos(const Token& t) const {
    if (t.kind == TokenKind::kEnd && i_ > 0) return toks_[i_ - 1].pos;
    return t.pos;
  }

  [[noreturn]] void Unexpected(std::initializer_list<std::string_view> expected) {
    std::string msg = "unexpected " + Describe(Peek()) + "; expected ";
    std::size_t n = 0;
    for (auto e : expected) {
      if (n++) msg += n == expected.size() ? " or " : ", ";
      msg += e;
    }
    Fail(ErrorPos(Peek()), std::move(msg));
  }

  bool Accept(Keyword kw) {
    if (Peek().Is(kw)) {
      Next();
      return true;
    }
    return false;
  }

  const Token& Expect(Keyword kw) {
    if (!Peek().Is(kw)) {
      std::string want = "'" + std::string(KeywordSpelling(kw)) + "'";
      Unexpected({want});
    }
    return Next();
  }

  bool AcceptPunct(std::string_view p) {
    if (Peek().IsPunct(p)) {
      Next();
      return true;
    }
    return false;
  }

  void ExpectPunct(std::string_view p) {
    if (!AcceptPunct(p)) {
      std::string want = "'" + std::string(p) + "'";
      Unexpected({want});
    }
  }

  const Token& ExpectIdentifier(std::string_view what) {
    if (Peek().kind != TokenKind::kIdentifier) Unexpected({what});
    return Next();
  }

  Statement ParseAnyStatement() {
    const Token& t = Peek();
    if (t.Is(Keyword::kSelect)) return ParseSelect();
    if (t.Is(Keyword::kInsert)) return ParseInsert();
    if (t.Is(Keyword::kUpdate)) return ParseUpdate();
    if (t.Is(Keyword::kDelete)) return ParseDelete();
    Unexpected({"'Select'", "'Insert'", "'Update'", "'Delete'"});
  }

  ColumnRef ParseColumnRef() {
    const Token& first = ExpectIdentifier("column name");
    ColumnRef c;
    c.pos = first.pos;
    if (AcceptPunct(".")) {
      c.qualifier = first.lexeme;
      c.column = ExpectIdentifier("column name").lexeme;
    } else {
      c.column = first.lexeme;
    }
    return c;
  }

  TableRef ParseTableRef(bool allow_alias) {
    const Token& name = ExpectIdentifier("table name");
    TableRef t{name.lexeme, "", name.pos, {}};
    if (allow_alias && Accept(Keyword::kAs)) {
      const Token& alias = ExpectIdentifier("alias");
      t.alias = alias.lexeme;
      t.alias_pos = alias.pos;
    }
    return t;
  }

  Statement ParseSelect() {
    SelectStmt s;
    s.pos = Expect(Keyword::kSelect).pos;
    if (Accept(Keyword::kDistinct)) {
      s.quantifier = Quantifier::kDistinct;
    } else {
      Accept(Keyword::kAll);
    }
    do {
      SelectItem item;
      item.pos = Peek().pos;
      if (AcceptPunct("*")) {
        item.star = true;
      } else if (Peek().kind == TokenKind::kIdentifier) {
        item.column = ParseColumnRef();
      } else {
        Unexpected({"'*'", "column name"});
      }
      s.projection.push_back(std::move(item));
    } while (AcceptPunct(","));
    Expect(Keyword::kFrom);
    do {
      s.from.push_back(ParseTableRef(/*allow_alias=*/true));
    } while (AcceptPunct(","));
    if (Accept(Keyword::kWhere)) s.where = ParseCondition();
    if (Accept(Keyword::kGroup)) {
      Expect(Keyword::kBy);
      do {
        s.group_by.push_back(ParseColumnRef());
      } while (AcceptPunct(","));
    }
    if (Accept(Keyword::kOrder)) {
      Expect(Keyword::kBy);
      do {
        OrderTerm term{ParseColumnRef(), SortOrder::kAsc};
        if (Accept(Keyword::kDesc)) {
          term.order = SortOrder::kDesc;
        } else {
          Accept(Keyword::kAsc);
        }
        s.order_by.push_back(std::move(term));
      } while (AcceptPunct(","));
    }
    if (Accept(Keyword::kLimit)) {
      const Token& n = Peek();
      if (n.kind != TokenKind::kInteger) Unexpected({"positive integer"});
      std::int64_t limit = std::stoll(n.lexeme);
      if (limit <= 0) Fail(n.pos, "limit must be a positive integer");
      Next();
      s.limit = limit;
    }
    return s;
  }

  Statement ParseInsert() {
    InsertStmt s;
    s.pos = Expect(Keyword::kInsert).pos;
    Expect(Keyword::kInto);
    s.table = ParseTableRef(/*allow_alias=*/false);
    ExpectPunct("(");
    do {
      const Token& col = ExpectIdentifier("column name");
      s.columns.push_back(ColumnRef{"", col.lexeme, col.pos});
    } while (AcceptPunct(","));
    ExpectPunct(")");
    Expect(Keyword::kValues);
    do {
      ExpectPunct("(");
      std::vector<ValueExpr> row;
      do {
        row.push_back(ParseConstantOrPlaceholder());
      } while (AcceptPunct(","));
      ExpectPunct(")");
      s.rows.push_back(std::move(row));
    } while (AcceptPunct(","));
    return s;
  }

  Statement ParseUpdate() {
    UpdateStmt s;
    s.pos = Expect(Keyword::kUpdate).pos;
    s.table = ParseTableRef(/*allow_alias=*/true);
    Expect(Keyword::kSet);
    do {
      Assignment a;
      a.column = ParseColumnRef();
      if (!(Peek().kind == TokenKind::kOperator && Peek().lexeme == "=")) {
        Unexpected({"'='"});
      }
      Next();
      a.value = ParseValue();
      s.assignments.push_back(std::move(a));
    } while (AcceptPunct(","));
    if (Accept(Keyword::kWhere)) s.where = ParseCondition();
    return s;
  }

  Statement ParseDelete() {
    DeleteStmt s;
    s.pos = Expect(Keyword::kDelete).pos;
    Expect(Keyword::kFrom);
    s.table = ParseTableRef(/*allow_alias=*/true);
    if (Accept(Keyword::kWhere)) s.where = ParseCondition();
    return s;
  }

  Condition ParseCondition() {
    std::vector<Condition> terms;
    terms.push_back(ParseConjunction());
    while (Accept(Keyword::kOr)) terms.push_back(ParseConjunction());
    if (terms.size() == 1) return std::move(terms.front());
    return Condition::Junction(Condition::Kind::kOr, std::move(terms));
  }

  Condition ParseConjunction() {
    std::vector<Condition> terms;
    terms.push_back(ParseNegation());
    while (Accept(Keyword::kAnd)) terms.push_back(ParseNegation());
    if (terms.size() == 1) return std::move(terms.front());
    return Condition::Junction(Condition::Kind::kAnd, std::move(terms));
  }

  Condition ParseNegation() {
    if (Peek().Is(Keyword::kNot)) {
      SourcePos pos = Next().pos;
      return Condition::Negate(ParseNegation(), pos);
    }
    return ParsePrimaryCondition();
  }

  Condition ParsePrimaryCondition() {
    if (Peek().IsPunct("(")) {
      Next();
      Condition inner = ParseCondition();
      ExpectPunct(")");
      return inner;
    }
    if (Peek().Is(Keyword::kSatisfies)) {
      SourcePos pos = Next().pos;
      const Token& left = ExpectIdentifier("alias or table name");
      const Token& rel = ExpectIdentifier("relationship name");
      const Token& right = ExpectIdentifier("alias or table name");
      Condition c = Condition::Satisfies(left.lexeme, rel.lexeme, right.lexeme,
                                         pos);
      c.left_pos = left.pos;
      c.relationship_pos = rel.pos;
      c.right_pos = right.pos;
      return c;
    }
    ValueExpr lhs = ParseValue();
    const Token& t = Peek();
    if (t.kind == TokenKind::kOperator) {
      CompareOp op = *ParseCompareOp(t.lexeme);
      Next();
      return Condition::Compare(op, std::move(lhs), ParseValue());
    }
    if (t.Is(Keyword::kBetween)) {
      Next();
      ValueExpr lo = ParseValue();
      Expect(Keyword::kAnd);
      ValueExpr hi = ParseValue();
      return Condition::Between(std::move(lhs), std::move(lo), std::move(hi));
    }
    if (t.Is(Keyword::kIs)) {
      Next();
      bool negated = Accept(Keyword::kNot);
      Expect(Keyword::kNull);
      if (lhs.kind != ValueExpr::Kind::kColumn) {
        Fail(lhs.pos, "'Is Null' requires a column");
      }
      return Condition::IsNull(std::move(lhs.column), negated);
    }
    Unexpected({"comparison operator", "'Between'", "'Is'"});
  }

  ValueExpr ParseConstantOrPlaceholder() {
    const Token& t = Peek();
    if (t.kind == TokenKind::kIdentifier) {
      Unexpected({"literal", "placeholder"});
    }
    return ParseValue();
  }

  ValueExpr ParseValue() {
    const Token& t = Peek();
    switch (t.kind) {
      case TokenKind::kIdentifier:
        return ValueExpr::Column(ParseColumnRef());
      case TokenKind::kInteger:
        Next();
        return ValueExpr::Literal(SqlValue::Int(std::stoll(t.lexeme)), t.pos);
      case TokenKind::kFloat: {
        Next();
        double d = 0;
        std::from_chars(t.lexeme.data(), t.lexeme.data() + t.lexeme.size(), d);
        return ValueExpr::Literal(SqlValue::Float(d), t.pos);
      }
      case TokenKind::kString:
        Next();
        return ValueExpr::Literal(SqlValue::String(t.lexeme), t.pos);
      case TokenKind::kChar:
        Next();
        return ValueExpr::Literal(SqlValue::Char(*DecodeSingleUtf8(t.lexeme)),
                                  t.pos);
      case TokenKind::kBoolean: {
        Next();
        bool b = std::tolower(static_cast<unsigned char>(t.lexeme[0])) == 't';
        return ValueExpr::Literal(SqlValue::Bool(b), t.pos);
      }
      case TokenKind::kPlaceholderOpen: {
        SourcePos pos = Next().pos;
        const Token& name = ExpectIdentifier("placeholder name");
        if (Peek().kind != TokenKind::kPlaceholderClose) Unexpected({"'}'"});
        Next();
        return ValueExpr::Placeholder(name.lexeme, pos);
      }
      case TokenKind::kKeyword:
        if (t.Is(Keyword::kNull)) {
          Next();
          return ValueExpr::Literal(SqlValue::Null(), t.pos);
        }
        break;
      default:
        break;
    }
    Unexpected({"column", "literal", "placeholder"});
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Result<Statement, Diagnostics> ParseStatement(std::string_view text,
                                              SourcePos origin) {
  auto tokens = Tokenize(text, origin);
  if (!tokens) return MakeUnexpected(Diagnostics{tokens.error()});
  try {
    return Parser(std::move(tokens).value()).ParseStatementTokens();
  } catch (const ParseError& e) {
    return MakeUnexpected(Diagnostics{e.diag});
  }
}

std::vector<ScriptStatement> SplitStatements(std::string_view text) {
  std::vector<ScriptStatement> out;
  SourcePos pos{1, 1};
  SourcePos start_pos = pos;
  std::size_t start = 0;
  bool meaningful = false;
  auto advance = [&](std::size_t& i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
      ++pos.column;
    }
    ++i;
  };
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      while (i < text.size() && text[i] != '\n') advance(i);
      continue;
    }
    if (!meaningful && !std::isspace(static_cast<unsigned char>(c))) {
      meaningful = true;
      start = i;
      start_pos = pos;
    }
    if (c == '\'') {
      advance(i);
      while (i < text.size()) {
        if (text[i] == '\'') {
          advance(i);
          if (i < text.size() && text[i] == '\'') {
            advance(i);
            continue;
          }
          break;
        }
        advance(i);
      }
      continue;
    }
    if (c == '{') {
      while (i < text.size() && text[i] != '}' && text[i] != ';' &&
             text[i] != '\n') {
        advance(i);
      }
      if (i < text.size() && text[i] == '}') advance(i);
      continue;
    }
    advance(i);
    if (c == ';') {
      out.push_back({std::string(text.substr(start, i - start)), start_pos});
      meaningful = false;
    }
  }
  if (meaningful) {
    out.push_back({std::string(text.substr(start)), start_pos});
  }
  return out;
}

}  // namespace erdsql::sql
