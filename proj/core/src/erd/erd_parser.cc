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

#include "erdsql/erd/erd_parser.h"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace erdsql::erd {

namespace {

enum class Tok { kWord, kNumber, kSymbol, kEnd };

struct ErdToken {
  Tok kind = Tok::kEnd;
  std::string text;
  SourcePos pos;
};

struct SyntaxError {
  Diagnostic diag;
};

bool WordIs(const ErdToken& t, std::string_view word) {
  if (t.kind != Tok::kWord || t.text.size() != word.size()) return false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(t.text[i])) != word[i]) {
      return false;
    }
  }
  return true;
}

std::string Describe(const ErdToken& t) {
  return t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
}

class ErdLexer {
 public:
  explicit ErdLexer(std::string_view text) : text_(text) {}

  std::vector<ErdToken> Run() {
    std::vector<ErdToken> out;
    while (true) {
      SkipSpaceAndComments();
      SourcePos pos{line_, col_};
      if (i_ >= text_.size()) {
        out.push_back({Tok::kEnd, "", pos});
        return out;
      }
      char c = text_[i_];
      auto uc = static_cast<unsigned char>(c);
      if (std::isalpha(uc) || c == '_') {
        std::size_t start = i_;
        while (i_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[i_])) ||
                text_[i_] == '_')) {
          Advance();
        }
        out.push_back({Tok::kWord, std::string(text_.substr(start, i_ - start)),
                       pos});
      } else if (std::isdigit(uc)) {
        std::size_t start = i_;
        while (i_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[i_]))) {
          Advance();
        }
        out.push_back(
            {Tok::kNumber, std::string(text_.substr(start, i_ - start)), pos});
      } else if (c == '.' && i_ + 1 < text_.size() && text_[i_ + 1] == '.') {
        Advance();
        Advance();
        out.push_back({Tok::kSymbol, "..", pos});
      } else if (c == '{' || c == '}' || c == ':' || c == ';' || c == '*') {
        Advance();
        out.push_back({Tok::kSymbol, std::string(1, c), pos});
      } else {
        throw SyntaxError{{pos, "unexpected character '" + std::string(1, c) +
                                    "'"}};
      }
    }
  }

 private:
  void Advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void SkipSpaceAndComments() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else if (c == '-' && i_ + 1 < text_.size() && text_[i_ + 1] == '-') {
        while (i_ < text_.size() && text_[i_] != '\n') Advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class ErdParser {
 public:
  explicit ErdParser(std::vector<ErdToken> tokens) : toks_(std::move(tokens)) {}

  ERModel Parse(ModelPositions& positions) {
    ExpectWord("model");
    model_.name = ExpectIdentifier("model name").text;
    while (Peek().kind != Tok::kEnd) {
      if (WordIs(Peek(), "entity")) {
        ParseEntity(positions);
      } else if (WordIs(Peek(), "relationship")) {
        ParseRelationship(positions);
      } else {
        Fail(Peek(), "expected 'entity' or 'relationship' but found " +
                         Describe(Peek()));
      }
    }
    return std::move(model_);
  }

 private:
  const ErdToken& Peek() const { return toks_[i_]; }
  const ErdToken& Next() {
    const ErdToken& t = toks_[i_];
    if (t.kind != Tok::kEnd) ++i_;
    return t;
  }

  [[noreturn]] void Fail(const ErdToken& at, std::string message) {
    throw SyntaxError{{at.pos, std::move(message)}};
  }

  void ExpectWord(std::string_view word) {
    if (!WordIs(Peek(), word)) {
      Fail(Peek(), "expected '" + std::string(word) + "' but found " +
                       Describe(Peek()));
    }
    Next();
  }

  void ExpectSymbol(std::string_view sym) {
    if (Peek().kind != Tok::kSymbol || Peek().text != sym) {
      Fail(Peek(), "expected '" + std::string(sym) + "' but found " +
                       Describe(Peek()));
    }
    Next();
  }

  bool AcceptSymbol(std::string_view sym) {
    if (Peek().kind == Tok::kSymbol && Peek().text == sym) {
      Next();
      return true;
    }
    return false;
  }

  const ErdToken& ExpectIdentifier(std::string_view what) {
    if (Peek().kind != Tok::kWord) {
      Fail(Peek(), "expected " + std::string(what) + " but found " +
                       Describe(Peek()));
    }
    return Next();
  }

  std::uint32_t ExpectNumber() {
    const ErdToken& t = Peek();
    std::uint32_t n = 0;
    auto [ptr, ec] =
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
    if (t.kind != Tok::kNumber || ec != std::errc() ||
        ptr != t.text.data() + t.text.size()) {
      Fail(t, "expected a cardinality bound but found " + Describe(t));
    }
    Next();
    return n;
  }

  void ParseEntity(ModelPositions& positions) {
    Next();  // entity
    const ErdToken& name = ExpectIdentifier("entity name");
    Entity e{name.text, {}};
    positions.entities.push_back(name.pos);
    positions.attributes.emplace_back();
    ExpectSymbol("{");
    while (!AcceptSymbol("}")) {
      const ErdToken& attr = ExpectIdentifier("attribute name or '}'");
      Attribute a;
      a.name = attr.text;
      ExpectSymbol(":");
      const ErdToken& domain = ExpectIdentifier("attribute domain");
      auto type = ParseTypeName(domain.text);
      if (!type) {
        Fail(domain, "unknown domain '" + domain.text +
                         "' (expected String, Int, Float, Char, Bool or Date)");
      }
      a.domain = *type;
      while (true) {
        if (WordIs(Peek(), "key") || WordIs(Peek(), "unique")) {
          if (a.key != KeyStatus::kNoKey) {
            Fail(Peek(), "attribute '" + a.name + "' has more than one key "
                                                   "modifier");
          }
          a.key = WordIs(Peek(), "key") ? KeyStatus::kPrimaryKey
                                        : KeyStatus::kUnique;
          Next();
        } else if (WordIs(Peek(), "null")) {
          a.nullable = true;
          Next();
        } else {
          break;
        }
      }
      AcceptSymbol(";");
      e.attributes.push_back(std::move(a));
      positions.attributes.back().push_back(attr.pos);
    }
    model_.entities.push_back(std::move(e));
  }

  Endpoint ParseEndpoint(SourcePos& pos) {
    const ErdToken& entity = ExpectIdentifier("endpoint entity");
    pos = entity.pos;
    Endpoint ep{entity.text, {}};
    ep.cardinality.min = ExpectNumber();
    if (AcceptSymbol("..")) {
      if (WordIs(Peek(), "n")) {
        Next();
        ep.cardinality.max = std::nullopt;
      } else if (AcceptSymbol("*")) {
        ep.cardinality.max = std::nullopt;
      } else {
        ep.cardinality.max = ExpectNumber();
      }
    } else {
      ep.cardinality.max = ep.cardinality.min;
    }
    AcceptSymbol(";");
    return ep;
  }

  void ParseRelationship(ModelPositions& positions) {
    Next();  // relationship
    const ErdToken& name = ExpectIdentifier("relationship name");
    Relationship r;
    r.name = name.text;
    if (WordIs(Peek(), "role")) {
      Next();
      r.role = ExpectIdentifier("role name").text;
    }
    ExpectSymbol("{");
    std::pair<SourcePos, SourcePos> ep_pos;
    r.a = ParseEndpoint(ep_pos.first);
    r.b = ParseEndpoint(ep_pos.second);
    ExpectSymbol("}");
    positions.relationships.push_back(name.pos);
    positions.endpoints.push_back(ep_pos);
    model_.relationships.push_back(std::move(r));
  }

  std::vector<ErdToken> toks_;
  std::size_t i_ = 0;
  ERModel model_;
};

}  // namespace

Result<ERModel, Diagnostics> ParseErd(std::string_view text) {
  ModelPositions positions;
  ERModel model;
  try {
    ErdParser parser(ErdLexer(text).Run());
    model = parser.Parse(positions);
  } catch (const SyntaxError& e) {
    return MakeUnexpected(Diagnostics{e.diag});
  }
  Diagnostics diags = ValidateModel(model, &positions);
  if (!diags.empty()) return MakeUnexpected(std::move(diags));
  return model;
}

std::string PrintErd(const ERModel& m) {
  std::ostringstream os;
  os << "model " << m.name << "\n";
  for (const auto& e : m.entities) {
    os << "\nentity " << e.name << " {\n";
    for (const auto& a : e.attributes) {
      os << "  " << a.name << " : " << TypeName(a.domain);
      if (a.key == KeyStatus::kPrimaryKey) os << " key";
      if (a.key == KeyStatus::kUnique) os << " unique";
      if (a.nullable) os << " null";
      os << "\n";
    }
    os << "}\n";
  }
  for (const auto& r : m.relationships) {
    os << "\nrelationship " << r.name;
    if (!r.role.empty()) os << " role " << r.role;
    os << " {\n";
    for (const Endpoint* ep : {&r.a, &r.b}) {
      os << "  " << ep->entity << " " << ToString(ep->cardinality) << "\n";
    }
    os << "}\n";
  }
  return os.str();
}

}  // namespace erdsql::erd
