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

#ifndef ERDSQL_SQL_PARSER_H_
#define ERDSQL_SQL_PARSER_H_

#include <string>
#include <string_view>
#include <vector>

#include "erdsql/diagnostic.h"
#include "erdsql/result.h"
#include "erdsql/sql/ast.h"

namespace erdsql::sql {

// Parses exactly one statement terminated by ';'. The grammar is in
// docs/sql-grammar.ebnf. Parsing stops at the first error.
Result<Statement, Diagnostics> ParseStatement(std::string_view text,
                                              SourcePos origin = {});

// One ';'-terminated chunk of a multi-statement source.
struct ScriptStatement {
  std::string text;
  SourcePos origin;
};

// Splits on ';' outside of literals, placeholders and comments. Chunks
// holding only whitespace or comments are dropped; a trailing chunk
// without ';' is kept so the parser can report it.
std::vector<ScriptStatement> SplitStatements(std::string_view text);

}  // namespace erdsql::sql

#endif  // ERDSQL_SQL_PARSER_H_
