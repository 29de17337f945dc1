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

#ifndef ERDSQL_SQL_LEXER_H_
#define ERDSQL_SQL_LEXER_H_

#include <string_view>
#include <vector>

#include "erdsql/diagnostic.h"
#include "erdsql/result.h"
#include "erdsql/sql/token.h"

namespace erdsql::sql {

// Splits dialect text into tokens, ending with a kEnd token. `origin` is
// the position of text[0] within a larger document.
//
// Keywords match case-insensitively. A placeholder `{name}` produces three
// tokens (open, identifier, close). `--` starts a comment that runs to the
// end of the line.
Result<std::vector<Token>, Diagnostic> Tokenize(std::string_view text,
                                                SourcePos origin = {});

}  // namespace erdsql::sql

#endif  // ERDSQL_SQL_LEXER_H_
