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

#include "erdsql/analysis/analysis.h"
#include "erdsql/sql/parser.h"

namespace erdsql::analysis {

Result<TypedStatement, AnalysisError> Analyze(const sql::Statement& stmt,
                                              const erd::ParserInfo& info) {
  auto named = ResolveNames(stmt, info);
  if (!named) return MakeUnexpected(std::move(named).error());
  auto checked = CheckConsistency(std::move(named).value(), info);
  if (!checked) return MakeUnexpected(std::move(checked).error());
  return InferTypes(checked.value(), info);
}

Result<TypedStatement, AnalysisError> Compile(std::string_view text,
                                              const erd::ParserInfo& info,
                                              SourcePos origin) {
  auto parsed = sql::ParseStatement(text, origin);
  if (!parsed) {
    const Diagnostic& d = parsed.error().front();
    return MakeUnexpected(AnalysisError{Phase::kSyntax, d.message, d.pos});
  }
  return Analyze(parsed.value(), info);
}

}  // namespace erdsql::analysis
