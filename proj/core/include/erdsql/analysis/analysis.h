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

#ifndef ERDSQL_ANALYSIS_ANALYSIS_H_
#define ERDSQL_ANALYSIS_ANALYSIS_H_

#include <string_view>

#include "erdsql/analysis/named_ast.h"
#include "erdsql/erd/parser_info.h"
#include "erdsql/result.h"
#include "erdsql/sql/ast.h"

namespace erdsql::analysis {

// Namer: replaces pseudonyms by numbered table instances, resolves
// unqualified columns against the From tables and expands `*`.
//
// Fails when a pseudonym is defined for more than one table, used without
// being defined (or shadowed by its table's pseudonym), or defined but never
// used, and when an unqualified column is ambiguous or owned by no table.
Result<NamedStatement, AnalysisError> ResolveNames(const sql::Statement& stmt,
                                                   const erd::ParserInfo& info);

// Consistency: every table, column and relationship must exist in the
// model; Satisfies must name the relationship's endpoints in declaration
// order, may not sit under Not, and a many-to-many Satisfies may not sit
// under Or; null literals are only allowed as Insert/Update values of
// nullable columns; Insert must cover every NOT NULL column except Key.
Result<CheckedStatement, AnalysisError> CheckConsistency(
    NamedStatement stmt, const erd::ParserInfo& info);

// Typer: types columns from the model and literals from their spelling,
// and infers each placeholder's type from the column or literal it meets.
// Int and Float never unify.
Result<TypedStatement, AnalysisError> InferTypes(const CheckedStatement& stmt,
                                                 const erd::ParserInfo& info);

// Runs the three phases above in order.
Result<TypedStatement, AnalysisError> Analyze(const sql::Statement& stmt,
                                              const erd::ParserInfo& info);

// Parses one statement and analyzes it; syntax errors use Phase::kSyntax.
Result<TypedStatement, AnalysisError> Compile(std::string_view text,
                                              const erd::ParserInfo& info,
                                              SourcePos origin = {});

}  // namespace erdsql::analysis

#endif  // ERDSQL_ANALYSIS_ANALYSIS_H_
