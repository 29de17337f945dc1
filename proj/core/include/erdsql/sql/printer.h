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

#ifndef ERDSQL_SQL_PRINTER_H_
#define ERDSQL_SQL_PRINTER_H_

#include <string>

#include "erdsql/sql/ast.h"

namespace erdsql::sql {

// Canonical single-line dialect text. Re-parsing the output yields a tree
// equal to the input up to positions.
std::string PrintStatement(const Statement& stmt);
std::string PrintCondition(const Condition& cond);
std::string PrintValue(const ValueExpr& value);

}  // namespace erdsql::sql

#endif  // ERDSQL_SQL_PRINTER_H_
