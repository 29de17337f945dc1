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

#ifndef ERDSQL_ERD_ERD_PARSER_H_
#define ERDSQL_ERD_ERD_PARSER_H_

#include <string>
#include <string_view>

#include "erdsql/diagnostic.h"
#include "erdsql/erd/model.h"
#include "erdsql/result.h"

namespace erdsql::erd {

// Parses and validates the textual ER model format (docs/erd-format.md):
//
//   model Uni
//   entity Student {
//     Name  : String
//     Email : String null
//   }
//   relationship has_a role Taking {
//     Student 0..n
//     Result  1..1
//   }
//
// Syntax errors stop at the first one; validation reports every violation.
Result<ERModel, Diagnostics> ParseErd(std::string_view text);

// Canonical text for a model; ParseErd(PrintErd(m)) == m.
std::string PrintErd(const ERModel& m);

}  // namespace erdsql::erd

#endif  // ERDSQL_ERD_ERD_PARSER_H_
