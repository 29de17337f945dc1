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

#include "erdsql/analysis/named_ast.h"

#include <sstream>

namespace erdsql::analysis {

std::string ToString(const TableInstance& t) {
  return t.table + "#" + std::to_string(t.number);
}

std::string_view PhaseName(Phase phase) {
  switch (phase) {
    case Phase::kSyntax:
      return "syntax";
    case Phase::kNamer:
      return "namer";
    case Phase::kConsistency:
      return "consistency";
    case Phase::kTyper:
      return "typer";
  }
  return "?";
}

std::string FormatError(const AnalysisError& e, std::string_view source) {
  std::ostringstream os;
  os << source << ":" << e.pos << ": " << PhaseName(e.phase)
     << " error: " << e.message;
  return os.str();
}

const PlaceholderInfo* TypedStatement::FindPlaceholder(
    std::string_view name) const {
  for (const auto& p : placeholders_) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

}  // namespace erdsql::analysis
