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

#ifndef ERDSQL_DIAGNOSTIC_H_
#define ERDSQL_DIAGNOSTIC_H_

#include <ostream>
#include <string>
#include <vector>

namespace erdsql {

// 1-based line and column into some source text.
struct SourcePos {
  int line = 1;
  int column = 1;

  friend auto operator<=>(const SourcePos&, const SourcePos&) = default;
};

std::ostream& operator<<(std::ostream& os, const SourcePos& pos);

struct Diagnostic {
  SourcePos pos;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

using Diagnostics = std::vector<Diagnostic>;

// "<line>:<column>: <message>"
std::string FormatDiagnostic(const Diagnostic& d);

}  // namespace erdsql

#endif  // ERDSQL_DIAGNOSTIC_H_
