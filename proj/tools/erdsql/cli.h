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

#ifndef ERDSQL_TOOLS_CLI_H_
#define ERDSQL_TOOLS_CLI_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace erdsql::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCompile = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitDatabase = 3;
inline constexpr int kExitUsage = 64;

struct Environment {
  // Value of ERDSQL_DB; replaces the database path stored in the info file.
  std::optional<std::string> db_override;
};

// `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err, const Environment& env = {});

}  // namespace erdsql::cli

#endif  // ERDSQL_TOOLS_CLI_H_
