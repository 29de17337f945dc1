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

#ifndef ERDSQL_VALUE_H_
#define ERDSQL_VALUE_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "erdsql/result.h"

namespace erdsql {

// The closed set of column types exchanged with the database.
enum class SqlType { kString, kInt, kFloat, kChar, kBool, kDate };

inline constexpr SqlType kAllSqlTypes[] = {SqlType::kString, SqlType::kInt,
                                           SqlType::kFloat,  SqlType::kChar,
                                           SqlType::kBool,   SqlType::kDate};

// "String", "Int", "Float", "Char", "Bool", "Date".
std::string_view TypeName(SqlType type);
std::optional<SqlType> ParseTypeName(std::string_view name);
std::ostream& operator<<(std::ostream& os, SqlType type);

// Types that admit ordering comparisons with Between.
bool IsNumeric(SqlType type);

// Seconds since the Unix epoch.
struct Date {
  std::int64_t epoch_seconds = 0;
  friend auto operator<=>(const Date&, const Date&) = default;
};

// A tagged database value. Null carries no type.
class SqlValue {
 public:
  SqlValue() = default;

  static SqlValue Null() { return SqlValue(); }
  static SqlValue String(std::string s) {
    return SqlValue(Storage(std::in_place_index<1>, std::move(s)));
  }
  static SqlValue Int(std::int64_t i) {
    return SqlValue(Storage(std::in_place_index<2>, i));
  }
  static SqlValue Float(double d) {
    return SqlValue(Storage(std::in_place_index<3>, d));
  }
  static SqlValue Char(char32_t c) {
    return SqlValue(Storage(std::in_place_index<4>, c));
  }
  static SqlValue Bool(bool b) {
    return SqlValue(Storage(std::in_place_index<5>, b));
  }
  static SqlValue FromDate(Date d) {
    return SqlValue(Storage(std::in_place_index<6>, d));
  }

  bool is_null() const { return storage_.index() == 0; }
  // Empty for null.
  std::optional<SqlType> type() const;
  bool HasType(SqlType t) const { return type() == t; }

  const std::string& as_string() const { return std::get<1>(storage_); }
  std::int64_t as_int() const { return std::get<2>(storage_); }
  double as_float() const { return std::get<3>(storage_); }
  char32_t as_char() const { return std::get<4>(storage_); }
  bool as_bool() const { return std::get<5>(storage_); }
  Date as_date() const { return std::get<6>(storage_); }

  friend bool operator==(const SqlValue&, const SqlValue&) = default;
  // Total order used for sorting in tests and tools: null first, then by
  // type tag, then by payload.
  friend std::partial_ordering operator<=>(const SqlValue& a,
                                           const SqlValue& b) {
    return a.storage_ <=> b.storage_;
  }

 private:
  using Storage = std::variant<std::monostate, std::string, std::int64_t,
                               double, char32_t, bool, Date>;
  explicit SqlValue(Storage s) : storage_(std::move(s)) {}

  Storage storage_;
};

// Dialect literal spelling: 'it''s', c'x', 2.0, 17, true, null.
// Dates have no literal form and print as their epoch seconds.
std::string ToLiteral(const SqlValue& v);

// Plain rendering for result tables: strings unquoted, null as "null".
std::string ToDisplay(const SqlValue& v);

std::ostream& operator<<(std::ostream& os, const SqlValue& v);

// Shortest decimal text that reads back as the same double and always
// contains a '.' or an exponent.
std::string FormatFloat(double d);

// Parses textual input (e.g. a command-line binding) as a value of `type`.
// The word "null" yields SqlValue::Null() for every type. Dates accept
// epoch seconds or YYYY-MM-DD[THH:MM:SS].
Result<SqlValue, std::string> ParseValueAs(SqlType type, std::string_view text);

std::string EncodeUtf8(char32_t c);
// The code point if `s` holds exactly one well-formed UTF-8 sequence.
std::optional<char32_t> DecodeSingleUtf8(std::string_view s);

// Civil date conversion for the YYYY-MM-DD binding syntax.
std::int64_t DaysFromCivil(std::int64_t y, unsigned m, unsigned d);

}  // namespace erdsql

#endif  // ERDSQL_VALUE_H_
