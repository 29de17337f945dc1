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

#include "erdsql/value.h"

#include <charconv>
#include <cmath>
#include <sstream>

#include "erdsql/diagnostic.h"

namespace erdsql {

std::ostream& operator<<(std::ostream& os, const SourcePos& pos) {
  return os << pos.line << ":" << pos.column;
}

std::string FormatDiagnostic(const Diagnostic& d) {
  std::ostringstream os;
  os << d.pos << ": " << d.message;
  return os.str();
}

std::string_view TypeName(SqlType type) {
  switch (type) {
    case SqlType::kString:
      return "String";
    case SqlType::kInt:
      return "Int";
    case SqlType::kFloat:
      return "Float";
    case SqlType::kChar:
      return "Char";
    case SqlType::kBool:
      return "Bool";
    case SqlType::kDate:
      return "Date";
  }
  return "?";
}

std::optional<SqlType> ParseTypeName(std::string_view name) {
  for (SqlType t : kAllSqlTypes) {
    if (TypeName(t) == name) return t;
  }
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, SqlType type) {
  return os << TypeName(type);
}

bool IsNumeric(SqlType type) {
  return type == SqlType::kInt || type == SqlType::kFloat ||
         type == SqlType::kDate;
}

std::optional<SqlType> SqlValue::type() const {
  switch (storage_.index()) {
    case 1:
      return SqlType::kString;
    case 2:
      return SqlType::kInt;
    case 3:
      return SqlType::kFloat;
    case 4:
      return SqlType::kChar;
    case 5:
      return SqlType::kBool;
    case 6:
      return SqlType::kDate;
    default:
      return std::nullopt;
  }
}

std::string FormatFloat(double d) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), d);
  std::string s(buf, end);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string EncodeUtf8(char32_t c) {
  std::string out;
  auto u = static_cast<std::uint32_t>(c);
  if (u < 0x80) {
    out += static_cast<char>(u);
  } else if (u < 0x800) {
    out += static_cast<char>(0xC0 | (u >> 6));
    out += static_cast<char>(0x80 | (u & 0x3F));
  } else if (u < 0x10000) {
    out += static_cast<char>(0xE0 | (u >> 12));
    out += static_cast<char>(0x80 | ((u >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (u & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (u >> 18));
    out += static_cast<char>(0x80 | ((u >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((u >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (u & 0x3F));
  }
  return out;
}

std::optional<char32_t> DecodeSingleUtf8(std::string_view s) {
  if (s.empty()) return std::nullopt;
  auto b0 = static_cast<unsigned char>(s[0]);
  std::size_t len;
  std::uint32_t cp;
  if (b0 < 0x80) {
    len = 1;
    cp = b0;
  } else if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return std::nullopt;
  }
  if (s.size() != len) return std::nullopt;
  for (std::size_t i = 1; i < len; ++i) {
    auto b = static_cast<unsigned char>(s[i]);
    if ((b & 0xC0) != 0x80) return std::nullopt;
    cp = (cp << 6) | (b & 0x3F);
  }
  return static_cast<char32_t>(cp);
}

std::string ToLiteral(const SqlValue& v) {
  if (v.is_null()) return "null";
  switch (*v.type()) {
    case SqlType::kString: {
      std::string out = "'";
      for (char c : v.as_string()) {
        if (c == '\'') out += '\'';
        out += c;
      }
      return out + "'";
    }
    case SqlType::kInt:
      return std::to_string(v.as_int());
    case SqlType::kFloat:
      return FormatFloat(v.as_float());
    case SqlType::kChar: {
      std::string body = EncodeUtf8(v.as_char());
      return body == "'" ? "c''''" : "c'" + body + "'";
    }
    case SqlType::kBool:
      return v.as_bool() ? "true" : "false";
    case SqlType::kDate:
      return std::to_string(v.as_date().epoch_seconds);
  }
  return "?";
}

std::string ToDisplay(const SqlValue& v) {
  if (v.is_null()) return "null";
  switch (*v.type()) {
    case SqlType::kString:
      return v.as_string();
    case SqlType::kChar:
      return EncodeUtf8(v.as_char());
    default:
      return ToLiteral(v);
  }
}

std::ostream& operator<<(std::ostream& os, const SqlValue& v) {
  return os << ToLiteral(v);
}

// Howard Hinnant's days_from_civil.
std::int64_t DaysFromCivil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const auto yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

namespace {

template <typename N>
bool ParseWhole(std::string_view text, N& out) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

std::optional<Date> ParseIsoDate(std::string_view text) {
  // YYYY-MM-DD or YYYY-MM-DDTHH:MM:SS
  if (text.size() != 10 && text.size() != 19) return std::nullopt;
  if (text[4] != '-' || text[7] != '-') return std::nullopt;
  std::int64_t y;
  unsigned mo, d, h = 0, mi = 0, s = 0;
  if (!ParseWhole(text.substr(0, 4), y) || !ParseWhole(text.substr(5, 2), mo) ||
      !ParseWhole(text.substr(8, 2), d)) {
    return std::nullopt;
  }
  if (text.size() == 19) {
    if (text[10] != 'T' || text[13] != ':' || text[16] != ':') {
      return std::nullopt;
    }
    if (!ParseWhole(text.substr(11, 2), h) ||
        !ParseWhole(text.substr(14, 2), mi) ||
        !ParseWhole(text.substr(17, 2), s)) {
      return std::nullopt;
    }
  }
  if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 || s > 59) {
    return std::nullopt;
  }
  return Date{DaysFromCivil(y, mo, d) * 86400 + h * 3600 + mi * 60 + s};
}

}  // namespace

Result<SqlValue, std::string> ParseValueAs(SqlType type, std::string_view text) {
  if (text == "null") return SqlValue::Null();
  auto fail = [&] {
    return MakeUnexpected("expected " + std::string(TypeName(type)) +
                          ", got '" + std::string(text) + "'");
  };
  switch (type) {
    case SqlType::kString:
      return SqlValue::String(std::string(text));
    case SqlType::kInt: {
      std::int64_t i;
      if (!ParseWhole(text, i)) return fail();
      return SqlValue::Int(i);
    }
    case SqlType::kFloat: {
      double d;
      if (!ParseWhole(text, d) || !std::isfinite(d)) return fail();
      return SqlValue::Float(d);
    }
    case SqlType::kChar: {
      auto c = DecodeSingleUtf8(text);
      if (!c) return fail();
      return SqlValue::Char(*c);
    }
    case SqlType::kBool:
      if (text == "true") return SqlValue::Bool(true);
      if (text == "false") return SqlValue::Bool(false);
      return fail();
    case SqlType::kDate: {
      std::int64_t secs;
      if (ParseWhole(text, secs)) return SqlValue::FromDate(Date{secs});
      if (auto d = ParseIsoDate(text)) return SqlValue::FromDate(*d);
      return fail();
    }
  }
  return fail();
}

}  // namespace erdsql
