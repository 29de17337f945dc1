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

#include "erdsql/sql/printer.h"

namespace erdsql::sql {

namespace {

std::string Print(const ColumnRef& c) {
  return c.qualifier.empty() ? c.column : c.qualifier + "." + c.column;
}

std::string Print(const TableRef& t) {
  return t.alias.empty() ? t.table : t.table + " as " + t.alias;
}

bool IsJunction(const Condition& c) {
  return c.kind == Condition::Kind::kAnd || c.kind == Condition::Kind::kOr;
}

std::string PrintOperand(const Condition& c) {
  std::string text = PrintCondition(c);
  return IsJunction(c) ? "(" + text + ")" : text;
}

template <typename T, typename F>
std::string Join(const std::vector<T>& items, std::string_view sep, F f) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += f(items[i]);
  }
  return out;
}

std::string WhereClause(const std::optional<Condition>& where) {
  return where ? " Where " + PrintCondition(*where) : "";
}

}  // namespace

std::string PrintValue(const ValueExpr& value) {
  switch (value.kind) {
    case ValueExpr::Kind::kColumn:
      return Print(value.column);
    case ValueExpr::Kind::kLiteral:
      return ToLiteral(value.literal);
    case ValueExpr::Kind::kPlaceholder:
      return "{" + value.placeholder + "}";
  }
  return "?";
}

std::string PrintCondition(const Condition& c) {
  switch (c.kind) {
    case Condition::Kind::kCompare:
      return PrintValue(c.operands[0]) + " " +
             std::string(CompareOpSpelling(c.op)) + " " +
             PrintValue(c.operands[1]);
    case Condition::Kind::kBetween:
      return PrintValue(c.operands[0]) + " Between " +
             PrintValue(c.operands[1]) + " And " + PrintValue(c.operands[2]);
    case Condition::Kind::kIsNull:
      return Print(c.column) + " Is Null";
    case Condition::Kind::kIsNotNull:
      return Print(c.column) + " Is Not Null";
    case Condition::Kind::kSatisfies:
      return "Satisfies " + c.left + " " + c.relationship + " " + c.right;
    case Condition::Kind::kAnd:
      return Join(c.children, " And ", PrintOperand);
    case Condition::Kind::kOr:
      return Join(c.children, " Or ", PrintOperand);
    case Condition::Kind::kNot:
      return "Not " + PrintOperand(c.children[0]);
  }
  return "?";
}

std::string PrintStatement(const Statement& stmt) {
  struct Printer {
    std::string operator()(const SelectStmt& s) const {
      std::string out = "Select ";
      if (s.quantifier == Quantifier::kDistinct) out += "Distinct ";
      out += Join(s.projection, ", ", [](const SelectItem& item) {
        return item.star ? std::string("*") : Print(item.column);
      });
      out += " From " + Join(s.from, ", ", [](const TableRef& t) {
               return Print(t);
             });
      out += WhereClause(s.where);
      if (!s.group_by.empty()) {
        out += " Group By " + Join(s.group_by, ", ", [](const ColumnRef& c) {
                 return Print(c);
               });
      }
      if (!s.order_by.empty()) {
        out += " Order By " + Join(s.order_by, ", ", [](const OrderTerm& o) {
                 return Print(o.column) +
                        (o.order == SortOrder::kDesc ? " Desc" : " Asc");
               });
      }
      if (s.limit) out += " Limit " + std::to_string(*s.limit);
      return out + ";";
    }
    std::string operator()(const InsertStmt& s) const {
      std::string out = "Insert Into " + s.table.table + " (";
      out += Join(s.columns, ", ", [](const ColumnRef& c) { return c.column; });
      out += ") Values ";
      out += Join(s.rows, ", ", [](const std::vector<ValueExpr>& row) {
        return "(" + Join(row, ", ", PrintValue) + ")";
      });
      return out + ";";
    }
    std::string operator()(const UpdateStmt& s) const {
      std::string out = "Update " + Print(s.table) + " Set ";
      out += Join(s.assignments, ", ", [](const Assignment& a) {
        return Print(a.column) + " = " + PrintValue(a.value);
      });
      return out + WhereClause(s.where) + ";";
    }
    std::string operator()(const DeleteStmt& s) const {
      return "Delete From " + Print(s.table) + WhereClause(s.where) + ";";
    }
  };
  return std::visit(Printer{}, stmt);
}

}  // namespace erdsql::sql
