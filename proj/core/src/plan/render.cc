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

#include "erdsql/plan/render.h"

#include <sstream>

namespace erdsql::plan {

namespace {

std::string Quote(std::string_view name, char q) {
  std::string out(1, q);
  for (char c : name) {
    if (c == q) out += q;
    out += c;
  }
  out += q;
  return out;
}

std::string ColumnRef(const TypedColumn& c) {
  return InstanceName(c.table) + "." + Quote(c.column, '"');
}

std::string FromItem(const TableInstance& t) {
  std::string out = Quote(t.table, '\'');
  if (t.number > 0) out += " as " + InstanceName(t);
  return out;
}

class Renderer {
 public:
  explicit Renderer(std::vector<Slot>& slots) : slots_(slots) {}

  std::string Operand(const Value& v, bool lhs) {
    std::string text;
    switch (v.kind) {
      case Value::Kind::kColumn:
        text = ColumnRef(v.column);
        break;
      case Value::Kind::kConst:
        slots_.push_back({"", v.type, v.nullable_allowed, v.constant});
        text = "?";
        break;
      case Value::Kind::kParam:
        slots_.push_back({v.param, v.type, v.nullable_allowed, std::nullopt});
        text = "?";
        break;
    }
    return lhs ? "(" + text + ")" : text;
  }

  std::string Cond(const Constraint& c, bool top) {
    using K = Constraint::Kind;
    switch (c.kind) {
      case K::kTrue:
        return top ? "" : "1";
      case K::kEqual:
      case K::kNotEqual:
      case K::kLess:
      case K::kLessEq:
      case K::kGreater:
      case K::kGreaterEq: {
        std::string lhs = Operand(c.values[0], true);
        std::string rhs = Operand(c.values[1], false);
        return "(" + lhs + " " + OpText(c.kind) + " " + rhs + ")";
      }
      case K::kBetween: {
        std::string subject = Operand(c.values[0], true);
        std::string lo = Operand(c.values[1], false);
        std::string hi = Operand(c.values[2], false);
        return "(" + subject + " between " + lo + " and " + hi + ")";
      }
      case K::kIsNull:
        return "(" + Operand(c.values[0], true) + " is null)";
      case K::kIsNotNull:
        return "(" + Operand(c.values[0], true) + " is not null)";
      case K::kAnd:
      case K::kOr: {
        std::string out;
        const char* sep = c.kind == K::kAnd ? " and " : " or ";
        for (std::size_t i = 0; i < c.children.size(); ++i) {
          if (i) out += sep;
          out += Cond(c.children[i], false);
        }
        return top ? out : "(" + out + ")";
      }
      case K::kNot:
        return "(not " + Cond(c.children[0], false) + ")";
    }
    return "";
  }

  static const char* OpText(Constraint::Kind k) {
    switch (k) {
      case Constraint::Kind::kEqual:
        return "==";
      case Constraint::Kind::kNotEqual:
        return "<>";
      case Constraint::Kind::kLess:
        return "<";
      case Constraint::Kind::kLessEq:
        return "<=";
      case Constraint::Kind::kGreater:
        return ">";
      default:
        return ">=";
    }
  }

  std::string Where(const Constraint& c) {
    std::string text = Cond(c, true);
    return text.empty() ? "" : " where " + text;
  }

  std::string operator()(const SelectPlan& p) {
    std::string out = "select ";
    if (p.quantifier == Quantifier::kDistinct) out += "Distinct ";
    for (std::size_t i = 0; i < p.projection.size(); ++i) {
      if (i) out += ", ";
      out += "(" + ColumnRef(p.projection[i]) + ")";
    }
    out += " from " + FromItem(p.tables.head);
    for (const auto& t : p.tables.cross_joins) {
      out += " cross join " + FromItem(t);
    }
    out += Where(p.criteria);
    if (!p.group_by.empty()) {
      out += " group by ";
      for (std::size_t i = 0; i < p.group_by.size(); ++i) {
        if (i) out += ", ";
        out += "(" + ColumnRef(p.group_by[i]) + ")";
      }
    }
    if (!p.order_by.empty()) {
      out += " order by ";
      for (std::size_t i = 0; i < p.order_by.size(); ++i) {
        if (i) out += ", ";
        out += "(" + ColumnRef(p.order_by[i].column) + ")";
        out += p.order_by[i].order == SortOrder::kDesc ? " desc" : " asc";
      }
    }
    if (p.limit) out += " limit " + std::to_string(*p.limit);
    return out + ";";
  }

  std::string operator()(const InsertPlan& p) {
    std::string out = "insert into " + Quote(p.table, '\'') + " (";
    for (std::size_t i = 0; i < p.columns.size(); ++i) {
      if (i) out += ", ";
      out += Quote(p.columns[i].column, '"');
    }
    out += ") values ";
    for (std::size_t r = 0; r < p.rows.size(); ++r) {
      if (r) out += ", ";
      out += "(";
      for (std::size_t i = 0; i < p.rows[r].size(); ++i) {
        if (i) out += ", ";
        out += Operand(p.rows[r][i], false);
      }
      out += ")";
    }
    return out + ";";
  }

  std::string operator()(const UpdatePlan& p) {
    std::string out = "update " + Quote(p.table, '\'') + " set ";
    for (std::size_t i = 0; i < p.assignments.size(); ++i) {
      if (i) out += ", ";
      out += Quote(p.assignments[i].first.column, '"') + " = " +
             Operand(p.assignments[i].second, false);
    }
    return out + Where(p.criteria) + ";";
  }

  std::string operator()(const DeletePlan& p) {
    return "delete from " + Quote(p.table, '\'') + Where(p.criteria) + ";";
  }

 private:
  std::vector<Slot>& slots_;
};

}  // namespace

std::string InstanceName(const TableInstance& t) {
  if (t.number == 0) return Quote(t.table, '"');
  return Quote(t.table + "#" + std::to_string(t.number), '"');
}

std::string RenderCondition(const Constraint& c, std::vector<Slot>& slots) {
  return Renderer(slots).Cond(c, true);
}

RenderedSql Render(const QueryPlan& plan) {
  RenderedSql out;
  Renderer r(out.slots);
  out.sql = std::visit(r, plan);
  return out;
}

std::string DescribeSlot(std::size_t index, const Slot& slot) {
  std::ostringstream os;
  os << "?" << index + 1 << " ";
  if (slot.constant) {
    os << "const " << ToLiteral(*slot.constant);
  } else {
    os << slot.name;
  }
  os << " : " << TypeName(slot.type);
  if (!slot.constant && slot.nullable_allowed) os << "?";
  return os.str();
}

}  // namespace erdsql::plan
