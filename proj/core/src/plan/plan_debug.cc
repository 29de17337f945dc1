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

#include <sstream>

#include "erdsql/plan/plan.h"

namespace erdsql::plan {

namespace {

std::string Col(const TypedColumn& c) {
  return analysis::ToString(c.table) + "." + c.column + " : " +
         std::string(TypeName(c.type));
}

std::string Val(const Value& v) {
  switch (v.kind) {
    case Value::Kind::kConst:
      return "Const " + ToLiteral(v.constant) + " : " +
             std::string(TypeName(v.type));
    case Value::Kind::kColumn:
      return "Col " + Col(v.column);
    case Value::Kind::kParam:
      return "Param " + v.param + " : " + std::string(TypeName(v.type)) +
             (v.nullable_allowed ? "?" : "");
  }
  return "";
}

const char* KindName(Constraint::Kind k) {
  switch (k) {
    case Constraint::Kind::kEqual:
      return "Equal";
    case Constraint::Kind::kNotEqual:
      return "NotEqual";
    case Constraint::Kind::kLess:
      return "Less";
    case Constraint::Kind::kLessEq:
      return "LessEq";
    case Constraint::Kind::kGreater:
      return "Greater";
    case Constraint::Kind::kGreaterEq:
      return "GreaterEq";
    case Constraint::Kind::kBetween:
      return "Between";
    case Constraint::Kind::kIsNull:
      return "IsNull";
    case Constraint::Kind::kIsNotNull:
      return "IsNotNull";
    case Constraint::Kind::kAnd:
      return "And";
    case Constraint::Kind::kOr:
      return "Or";
    case Constraint::Kind::kNot:
      return "Not";
    case Constraint::Kind::kTrue:
      return "True";
  }
  return "";
}

void Dump(const Constraint& c, int depth, std::ostream& os) {
  os << std::string(depth * 2, ' ') << KindName(c.kind);
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    os << (i ? ", " : " ") << Val(c.values[i]);
  }
  os << "\n";
  for (const auto& child : c.children) Dump(child, depth + 1, os);
}

struct Dumper {
  std::ostream& os;

  void operator()(const SelectPlan& p) {
    os << "Select" << (p.quantifier == Quantifier::kDistinct ? " Distinct" : "")
       << "\n";
    for (const auto& c : p.projection) os << "  project " << Col(c) << "\n";
    os << "  from " << analysis::ToString(p.tables.head) << "\n";
    for (const auto& t : p.tables.cross_joins) {
      os << "  cross join " << analysis::ToString(t) << "\n";
    }
    os << "  where\n";
    Dump(p.criteria, 2, os);
    for (const auto& g : p.group_by) os << "  group by " << Col(g) << "\n";
    for (const auto& o : p.order_by) {
      os << "  order by " << Col(o.column)
         << (o.order == SortOrder::kDesc ? " Desc" : " Asc") << "\n";
    }
    if (p.limit) os << "  limit " << *p.limit << "\n";
  }

  void operator()(const InsertPlan& p) {
    os << "Insert " << p.table << "\n";
    for (const auto& c : p.columns) os << "  column " << Col(c) << "\n";
    for (const auto& row : p.rows) {
      os << "  row";
      for (std::size_t i = 0; i < row.size(); ++i) {
        os << (i ? ", " : " ") << Val(row[i]);
      }
      os << "\n";
    }
  }

  void operator()(const UpdatePlan& p) {
    os << "Update " << p.table << "\n";
    for (const auto& [c, v] : p.assignments) {
      os << "  set " << Col(c) << " = " << Val(v) << "\n";
    }
    os << "  where\n";
    Dump(p.criteria, 2, os);
  }

  void operator()(const DeletePlan& p) {
    os << "Delete " << p.table << "\n";
    os << "  where\n";
    Dump(p.criteria, 2, os);
  }
};

}  // namespace

std::string DebugString(const QueryPlan& plan) {
  std::ostringstream os;
  std::visit(Dumper{os}, plan);
  return os.str();
}

std::string DebugString(const Constraint& c) {
  std::ostringstream os;
  Dump(c, 0, os);
  return os.str();
}

}  // namespace erdsql::plan
