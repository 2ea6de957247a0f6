// Copyright 2026 The duoc Authors
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


#include "duoc/dsl/printer.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace duoc::dsl {

namespace {

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kBinary: return (e.op == '+' || e.op == '-') ? 1 : 2;
    case Expr::Kind::kNeg: return 3;
    default: return 4;
  }
}

std::string wrap(const Expr& e, bool parens) {
  const std::string s = print_expr(e);
  return parens ? "(" + s + ")" : s;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string print_kvs(const std::vector<KeyValue>& kvs) {
  std::string out;
  for (std::size_t i = 0; i < kvs.size(); ++i) {
    if (i > 0) out += ", ";
    out += kvs[i].key + "=" + print_value(kvs[i].value);
  }
  return out;
}

std::string print_ctor(const Ctor& c) {
  if (c.name == "product") {
    std::string out = "product(";
    for (std::size_t i = 0; i < c.operands.size(); ++i) out += (i > 0 ? ", " : "") + c.operands[i];
    return out + ")";
  }
  return c.name + "(" + print_kvs(c.args) + ")";
}

struct StatementPrinter {
  std::string operator()(const SystemDecl& d) const { return "system " + d.name + " = " + print_ctor(d.ctor); }
  std::string operator()(const StateDecl& d) const {
    std::string out = "state " + d.name + " = " + print_ctor(d.ctor);
    if (!d.on.empty()) out += " on " + d.on;
    return out;
  }
  std::string operator()(const MeasureDecl& d) const {
    return "measure " + d.name + " = " + print_ctor(d.ctor) + " on " + d.on;
  }
  std::string operator()(const TransformDecl& d) const {
    return "transform " + d.name + " = " + print_ctor(d.ctor);
  }
  std::string operator()(const RunDecl& d) const {
    std::string out = "run " + d.kind + " {";
    if (!d.args.empty()) out += " " + print_kvs(d.args);
    out += " }";
    if (!d.alias.empty()) out += " as " + d.alias;
    return out;
  }
  std::string operator()(const AssertDecl& d) const {
    std::string out = "assert " + print_expr(d.lhs) + " " + d.cmp + " " + print_expr(d.rhs);
    if (d.tol) out += " tol " + print_expr(*d.tol);
    return out;
  }
  std::string operator()(const EmitDecl& d) const { return "emit " + d.format + " " + quote(d.path); }
};

}  // namespace

std::string format_number(double v) {
  char buf[40];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kNumber: return format_number(e.number);
    case Expr::Kind::kPi: return "pi";
    case Expr::Kind::kRef: return e.name + "." + e.field;
    case Expr::Kind::kCall: return e.name + "(" + print_expr(e.args.at(0)) + ")";
    case Expr::Kind::kNeg: return "-" + wrap(e.args.at(0), precedence(e.args.at(0)) < 3);
    case Expr::Kind::kBinary: {
      const int p = precedence(e);
      return wrap(e.args.at(0), precedence(e.args.at(0)) < p) + e.op +
             wrap(e.args.at(1), precedence(e.args.at(1)) <= p);
    }
  }
  return {};
}

std::string print_value(const Value& v) {
  switch (v.kind) {
    case Value::Kind::kExpr: return print_expr(v.expr);
    case Value::Kind::kIdent: return v.text;
    case Value::Kind::kString: return quote(v.text);
    case Value::Kind::kList: {
      std::string out = "[";
      for (std::size_t i = 0; i < v.items.size(); ++i) out += (i > 0 ? ", " : "") + print_value(v.items[i]);
      return out + "]";
    }
  }
  return {};
}

std::string pretty_print(const Script& script) {
  std::ostringstream out;
  for (const auto& st : script.statements) out << std::visit(StatementPrinter{}, st.body) << "\n";
  return out.str();
}

}  // namespace duoc::dsl
