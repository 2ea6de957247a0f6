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

#ifndef DUOC_DSL_AST_HPP
#define DUOC_DSL_AST_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace duoc::dsl {

/// Line and column (1-based). Locations never take part in AST equality, so
/// a reparsed pretty-print compares equal to the original.
struct SourceLoc {
  int line = 0;
  int column = 0;

  bool operator==(const SourceLoc&) const { return true; }
};

/// Numeric expression: literals, `pi`, + - * /, unary minus, sqrt(x) and
/// run result references `Run.quantity`.
struct Expr {
  enum class Kind { kNumber, kPi, kNeg, kBinary, kCall, kRef };

  Kind kind = Kind::kNumber;
  double number = 0.0;
  char op = 0;           // kBinary
  std::string name;      // kCall function, kRef run alias
  std::string field;     // kRef quantity
  std::vector<Expr> args;
  SourceLoc loc;

  bool operator==(const Expr&) const = default;

  static Expr literal(double v) { return Expr{Kind::kNumber, v, 0, {}, {}, {}, {}}; }
};

struct Value {
  enum class Kind { kExpr, kIdent, kString, kList };

  Kind kind = Kind::kExpr;
  Expr expr;
  std::string text;  // identifier or string contents
  std::vector<Value> items;
  SourceLoc loc;

  bool operator==(const Value&) const = default;
};

struct KeyValue {
  std::string key;
  Value value;
  SourceLoc loc;

  bool operator==(const KeyValue&) const = default;
};

/// NAME(kv*) or, for `product`, NAME(ID, ID).
struct Ctor {
  std::string name;
  std::vector<KeyValue> args;
  std::vector<std::string> operands;
  SourceLoc loc;

  bool operator==(const Ctor&) const = default;
};

struct SystemDecl {
  std::string name;
  Ctor ctor;
  bool operator==(const SystemDecl&) const = default;
};

struct StateDecl {
  std::string name;
  Ctor ctor;
  std::string on;  // empty for product(...)
  bool operator==(const StateDecl&) const = default;
};

struct MeasureDecl {
  std::string name;
  Ctor ctor;
  std::string on;
  bool operator==(const MeasureDecl&) const = default;
};

struct TransformDecl {
  std::string name;
  Ctor ctor;
  bool operator==(const TransformDecl&) const = default;
};

struct RunDecl {
  std::string kind;
  std::vector<KeyValue> args;
  std::string alias;  // empty when no `as`
  bool operator==(const RunDecl&) const = default;
};

struct AssertDecl {
  Expr lhs;
  std::string cmp;
  Expr rhs;
  std::optional<Expr> tol;
  bool operator==(const AssertDecl&) const = default;
};

struct EmitDecl {
  std::string format;
  std::string path;
  bool operator==(const EmitDecl&) const = default;
};

using StatementBody =
    std::variant<SystemDecl, StateDecl, MeasureDecl, TransformDecl, RunDecl, AssertDecl, EmitDecl>;

struct Statement {
  StatementBody body;
  SourceLoc loc;
  bool operator==(const Statement&) const = default;
};

struct Script {
  std::string name;
  std::vector<Statement> statements;
  bool operator==(const Script&) const = default;
};

/// Alias a run is reported under: its `as` name or "run<k>" (1-based).
std::string run_label(const RunDecl& run, int ordinal);

}  // namespace duoc::dsl

#endif  // DUOC_DSL_AST_HPP
