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


#include "duoc/dsl/parser.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace duoc::dsl {

std::string run_label(const RunDecl& run, int ordinal) {
  return run.alias.empty() ? "run" + std::to_string(ordinal) : run.alias;
}

namespace {

enum class NameKind { kSystem, kState, kMeasure, kTransform, kRun };

const char* kind_name(NameKind k) {
  switch (k) {
    case NameKind::kSystem: return "system";
    case NameKind::kState: return "state";
    case NameKind::kMeasure: return "measurement";
    case NameKind::kTransform: return "transform";
    case NameKind::kRun: return "run";
  }
  return "name";
}

struct Schema {
  std::vector<std::string> required;
  std::vector<std::string> optional;
};

using SchemaTable = std::map<std::string, Schema>;

const SchemaTable& system_ctors() {
  static const SchemaTable t{{"composite", {{"d", "bits", "antibits"}, {}}}};
  return t;
}

const SchemaTable& state_ctors() {
  static const SchemaTable t{
      {"entpair", {{"p"}, {"parity"}}},
      {"pair", {{"alphas"}, {"parity"}}},
      {"maxent", {{}, {"parity"}}},
      {"basis", {{"digits"}, {}}},
      {"classical", {{"probs"}, {}}},
      {"separable", {{"gamma"}, {}}},
      {"random", {{}, {"terms", "seed"}}},
      {"purify", {{"state"}, {"parity", "tail", "phases"}}},
  };
  return t;
}

const SchemaTable& measure_ctors() {
  static const SchemaTable t{
      {"witness", {{"p"}, {"parity"}}},
      {"basis", {{}, {}}},
      {"parity", {{}, {}}},
      {"unit", {{}, {}}},
      {"side", {{"party", "angle"}, {}}},
  };
  return t;
}

const SchemaTable& transform_ctors() {
  static const SchemaTable t{{"reversible", {{"system"}, {"sigma", "tau", "x", "z"}}}};
  return t;
}

const SchemaTable& run_kinds() {
  static const SchemaTable t{
      {"born", {{"state", "measure"}, {"on", "transform"}}},
      {"chsh", {{}, {"alice", "bob"}}},
      {"activation", {{}, {"alphas", "parity", "state"}}},
      {"witness", {{"p"}, {"grid", "parity"}}},
      {"conditional",
       {{}, {"state", "measure", "on", "outcome", "compare", "trials", "corrupt", "system"}}},
      {"span", {{"system"}, {"seed"}}},
  };
  return t;
}

// Keys whose identifier value names a declared object.
const std::map<std::string, NameKind>& reference_keys() {
  static const std::map<std::string, NameKind> t{
      {"state", NameKind::kState},     {"measure", NameKind::kMeasure},
      {"system", NameKind::kSystem},   {"transform", NameKind::kTransform},
      {"compare", NameKind::kState},
  };
  return t;
}

const std::set<std::string>& reserved() {
  static const std::set<std::string> t{"system", "state", "measure", "transform", "run",
                                       "assert", "emit", "on",    "as",        "tol",
                                       "pi",     "sqrt", "product"};
  return t;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Script parse(std::string name) {
    Script script{std::move(name), {}};
    bool emitted = false;
    while (peek().kind != Token::Kind::kEnd) {
      const Token& kw = peek();
      if (kw.kind != Token::Kind::kIdent) throw error(kw, "expected a statement keyword");
      Statement st{{}, kw.loc};
      if (kw.text == "system") {
        st.body = parse_system();
      } else if (kw.text == "state") {
        st.body = parse_state();
      } else if (kw.text == "measure") {
        st.body = parse_measure();
      } else if (kw.text == "transform") {
        st.body = parse_transform();
      } else if (kw.text == "run") {
        st.body = parse_run();
      } else if (kw.text == "assert") {
        st.body = parse_assert();
      } else if (kw.text == "emit") {
        if (emitted) throw error(kw, "only one emit statement is allowed");
        emitted = true;
        st.body = parse_emit();
      } else {
        throw error(kw, "unknown keyword '" + kw.text + "'");
      }
      script.statements.push_back(std::move(st));
    }
    return script;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Token::Kind::kEnd: return "end of input";
      case Token::Kind::kString: return "string \"" + t.text + "\"";
      default: return "'" + t.text + "'";
    }
  }

  static ParseError error(const Token& t, const std::string& message) { return ParseError(t.loc, message); }

  bool at_punct(const char* p) const { return peek().kind == Token::Kind::kPunct && peek().text == p; }
  bool at_word(const char* w) const { return peek().kind == Token::Kind::kIdent && peek().text == w; }

  const Token& expect_punct(const char* p) {
    if (!at_punct(p)) throw error(peek(), std::string("expected '") + p + "', found " + describe(peek()));
    return next();
  }
  void expect_word(const char* w) {
    if (!at_word(w)) throw error(peek(), std::string("expected '") + w + "', found " + describe(peek()));
    next();
  }
  const Token& expect_ident(const char* what) {
    if (peek().kind != Token::Kind::kIdent) {
      throw error(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    }
    return next();
  }

  std::string declare(NameKind kind) {
    const Token& t = expect_ident("a name");
    if (reserved().count(t.text)) throw error(t, "'" + t.text + "' is a reserved word");
    if (names_.count(t.text)) throw error(t, "name '" + t.text + "' is already defined");
    pending_ = {t.text, kind};
    return t.text;
  }
  void commit() {
    names_[pending_.first] = pending_.second;
    pending_ = {};
  }

  void resolve(const Token& t, NameKind kind) const {
    const auto it = names_.find(t.text);
    if (it == names_.end()) throw error(t, "undefined identifier '" + t.text + "'");
    if (it->second != kind) {
      throw error(t, "'" + t.text + "' is a " + kind_name(it->second) + ", expected a " + kind_name(kind));
    }
  }

  std::string use(NameKind kind) {
    const Token& t = expect_ident(kind_name(kind));
    resolve(t, kind);
    return t.text;
  }

  // kv*, commas optional, closed by `close`.
  std::vector<KeyValue> parse_kvs(const char* close, const std::string& owner, const Schema& schema) {
    std::vector<KeyValue> out;
    while (!at_punct(close)) {
      const Token& key = expect_ident("a key");
      const bool known =
          std::count(schema.required.begin(), schema.required.end(), key.text) +
              std::count(schema.optional.begin(), schema.optional.end(), key.text) > 0;
      if (!known) throw error(key, owner + " does not take key '" + key.text + "'");
      for (const auto& kv : out) {
        if (kv.key == key.text) throw error(key, "duplicate key '" + key.text + "'");
      }
      expect_punct("=");
      Value v = parse_value();
      const auto ref = reference_keys().find(key.text);
      if (ref != reference_keys().end()) {
        if (v.kind != Value::Kind::kIdent) throw ParseError(v.loc, "key '" + key.text + "' expects a name");
        resolve(Token{Token::Kind::kIdent, v.text, 0.0, v.loc}, ref->second);
      }
      out.push_back({key.text, std::move(v), key.loc});
      if (at_punct(",")) next();
    }
    const Token& closing = expect_punct(close);
    for (const auto& req : schema.required) {
      const bool present = std::any_of(out.begin(), out.end(), [&](const KeyValue& kv) { return kv.key == req; });
      if (!present) throw error(closing, owner + " requires key '" + req + "'");
    }
    return out;
  }

  Ctor parse_ctor(const SchemaTable& table, const char* what) {
    const Token& name = expect_ident(what);
    const auto it = table.find(name.text);
    if (it == table.end()) throw error(name, std::string("unknown ") + what + " '" + name.text + "'");
    expect_punct("(");
    Ctor c{name.text, parse_kvs(")", name.text + "(...)", it->second), {}, name.loc};
    return c;
  }

  SystemDecl parse_system() {
    next();
    SystemDecl d{declare(NameKind::kSystem), {}};
    expect_punct("=");
    d.ctor = parse_ctor(system_ctors(), "system constructor");
    commit();
    return d;
  }

  StateDecl parse_state() {
    next();
    StateDecl d{declare(NameKind::kState), {}, {}};
    expect_punct("=");
    if (at_word("product")) {
      const Token& name = next();
      expect_punct("(");
      d.ctor = Ctor{"product", {}, {}, name.loc};
      while (!at_punct(")")) {
        if (!d.ctor.operands.empty()) expect_punct(",");
        d.ctor.operands.push_back(use(NameKind::kState));
      }
      const Token& close = expect_punct(")");
      if (d.ctor.operands.size() != 2) throw error(close, "product(...) takes exactly two states");
    } else {
      d.ctor = parse_ctor(state_ctors(), "state constructor");
      expect_word("on");
      d.on = use(NameKind::kSystem);
    }
    commit();
    return d;
  }

  MeasureDecl parse_measure() {
    next();
    MeasureDecl d{declare(NameKind::kMeasure), {}, {}};
    expect_punct("=");
    d.ctor = parse_ctor(measure_ctors(), "measurement constructor");
    expect_word("on");
    d.on = use(NameKind::kSystem);
    commit();
    return d;
  }

  TransformDecl parse_transform() {
    next();
    TransformDecl d{declare(NameKind::kTransform), {}};
    expect_punct("=");
    d.ctor = parse_ctor(transform_ctors(), "transform constructor");
    commit();
    return d;
  }

  RunDecl parse_run() {
    next();
    const Token& kind = expect_ident("a run kind");
    const auto it = run_kinds().find(kind.text);
    if (it == run_kinds().end()) throw error(kind, "unknown run kind '" + kind.text + "'");
    expect_punct("{");
    RunDecl d{kind.text, parse_kvs("}", "run " + kind.text, it->second), {}};
    if (at_word("as")) {
      next();
      d.alias = declare(NameKind::kRun);
      commit();
    }
    return d;
  }

  AssertDecl parse_assert() {
    next();
    AssertDecl d;
    d.lhs = parse_expr();
    static const std::set<std::string> kCmp{"==", "!=", "<", "<=", ">", ">="};
    if (peek().kind != Token::Kind::kPunct || !kCmp.count(peek().text)) {
      throw error(peek(), "expected a comparison operator, found " + describe(peek()));
    }
    d.cmp = next().text;
    d.rhs = parse_expr();
    if (at_word("tol")) {
      next();
      d.tol = parse_expr();
    }
    return d;
  }

  EmitDecl parse_emit() {
    next();
    const Token& fmt = expect_ident("'csv' or 'json'");
    if (fmt.text != "csv" && fmt.text != "json") throw error(fmt, "expected 'csv' or 'json'");
    if (peek().kind != Token::Kind::kString) throw error(peek(), "expected an output path string");
    return EmitDecl{fmt.text, next().text};
  }

  Value parse_value() {
    const Token& t = peek();
    Value v;
    v.loc = t.loc;
    if (at_punct("[")) {
      next();
      v.kind = Value::Kind::kList;
      while (!at_punct("]")) {
        if (!v.items.empty()) expect_punct(",");
        v.items.push_back(parse_value());
      }
      next();
      return v;
    }
    if (t.kind == Token::Kind::kString) {
      v.kind = Value::Kind::kString;
      v.text = next().text;
      return v;
    }
    if (t.kind == Token::Kind::kIdent && t.text != "pi" && t.text != "sqrt" &&
        !(peek(1).kind == Token::Kind::kPunct && peek(1).text == ".")) {
      v.kind = Value::Kind::kIdent;
      v.text = next().text;
      return v;
    }
    v.kind = Value::Kind::kExpr;
    v.expr = parse_expr();
    return v;
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    while (at_punct("+") || at_punct("-")) {
      const Token& op = next();
      Expr rhs = parse_term();
      lhs = Expr{Expr::Kind::kBinary, 0.0, op.text[0], {}, {}, {std::move(lhs), std::move(rhs)}, op.loc};
    }
    return lhs;
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    while (at_punct("*") || at_punct("/")) {
      const Token& op = next();
      Expr rhs = parse_unary();
      lhs = Expr{Expr::Kind::kBinary, 0.0, op.text[0], {}, {}, {std::move(lhs), std::move(rhs)}, op.loc};
    }
    return lhs;
  }

  Expr parse_unary() {
    if (at_punct("-")) {
      const Token& op = next();
      return Expr{Expr::Kind::kNeg, 0.0, 0, {}, {}, {parse_unary()}, op.loc};
    }
    return parse_primary();
  }

  Expr parse_primary() {
    const Token& t = peek();
    if (t.kind == Token::Kind::kNumber) {
      next();
      Expr e = Expr::literal(t.number);
      e.loc = t.loc;
      return e;
    }
    if (at_punct("(")) {
      next();
      Expr e = parse_expr();
      expect_punct(")");
      return e;
    }
    if (t.kind == Token::Kind::kIdent) {
      if (t.text == "pi") {
        next();
        return Expr{Expr::Kind::kPi, 0.0, 0, {}, {}, {}, t.loc};
      }
      if (t.text == "sqrt") {
        next();
        expect_punct("(");
        Expr arg = parse_expr();
        expect_punct(")");
        return Expr{Expr::Kind::kCall, 0.0, 0, "sqrt", {}, {std::move(arg)}, t.loc};
      }
      next();
      resolve(t, NameKind::kRun);
      expect_punct(".");
      const Token& field = expect_ident("a result quantity");
      return Expr{Expr::Kind::kRef, 0.0, 0, t.text, field.text, {}, t.loc};
    }
    throw error(t, "expected a number, 'pi', 'sqrt(...)' or a run result, found " + describe(t));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<std::string, NameKind> names_;
  std::pair<std::string, NameKind> pending_;
};

}  // namespace

Script parse_script(std::string_view text, std::string name) { return Parser(text).parse(std::move(name)); }

}  // namespace duoc::dsl
