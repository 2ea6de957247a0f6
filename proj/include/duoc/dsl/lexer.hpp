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

#ifndef DUOC_DSL_LEXER_HPP
#define DUOC_DSL_LEXER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "duoc/dsl/ast.hpp"
#include "duoc/errors.hpp"

namespace duoc::dsl {

/// Lexical, syntax or name-resolution error with its source location.
class ParseError : public Error {
 public:
  ParseError(SourceLoc loc, const std::string& message);
  SourceLoc location() const { return loc_; }
  const std::string& message() const { return message_; }

 private:
  SourceLoc loc_;
  std::string message_;
};

/// Error raised while executing a statement.
class ScriptError : public Error {
 public:
  ScriptError(SourceLoc loc, const std::string& message);
  SourceLoc location() const { return loc_; }

 private:
  SourceLoc loc_;
};

struct Token {
  enum class Kind { kIdent, kNumber, kString, kPunct, kEnd };

  Kind kind;
  std::string text;  // identifier, punctuation, string contents or number spelling
  double number = 0.0;
  SourceLoc loc;
};

/// Splits source text into tokens; `#` starts a comment to end of line.
std::vector<Token> tokenize(std::string_view text);

}  // namespace duoc::dsl

#endif  // DUOC_DSL_LEXER_HPP
