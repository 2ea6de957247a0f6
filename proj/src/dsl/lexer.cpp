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


#include "duoc/dsl/lexer.hpp"

#include <cctype>
#include <cstdlib>

namespace duoc::dsl {

namespace {

std::string located(SourceLoc loc, const std::string& message) {
  return std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " + message;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

ParseError::ParseError(SourceLoc loc, const std::string& message)
    : Error(located(loc, message)), loc_(loc), message_(message) {}

ScriptError::ScriptError(SourceLoc loc, const std::string& message)
    : Error(located(loc, message)), loc_(loc) {}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  const auto advance = [&]() {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < text.size()) {
    const char c = text[i];
    const SourceLoc loc{line, col};
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
      continue;
    }
    if (ident_start(c)) {
      const std::size_t start = i;
      while (i < text.size() && ident_char(text[i])) advance();
      out.push_back({Token::Kind::kIdent, std::string(text.substr(start, i - start)), 0.0, loc});
      continue;
    }
    if (digit(c)) {
      const std::size_t start = i;
      while (i < text.size() && digit(text[i])) advance();
      if (i < text.size() && text[i] == '.') {
        advance();
        while (i < text.size() && digit(text[i])) advance();
      }
      if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
        if (j < text.size() && digit(text[j])) {
          while (i < j) advance();
          while (i < text.size() && digit(text[i])) advance();
        } else {
          throw ParseError({line, col}, "malformed exponent in number literal");
        }
      }
      if (i < text.size() && ident_start(text[i])) {
        throw ParseError({line, col}, "unexpected character after number literal");
      }
      const std::string spelling(text.substr(start, i - start));
      out.push_back({Token::Kind::kNumber, spelling, std::strtod(spelling.c_str(), nullptr), loc});
      continue;
    }
    if (c == '"') {
      advance();
      std::string s;
      while (true) {
        if (i >= text.size() || text[i] == '\n') throw ParseError(loc, "unterminated string literal");
        if (text[i] == '"') {
          advance();
          break;
        }
        if (text[i] == '\\') {
          advance();
          if (i >= text.size() || (text[i] != '"' && text[i] != '\\')) {
            throw ParseError({line, col}, "expected '\"' or '\\' after backslash");
          }
        }
        s += text[i];
        advance();
      }
      out.push_back({Token::Kind::kString, s, 0.0, loc});
      continue;
    }
    if (i + 1 < text.size()) {
      const std::string two(text.substr(i, 2));
      if (two == "==" || two == "!=" || two == "<=" || two == ">=") {
        advance();
        advance();
        out.push_back({Token::Kind::kPunct, two, 0.0, loc});
        continue;
      }
    }
    static const std::string kSingle = "=(){}[],.+-*/<>";
    if (kSingle.find(c) != std::string::npos) {
      advance();
      out.push_back({Token::Kind::kPunct, std::string(1, c), 0.0, loc});
      continue;
    }
    throw ParseError(loc, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::Kind::kEnd, "", 0.0, {line, col}});
  return out;
}

}  // namespace duoc::dsl
