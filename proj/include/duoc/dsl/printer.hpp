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

#ifndef DUOC_DSL_PRINTER_HPP
#define DUOC_DSL_PRINTER_HPP

#include <string>

#include "duoc/dsl/ast.hpp"

namespace duoc::dsl {

/// Shortest decimal spelling that reads back to the same double.
std::string format_number(double v);

std::string print_expr(const Expr& e);
std::string print_value(const Value& v);

/// Canonical text, one statement per line.
std::string pretty_print(const Script& script);

}  // namespace duoc::dsl

#endif  // DUOC_DSL_PRINTER_HPP
