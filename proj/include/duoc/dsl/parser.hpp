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

#ifndef DUOC_DSL_PARSER_HPP
#define DUOC_DSL_PARSER_HPP

#include <string>
#include <string_view>

#include "duoc/dsl/ast.hpp"
#include "duoc/dsl/lexer.hpp"

namespace duoc::dsl {

/// Parses a script and resolves names: every identifier must be declared
/// earlier with the right kind, constructors and run blocks take only their
/// known keys, and at most one `emit` appears.
Script parse_script(std::string_view text, std::string name = "script");

}  // namespace duoc::dsl

#endif  // DUOC_DSL_PARSER_HPP
