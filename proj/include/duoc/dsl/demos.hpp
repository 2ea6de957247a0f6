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

#ifndef DUOC_DSL_DEMOS_HPP
#define DUOC_DSL_DEMOS_HPP

#include <string>
#include <vector>

namespace duoc::dsl {

/// Names of the built-in scripts: chsh, activation, witness, purify,
/// consistency, span.
std::vector<std::string> demo_names();

/// Source of a built-in script; throws duoc::DomainError for unknown names.
const std::string& demo_source(const std::string& name);

}  // namespace duoc::dsl

#endif  // DUOC_DSL_DEMOS_HPP
