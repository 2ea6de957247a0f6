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

#ifndef DUOC_DSL_INTERPRETER_HPP
#define DUOC_DSL_INTERPRETER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "duoc/dsl/ast.hpp"
#include "duoc/dsl/table.hpp"

namespace duoc::dsl {

inline constexpr double kDefaultTolerance = 1e-9;

struct RunConfig {
  std::uint64_t seed = 0;
  double tolerance = kDefaultTolerance;
};

struct AssertionFailure {
  SourceLoc loc;
  std::string message;
};

struct RunOutcome {
  ResultTable table;
  std::vector<AssertionFailure> failures;
  std::optional<EmitDecl> emit;
};

/// Executes the statements in order. Domain errors are rethrown as
/// ScriptError carrying the statement location; failed assertions are
/// collected and do not stop the run.
RunOutcome run_script(const Script& script, const RunConfig& cfg = {});

/// Default tolerance, overridden by the DUOC_TOL environment variable.
double default_tolerance();

}  // namespace duoc::dsl

#endif  // DUOC_DSL_INTERPRETER_HPP
