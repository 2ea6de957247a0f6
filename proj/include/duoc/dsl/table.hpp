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

#ifndef DUOC_DSL_TABLE_HPP
#define DUOC_DSL_TABLE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace duoc::dsl {

inline constexpr const char* kEngineVersion = "0.1.0";

struct TableMetadata {
  std::string script;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  std::string engine_version = kEngineVersion;

  bool operator==(const TableMetadata&) const = default;
};

struct ResultRow {
  std::string run;
  std::string kind;
  std::string quantity;
  double value;

  bool operator==(const ResultRow&) const = default;
};

/// Rows in execution order under the columns run, kind, quantity, value.
struct ResultTable {
  TableMetadata metadata;
  std::vector<ResultRow> rows;

  bool operator==(const ResultTable&) const = default;
};

enum class Format { kCsv, kJson };

Format parse_format(const std::string& name);

/// Header plus one line per row; RFC 4180 quoting, 17 significant digits.
std::string to_csv(const ResultTable& t);
/// {"metadata": {...}, "rows": [...]}.
std::string to_json(const ResultTable& t);
ResultTable from_json(const std::string& text);

std::string render(const ResultTable& t, Format format);
/// Writes the rendered table; throws duoc::Error naming the path on failure.
void emit_results(const ResultTable& t, Format format, const std::string& path);

}  // namespace duoc::dsl

#endif  // DUOC_DSL_TABLE_HPP
