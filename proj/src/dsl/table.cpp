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


#include "duoc/dsl/table.hpp"

#include <cstdio>
#include <fstream>

#include "duoc/errors.hpp"
#include "json.hpp"

namespace duoc::dsl {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  throw DomainError("unknown output format '" + name + "' (expected csv or json)");
}

std::string to_csv(const ResultTable& t) {
  std::string out = "run,kind,quantity,value\r\n";
  for (const auto& r : t.rows) {
    out += csv_field(r.run) + "," + csv_field(r.kind) + "," + csv_field(r.quantity) + "," +
           csv_number(r.value) + "\r\n";
  }
  return out;
}

std::string to_json(const ResultTable& t) {
  nlohmann::ordered_json j;
  j["metadata"] = {{"script", t.metadata.script},
                   {"seed", t.metadata.seed},
                   {"tolerance", t.metadata.tolerance},
                   {"engine_version", t.metadata.engine_version}};
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    j["rows"].push_back({{"run", r.run}, {"kind", r.kind}, {"quantity", r.quantity}, {"value", r.value}});
  }
  return j.dump(2) + "\n";
}

ResultTable from_json(const std::string& text) {
  ResultTable t;
  try {
    const auto j = nlohmann::json::parse(text);
    const auto& m = j.at("metadata");
    t.metadata.script = m.at("script").get<std::string>();
    t.metadata.seed = m.at("seed").get<std::uint64_t>();
    t.metadata.tolerance = m.at("tolerance").get<double>();
    t.metadata.engine_version = m.at("engine_version").get<std::string>();
    for (const auto& r : j.at("rows")) {
      t.rows.push_back({r.at("run").get<std::string>(), r.at("kind").get<std::string>(),
                        r.at("quantity").get<std::string>(), r.at("value").get<double>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed result table: ") + e.what());
  }
  return t;
}

std::string render(const ResultTable& t, Format format) {
  return format == Format::kCsv ? to_csv(t) : to_json(t);
}

void emit_results(const ResultTable& t, Format format, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << render(t, format);
  out.close();
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace duoc::dsl
