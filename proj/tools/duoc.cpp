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


#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "duoc/dsl/demos.hpp"
#include "duoc/dsl/interpreter.hpp"
#include "duoc/dsl/parser.hpp"
#include "duoc/dsl/printer.hpp"
#include "duoc/errors.hpp"

namespace {

struct Options {
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::string out;
  std::string format;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw duoc::Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string stem(const std::string& path) {
  const auto slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = name.find_last_of('.');
  return dot == std::string::npos || dot == 0 ? name : name.substr(0, dot);
}

int execute(const std::string& source, const std::string& name, const Options& opt) {
  using namespace duoc::dsl;
  const Script script = parse_script(source, name);
  RunConfig cfg;
  cfg.seed = opt.seed;
  cfg.tolerance = opt.tol ? *opt.tol : default_tolerance();
  const RunOutcome outcome = run_script(script, cfg);

  std::string format = opt.format;
  std::string path = opt.out;
  if (outcome.emit) {
    if (format.empty()) format = outcome.emit->format;
    if (path.empty()) path = outcome.emit->path;
  }
  const Format fmt = parse_format(format.empty() ? "csv" : format);
  if (path.empty() || path == "-") {
    std::cout << render(outcome.table, fmt);
  } else {
    emit_results(outcome.table, fmt, path);
  }
  for (const auto& f : outcome.failures) {
    std::cerr << name << ":" << f.loc.line << ":" << f.loc.column << ": " << f.message << "\n";
  }
  return outcome.failures.empty() ? 0 : 1;
}

void add_run_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--seed", opt.seed, "Seed for random constructions and oracle trials");
  cmd->add_option("--tol", opt.tol, "Default assertion tolerance (overrides DUOC_TOL)");
  cmd->add_option("--out", opt.out, "Output path; '-' or unset writes to stdout");
  cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"duoc: experiments on classical/anti-classical composites"};
  app.require_subcommand(1);

  Options opt;
  std::string script_path;
  std::string demo_name;

  auto* run = app.add_subcommand("run", "Run a script");
  run->add_option("script", script_path, "Script file")->required();
  add_run_options(run, opt);

  auto* check = app.add_subcommand("check", "Parse a script without running it");
  check->add_option("script", script_path, "Script file")->required();
  bool print = false;
  check->add_flag("--print", print, "Print the canonical form");

  auto* demo = app.add_subcommand("demo", "Run a built-in script");
  demo->add_option("name", demo_name, "chsh, activation, witness, purify, consistency or span")->required();
  bool show = false;
  demo->add_flag("--show", show, "Print the script instead of running it");
  add_run_options(demo, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string name;
  try {
    if (run->parsed()) {
      name = script_path;
      return execute(read_file(script_path), stem(script_path), opt);
    }
    if (check->parsed()) {
      name = script_path;
      const auto script = duoc::dsl::parse_script(read_file(script_path), stem(script_path));
      if (print) std::cout << duoc::dsl::pretty_print(script);
      else std::cout << script_path << ": ok (" << script.statements.size() << " statements)\n";
      return 0;
    }
    name = demo_name;
    const std::string& source = duoc::dsl::demo_source(demo_name);
    if (show) {
      std::cout << source;
      return 0;
    }
    return execute(source, demo_name, opt);
  } catch (const duoc::Error& e) {
    std::cerr << (name.empty() ? "" : name + ":") << e.what() << "\n";
    return 2;
  }
}
