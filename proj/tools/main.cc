// Copyright 2026 The setbdd Authors
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
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "script.h"

int main(int argc, char** argv) {
  CLI::App app{"Runs set-constraint scripts against the BDD set domain."};

  std::string script_path;
  setbdd::cli::RunOptions options;
  std::string dot_dir;
  int universe = 0;

  app.add_option("--script", script_path,
                 "Script file to run (reads stdin when omitted)");
  app.add_option("--order", options.order, "Variable order source")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, setbdd::cli::VarOrder>{
              {"decl", setbdd::cli::VarOrder::kDecl},
              {"alpha", setbdd::cli::VarOrder::kAlpha}},
          CLI::ignore_case));
  auto* universe_opt =
      app.add_option("--universe", universe, "Oracle universe {1..n}")
          ->check(CLI::Range(1, 63));
  app.add_option("--max-enum", options.max_enum,
                 "Largest valuation count the oracle may enumerate");
  app.add_option("--dot-dir", dot_dir, "Directory for relative dot paths");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : setbdd::cli::RunResult::kError;
  }
  if (*universe_opt) options.universe = universe;
  options.dot_dir = dot_dir;

  std::string text;
  if (script_path.empty()) {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(script_path);
    if (!in) {
      std::cerr << "error: cannot read '" << script_path << "'\n";
      return setbdd::cli::RunResult::kError;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  const setbdd::cli::RunResult result = setbdd::cli::run_script(text, options);
  std::cout << result.report;
  if (!result.error.empty()) {
    std::cerr << "error: "
              << (script_path.empty() ? std::string("<stdin>") : script_path)
              << ": " << result.error << "\n";
  }
  return result.exit_code;
}
