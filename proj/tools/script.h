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

#ifndef SETBDD_TOOLS_SCRIPT_H_
#define SETBDD_TOOLS_SCRIPT_H_

// Batch constraint scripts.
//
//   universe <n>;          oracle atoms {1..n} (at most once)
//   decl <names>;          bind set variables
//   assume <K>;            meet the current state with K
//   check <K>;             pass iff current ⊑ K
//   checknot <K>;          pass iff not (current ⊑ K)
//   push; pop;             duplicate / drop the current state
//   join; widen;           pop two states, push their join
//   project <names>;       existentially forget variables
//   dot "<path>";          write the current BDD as Graphviz
//   stats;                 node count, support, |γ| when enumerable
//   gamma;                 enumerate γ of the current state
//
// Statements end with ';'. '#' starts a line comment.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "setbdd/oracle.h"
#include "setbdd/set_lang.h"

namespace setbdd::cli {

struct Command {
  enum class Kind {
    kUniverse,
    kDecl,
    kAssume,
    kCheck,
    kCheckNot,
    kPush,
    kPop,
    kJoin,
    kWiden,
    kProject,
    kDot,
    kStats,
    kGamma,
  };

  Kind kind;
  std::size_t line = 0;
  std::size_t column = 0;
  std::vector<std::string> names;             // decl, project
  std::optional<SetConstraint> constraint;    // assume, check, checknot
  std::string path;                           // dot
  int universe_size = 0;                      // universe
};

struct Script {
  std::vector<Command> commands;
};

// Throws ParseError.
Script parse_script(std::string_view text);

// Canonical text of a command as it appears in reports.
std::string describe(const Command& c);

enum class VarOrder { kDecl, kAlpha };

struct RunOptions {
  VarOrder order = VarOrder::kDecl;
  std::optional<int> universe;
  std::uint64_t max_enum = kDefaultMaxValuations;
  std::filesystem::path dot_dir;
};

struct RunResult {
  static constexpr int kOk = 0;
  static constexpr int kError = 1;
  static constexpr int kCheckFailed = 2;

  int exit_code = kOk;
  // One "L<line>: <command> -> <verdict|value>" line per executed command.
  std::string report;
  // Set when exit_code == kError.
  std::string error;
};

RunResult run_script(std::string_view text, const RunOptions& options);

}  // namespace setbdd::cli

#endif  // SETBDD_TOOLS_SCRIPT_H_
