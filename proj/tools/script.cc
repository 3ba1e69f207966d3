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

#include "script.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <span>
#include <sstream>

#include "setbdd/bdd.h"
#include "setbdd/domain.h"
#include "setbdd/error.h"
#include "setbdd/translate.h"

namespace setbdd::cli {
namespace {

const std::map<std::string, Command::Kind, std::less<>>& command_words() {
  static const auto* words = new std::map<std::string, Command::Kind, std::less<>>{
      {"universe", Command::Kind::kUniverse},
      {"decl", Command::Kind::kDecl},
      {"assume", Command::Kind::kAssume},
      {"check", Command::Kind::kCheck},
      {"checknot", Command::Kind::kCheckNot},
      {"push", Command::Kind::kPush},
      {"pop", Command::Kind::kPop},
      {"join", Command::Kind::kJoin},
      {"widen", Command::Kind::kWiden},
      {"project", Command::Kind::kProject},
      {"dot", Command::Kind::kDot},
      {"stats", Command::Kind::kStats},
      {"gamma", Command::Kind::kGamma},
  };
  return *words;
}

[[noreturn]] void fail(const std::string& message, const Token& at) {
  throw ParseError(message, at.line, at.column);
}

std::vector<std::string> parse_names(std::span<const Token> args) {
  std::vector<std::string> names;
  for (const Token& t : args) {
    if (t.kind != Token::Kind::kIdent) {
      fail("expected set variable name, found '" + t.text + "'", t);
    }
    names.push_back(t.text);
  }
  return names;
}

Command parse_command(std::span<const Token> stmt) {
  const Token& head = stmt.front();
  const auto& words = command_words();
  auto it = head.kind == Token::Kind::kIdent ? words.find(head.text)
                                             : words.end();
  if (it == words.end()) fail("unknown command '" + head.text + "'", head);

  Command c;
  c.kind = it->second;
  c.line = head.line;
  c.column = head.column;
  const std::span<const Token> args = stmt.subspan(1);

  auto no_args = [&] {
    if (!args.empty()) {
      fail("'" + head.text + "' takes no arguments", args.front());
    }
  };

  switch (c.kind) {
    case Command::Kind::kUniverse: {
      if (args.size() != 1 || (args[0].kind != Token::Kind::kNumber &&
                               args[0].kind != Token::Kind::kEmpty)) {
        fail("expected 'universe <n>'", args.empty() ? head : args[0]);
      }
      const std::string& digits = args[0].text;
      if (digits.size() > 3 || std::stoi(digits) < 1 ||
          std::stoi(digits) > static_cast<int>(Universe::kMaxAtoms)) {
        fail("universe size must be between 1 and " +
                 std::to_string(Universe::kMaxAtoms),
             args[0]);
      }
      c.universe_size = std::stoi(digits);
      break;
    }
    case Command::Kind::kDecl:
      if (args.empty()) fail("'decl' needs at least one name", head);
      c.names = parse_names(args);
      break;
    case Command::Kind::kProject:
      c.names = parse_names(args);
      break;
    case Command::Kind::kAssume:
    case Command::Kind::kCheck:
    case Command::Kind::kCheckNot:
      if (args.empty()) fail("expected constraint", head);
      c.constraint = parse_constraint(args);
      break;
    case Command::Kind::kDot:
      if (args.size() != 1 || args[0].kind != Token::Kind::kString) {
        fail("expected 'dot \"<path>\"'", args.empty() ? head : args[0]);
      }
      c.path = args[0].text;
      break;
    default:
      no_args();
      break;
  }
  return c;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const std::string& n : names) {
    if (!out.empty()) out += ",";
    out += n;
  }
  return out;
}

// Executes one script against a single manager.
class Runner {
 public:
  Runner(const Script& script, const RunOptions& options)
      : script_(script), options_(options), manager_(0), domain_(manager_) {}

  RunResult run();

 private:
  // Returns the verdict; sets failed_ for a failing check.
  std::string execute(const Command& c);

  AbstractState& current() { return stack_.back(); }
  AbstractState pop_state(const Command& c);
  std::string stack_depth() const {
    return "depth " + std::to_string(stack_.size());
  }

  const Script& script_;
  const RunOptions& options_;
  std::map<std::string, VarId> order_;
  Manager manager_;
  SetDomain domain_;
  std::vector<AbstractState> stack_;
  std::optional<Universe> universe_;
  bool failed_ = false;
  bool universe_seen_ = false;
};

RunResult Runner::run() {
  RunResult result;

  // The BDD variable order is fixed up front from every decl in the script.
  std::vector<std::string> names;
  for (const Command& c : script_.commands) {
    if (c.kind != Command::Kind::kDecl) continue;
    for (const std::string& n : c.names) {
      if (std::find(names.begin(), names.end(), n) != names.end()) {
        result.exit_code = RunResult::kError;
        result.error = "line " + std::to_string(c.line) +
                       ": set variable '" + n + "' declared twice";
        return result;
      }
      names.push_back(n);
    }
  }
  if (options_.order == VarOrder::kAlpha) std::sort(names.begin(), names.end());
  for (std::uint32_t i = 0; i < names.size(); ++i) order_[names[i]] = VarId{i};

  manager_ = Manager(static_cast<std::uint32_t>(names.size()));
  stack_.push_back(domain_.top(VarBinding()));
  if (options_.universe) universe_ = Universe::Range(*options_.universe);

  std::ostringstream report;
  for (const Command& c : script_.commands) {
    report << "L" << c.line << ": " << describe(c) << " -> ";
    try {
      report << execute(c) << "\n";
    } catch (const Error& e) {
      report << "error: " << e.what() << "\n";
      result.exit_code = RunResult::kError;
      result.error = "line " + std::to_string(c.line) + ": " + e.what();
      result.report = report.str();
      return result;
    }
  }
  result.report = report.str();
  result.exit_code = failed_ ? RunResult::kCheckFailed : RunResult::kOk;
  return result;
}

AbstractState Runner::pop_state(const Command& c) {
  if (stack_.size() < 2) {
    throw UsageError("'" + describe(c) + "' needs at least two states");
  }
  AbstractState s = std::move(stack_.back());
  stack_.pop_back();
  return s;
}

std::string Runner::execute(const Command& c) {
  switch (c.kind) {
    case Command::Kind::kUniverse:
      if (universe_seen_) throw UsageError("universe declared twice");
      universe_seen_ = true;
      universe_ = Universe::Range(c.universe_size);
      return "ok";

    case Command::Kind::kDecl:
      for (AbstractState& s : stack_) {
        for (const std::string& n : c.names) s.binding.bind(n, order_.at(n));
      }
      return "ok";

    case Command::Kind::kAssume:
      current() = domain_.assume(current(), *c.constraint);
      return domain_.is_bottom(current()) ? "ok (bottom)" : "ok";

    case Command::Kind::kCheck:
    case Command::Kind::kCheckNot: {
      const AbstractState& s = current();
      const AbstractState target{s.binding,
                                 tr_cons(*c.constraint, s.binding, manager_)};
      const bool entailed = domain_.leq(s, target);
      const bool pass = c.kind == Command::Kind::kCheck ? entailed : !entailed;
      if (!pass) failed_ = true;
      return pass ? "pass" : "fail";
    }

    case Command::Kind::kPush:
      stack_.push_back(current());
      return stack_depth();

    case Command::Kind::kPop:
      pop_state(c);
      return stack_depth();

    case Command::Kind::kJoin:
    case Command::Kind::kWiden: {
      const AbstractState next = pop_state(c);
      AbstractState& previous = current();
      previous = c.kind == Command::Kind::kJoin
                     ? domain_.join(previous, next)
                     : domain_.widen(previous, next);
      return stack_depth();
    }

    case Command::Kind::kProject:
      current() = domain_.project(current(), c.names);
      return "ok";

    case Command::Kind::kDot: {
      std::filesystem::path path(c.path);
      if (!options_.dot_dir.empty() && path.is_relative()) {
        path = options_.dot_dir / path;
      }
      std::ofstream out(path);
      out << manager_.to_dot(current().bdd);
      out.close();
      if (!out) throw Error("cannot write '" + path.string() + "'");
      return "wrote " + c.path;
    }

    case Command::Kind::kStats: {
      const StateStats st = domain_.stats(current());
      std::string line = "nodes=" + std::to_string(st.node_count) +
                         " support={" + join_names(st.support) + "}";
      if (universe_) {
        try {
          const auto gamma = enumerate_gamma(manager_, current().bdd,
                                             current().binding, *universe_,
                                             options_.max_enum);
          line += " gamma=" + std::to_string(gamma.size());
        } catch (const EnumerationCapExceeded&) {
          // Too large to enumerate; report the symbolic part only.
        }
      }
      return line;
    }

    case Command::Kind::kGamma: {
      if (!universe_) {
        throw UsageError("gamma needs a universe ('universe <n>;' or --universe)");
      }
      const auto gamma = enumerate_gamma(manager_, current().bdd,
                                         current().binding, *universe_,
                                         options_.max_enum);
      std::string line = std::to_string(gamma.size()) + " valuations [";
      for (std::size_t i = 0; i < gamma.size(); ++i) {
        if (i > 0) line += "; ";
        line += gamma[i].to_string(*universe_);
      }
      return line + "]";
    }
  }
  return "";
}

}  // namespace

Script parse_script(std::string_view text) {
  const std::vector<Token> tokens = tokenize(text);
  Script script;
  std::size_t start = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.kind == Token::Kind::kEnd) {
      if (i != start) fail("expected ';' after statement", t);
      break;
    }
    if (t.kind != Token::Kind::kSemicolon) continue;
    if (i != start) {
      script.commands.push_back(parse_command(
          std::span<const Token>(tokens).subspan(start, i - start)));
    }
    start = i + 1;
  }
  return script;
}

std::string describe(const Command& c) {
  auto with_names = [&](const char* word) {
    std::string out = word;
    for (const std::string& n : c.names) out += " " + n;
    return out;
  };
  switch (c.kind) {
    case Command::Kind::kUniverse:
      return "universe " + std::to_string(c.universe_size);
    case Command::Kind::kDecl:
      return with_names("decl");
    case Command::Kind::kAssume:
      return "assume " + format(*c.constraint);
    case Command::Kind::kCheck:
      return "check " + format(*c.constraint);
    case Command::Kind::kCheckNot:
      return "checknot " + format(*c.constraint);
    case Command::Kind::kPush:
      return "push";
    case Command::Kind::kPop:
      return "pop";
    case Command::Kind::kJoin:
      return "join";
    case Command::Kind::kWiden:
      return "widen";
    case Command::Kind::kProject:
      return with_names("project");
    case Command::Kind::kDot:
      return "dot \"" + c.path + "\"";
    case Command::Kind::kStats:
      return "stats";
    case Command::Kind::kGamma:
      return "gamma";
  }
  return "";
}

RunResult run_script(std::string_view text, const RunOptions& options) {
  Script script;
  try {
    script = parse_script(text);
  } catch (const ParseError& e) {
    RunResult result;
    result.exit_code = RunResult::kError;
    result.error = e.what();
    return result;
  }
  try {
    return Runner(script, options).run();
  } catch (const Error& e) {
    RunResult result;
    result.exit_code = RunResult::kError;
    result.error = e.what();
    return result;
  }
}

}  // namespace setbdd::cli
