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

#ifndef SETBDD_SET_LANG_H_
#define SETBDD_SET_LANG_H_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace setbdd {

// Set expressions over named set variables.
//
//   0       empty set            A + B   union
//   U       universe             A & B   intersection
//   A       variable             A ++ B  disjoint union
//   ~A      complement           A \ B   difference
class SetExpr {
 public:
  enum class Kind {
    kEmpty,
    kUniverse,
    kVar,
    kUnion,
    kIntersect,
    kDisjointUnion,
    kDifference,
    kComplement,
  };

  static SetExpr Empty();
  static SetExpr Universe();
  static SetExpr Var(std::string name);
  static SetExpr Union(SetExpr lhs, SetExpr rhs);
  static SetExpr Intersect(SetExpr lhs, SetExpr rhs);
  static SetExpr DisjointUnion(SetExpr lhs, SetExpr rhs);
  static SetExpr Difference(SetExpr lhs, SetExpr rhs);
  static SetExpr Complement(SetExpr operand);

  Kind kind() const { return kind_; }
  // Only meaningful for kVar.
  const std::string& name() const { return name_; }
  // Binary nodes have both operands; kComplement has only lhs().
  const SetExpr& lhs() const { return *lhs_; }
  const SetExpr& rhs() const { return *rhs_; }
  bool is_binary() const;

  std::size_t depth() const;

  // Structural equality.
  friend bool operator==(const SetExpr& a, const SetExpr& b);

 private:
  SetExpr(Kind kind, std::string name, std::shared_ptr<const SetExpr> lhs,
          std::shared_ptr<const SetExpr> rhs);

  Kind kind_;
  std::string name_;
  std::shared_ptr<const SetExpr> lhs_;
  std::shared_ptr<const SetExpr> rhs_;
};

// Constraints: true, false, E <= E, E == E, K and K, K or K.
class SetConstraint {
 public:
  enum class Kind { kTrue, kFalse, kSubset, kEqual, kAnd, kOr };

  static SetConstraint True();
  static SetConstraint False();
  static SetConstraint Subset(SetExpr lhs, SetExpr rhs);
  static SetConstraint Equal(SetExpr lhs, SetExpr rhs);
  static SetConstraint And(SetConstraint lhs, SetConstraint rhs);
  static SetConstraint Or(SetConstraint lhs, SetConstraint rhs);

  Kind kind() const { return kind_; }
  bool is_comparison() const {
    return kind_ == Kind::kSubset || kind_ == Kind::kEqual;
  }
  // kSubset / kEqual.
  const SetExpr& lhs_expr() const { return *lhs_expr_; }
  const SetExpr& rhs_expr() const { return *rhs_expr_; }
  // kAnd / kOr.
  const SetConstraint& lhs() const { return *lhs_; }
  const SetConstraint& rhs() const { return *rhs_; }

  bool contains_or() const;
  std::size_t depth() const;

  friend bool operator==(const SetConstraint& a, const SetConstraint& b);

 private:
  explicit SetConstraint(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::shared_ptr<const SetExpr> lhs_expr_;
  std::shared_ptr<const SetExpr> rhs_expr_;
  std::shared_ptr<const SetConstraint> lhs_;
  std::shared_ptr<const SetConstraint> rhs_;
};

// Variable names in order of first occurrence, without duplicates.
std::vector<std::string> variables_of(const SetExpr& e);
std::vector<std::string> variables_of(const SetConstraint& k);

struct Token {
  enum class Kind {
    kIdent,
    kNumber,
    kString,
    kEmpty,       // 0
    kUniverse,    // U
    kTrue,
    kFalse,
    kAnd,
    kOr,
    kPlus,        // +
    kPlusPlus,    // ++
    kAmp,         // &
    kBackslash,   // \ (set difference)
    kTilde,       // ~
    kSubsetEq,    // <=
    kEqEq,        // ==
    kLParen,
    kRParen,
    kSemicolon,
    kEnd,
  };

  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

// Splits `text` into tokens, dropping whitespace and `#` line comments. The
// result always ends with a kEnd token. Throws ParseError on a stray
// character or an unterminated string.
std::vector<Token> tokenize(std::string_view text);

bool is_keyword(std::string_view word);

// Parse a token range that must hold exactly one expression / constraint,
// optionally followed by kEnd.
SetExpr parse_expr(std::span<const Token> tokens);
SetConstraint parse_constraint(std::span<const Token> tokens);

SetExpr parse_expr(std::string_view text);
SetConstraint parse_constraint(std::string_view text);

// Fully parenthesized rendering; parsing the result gives back an equal AST.
std::string format(const SetExpr& e);
std::string format(const SetConstraint& k);

}  // namespace setbdd

#endif  // SETBDD_SET_LANG_H_
