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

#include "setbdd/set_lang.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <unordered_set>
#include <utility>

#include "setbdd/error.h"

namespace setbdd {

SetExpr::SetExpr(Kind kind, std::string name,
                 std::shared_ptr<const SetExpr> lhs,
                 std::shared_ptr<const SetExpr> rhs)
    : kind_(kind),
      name_(std::move(name)),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {}

SetExpr SetExpr::Empty() { return SetExpr(Kind::kEmpty, "", nullptr, nullptr); }

SetExpr SetExpr::Universe() {
  return SetExpr(Kind::kUniverse, "", nullptr, nullptr);
}

SetExpr SetExpr::Var(std::string name) {
  if (name.empty()) throw UsageError("set variable name must be nonempty");
  return SetExpr(Kind::kVar, std::move(name), nullptr, nullptr);
}

SetExpr SetExpr::Union(SetExpr lhs, SetExpr rhs) {
  return SetExpr(Kind::kUnion, "", std::make_shared<const SetExpr>(std::move(lhs)),
                 std::make_shared<const SetExpr>(std::move(rhs)));
}

SetExpr SetExpr::Intersect(SetExpr lhs, SetExpr rhs) {
  return SetExpr(Kind::kIntersect, "",
                 std::make_shared<const SetExpr>(std::move(lhs)),
                 std::make_shared<const SetExpr>(std::move(rhs)));
}

SetExpr SetExpr::DisjointUnion(SetExpr lhs, SetExpr rhs) {
  return SetExpr(Kind::kDisjointUnion, "",
                 std::make_shared<const SetExpr>(std::move(lhs)),
                 std::make_shared<const SetExpr>(std::move(rhs)));
}

SetExpr SetExpr::Difference(SetExpr lhs, SetExpr rhs) {
  return SetExpr(Kind::kDifference, "",
                 std::make_shared<const SetExpr>(std::move(lhs)),
                 std::make_shared<const SetExpr>(std::move(rhs)));
}

SetExpr SetExpr::Complement(SetExpr operand) {
  return SetExpr(Kind::kComplement, "",
                 std::make_shared<const SetExpr>(std::move(operand)), nullptr);
}

bool SetExpr::is_binary() const {
  switch (kind_) {
    case Kind::kUnion:
    case Kind::kIntersect:
    case Kind::kDisjointUnion:
    case Kind::kDifference:
      return true;
    default:
      return false;
  }
}

std::size_t SetExpr::depth() const {
  if (kind_ == Kind::kComplement) return 1 + lhs_->depth();
  if (is_binary()) return 1 + std::max(lhs_->depth(), rhs_->depth());
  return 1;
}

bool operator==(const SetExpr& a, const SetExpr& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == SetExpr::Kind::kVar) return a.name_ == b.name_;
  if (a.kind_ == SetExpr::Kind::kComplement) return *a.lhs_ == *b.lhs_;
  if (a.is_binary()) return *a.lhs_ == *b.lhs_ && *a.rhs_ == *b.rhs_;
  return true;
}

SetConstraint SetConstraint::True() { return SetConstraint(Kind::kTrue); }
SetConstraint SetConstraint::False() { return SetConstraint(Kind::kFalse); }

SetConstraint SetConstraint::Subset(SetExpr lhs, SetExpr rhs) {
  SetConstraint k(Kind::kSubset);
  k.lhs_expr_ = std::make_shared<const SetExpr>(std::move(lhs));
  k.rhs_expr_ = std::make_shared<const SetExpr>(std::move(rhs));
  return k;
}

SetConstraint SetConstraint::Equal(SetExpr lhs, SetExpr rhs) {
  SetConstraint k(Kind::kEqual);
  k.lhs_expr_ = std::make_shared<const SetExpr>(std::move(lhs));
  k.rhs_expr_ = std::make_shared<const SetExpr>(std::move(rhs));
  return k;
}

SetConstraint SetConstraint::And(SetConstraint lhs, SetConstraint rhs) {
  SetConstraint k(Kind::kAnd);
  k.lhs_ = std::make_shared<const SetConstraint>(std::move(lhs));
  k.rhs_ = std::make_shared<const SetConstraint>(std::move(rhs));
  return k;
}

SetConstraint SetConstraint::Or(SetConstraint lhs, SetConstraint rhs) {
  SetConstraint k(Kind::kOr);
  k.lhs_ = std::make_shared<const SetConstraint>(std::move(lhs));
  k.rhs_ = std::make_shared<const SetConstraint>(std::move(rhs));
  return k;
}

bool SetConstraint::contains_or() const {
  switch (kind_) {
    case Kind::kOr:
      return true;
    case Kind::kAnd:
      return lhs_->contains_or() || rhs_->contains_or();
    default:
      return false;
  }
}

std::size_t SetConstraint::depth() const {
  switch (kind_) {
    case Kind::kSubset:
    case Kind::kEqual:
      return 1 + std::max(lhs_expr_->depth(), rhs_expr_->depth());
    case Kind::kAnd:
    case Kind::kOr:
      return 1 + std::max(lhs_->depth(), rhs_->depth());
    default:
      return 1;
  }
}

bool operator==(const SetConstraint& a, const SetConstraint& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case SetConstraint::Kind::kSubset:
    case SetConstraint::Kind::kEqual:
      return *a.lhs_expr_ == *b.lhs_expr_ && *a.rhs_expr_ == *b.rhs_expr_;
    case SetConstraint::Kind::kAnd:
    case SetConstraint::Kind::kOr:
      return *a.lhs_ == *b.lhs_ && *a.rhs_ == *b.rhs_;
    default:
      return true;
  }
}

namespace {

void collect(const SetExpr& e, std::vector<std::string>& out,
             std::unordered_set<std::string>& seen) {
  if (e.kind() == SetExpr::Kind::kVar) {
    if (seen.insert(e.name()).second) out.push_back(e.name());
  } else if (e.kind() == SetExpr::Kind::kComplement) {
    collect(e.lhs(), out, seen);
  } else if (e.is_binary()) {
    collect(e.lhs(), out, seen);
    collect(e.rhs(), out, seen);
  }
}

void collect(const SetConstraint& k, std::vector<std::string>& out,
             std::unordered_set<std::string>& seen) {
  if (k.is_comparison()) {
    collect(k.lhs_expr(), out, seen);
    collect(k.rhs_expr(), out, seen);
  } else if (k.kind() == SetConstraint::Kind::kAnd ||
             k.kind() == SetConstraint::Kind::kOr) {
    collect(k.lhs(), out, seen);
    collect(k.rhs(), out, seen);
  }
}

}  // namespace

std::vector<std::string> variables_of(const SetExpr& e) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  collect(e, out, seen);
  return out;
}

std::vector<std::string> variables_of(const SetConstraint& k) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  collect(k, out, seen);
  return out;
}

// ---------------------------------------------------------------------------
// Lexer

bool is_keyword(std::string_view word) {
  return word == "U" || word == "and" || word == "or" || word == "true" ||
         word == "false";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  auto emit = [&](Token::Kind kind, std::size_t length) {
    tokens.push_back({kind, std::string(text.substr(i, length)), line, column});
    advance(length);
  };
  auto peek = [&](std::size_t offset) {
    return i + offset < text.size() ? text[i + offset] : '\0';
  };

  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t n = 1;
      while (std::isalnum(static_cast<unsigned char>(peek(n))) ||
             peek(n) == '_') {
        ++n;
      }
      const std::string_view word = text.substr(i, n);
      Token::Kind kind = Token::Kind::kIdent;
      if (word == "U") kind = Token::Kind::kUniverse;
      if (word == "and") kind = Token::Kind::kAnd;
      if (word == "or") kind = Token::Kind::kOr;
      if (word == "true") kind = Token::Kind::kTrue;
      if (word == "false") kind = Token::Kind::kFalse;
      emit(kind, n);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t n = 1;
      while (std::isdigit(static_cast<unsigned char>(peek(n)))) ++n;
      const bool empty_set = n == 1 && c == '0';
      emit(empty_set ? Token::Kind::kEmpty : Token::Kind::kNumber, n);
    } else if (c == '"') {
      std::size_t n = 1;
      while (i + n < text.size() && text[i + n] != '"' && text[i + n] != '\n') {
        ++n;
      }
      if (i + n >= text.size() || text[i + n] != '"') {
        throw ParseError("unterminated string literal", line, column);
      }
      tokens.push_back(
          {Token::Kind::kString, std::string(text.substr(i + 1, n - 1)), line,
           column});
      advance(n + 1);
    } else if (c == '+') {
      if (peek(1) == '+') {
        emit(Token::Kind::kPlusPlus, 2);
      } else {
        emit(Token::Kind::kPlus, 1);
      }
    } else if (c == '<' && peek(1) == '=') {
      emit(Token::Kind::kSubsetEq, 2);
    } else if (c == '=' && peek(1) == '=') {
      emit(Token::Kind::kEqEq, 2);
    } else if (c == '&') {
      emit(Token::Kind::kAmp, 1);
    } else if (c == '\\') {
      emit(Token::Kind::kBackslash, 1);
    } else if (c == '~') {
      emit(Token::Kind::kTilde, 1);
    } else if (c == '(') {
      emit(Token::Kind::kLParen, 1);
    } else if (c == ')') {
      emit(Token::Kind::kRParen, 1);
    } else if (c == ';') {
      emit(Token::Kind::kSemicolon, 1);
    } else if (std::ispunct(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("unknown operator '") + c + "'", line,
                       column);
    } else {
      throw ParseError("unexpected character", line, column);
    }
  }
  tokens.push_back({Token::Kind::kEnd, "", line, column});
  return tokens;
}

// ---------------------------------------------------------------------------
// Parser
//
// Expression precedence, tightest first: ~, &, \, then + and ++ (equal,
// left-associative). Constraints: comparison, then `and`, then `or`.

namespace {

bool is_expr_operator(Token::Kind kind) {
  switch (kind) {
    case Token::Kind::kPlus:
    case Token::Kind::kPlusPlus:
    case Token::Kind::kAmp:
    case Token::Kind::kBackslash:
    case Token::Kind::kSubsetEq:
    case Token::Kind::kEqEq:
      return true;
    default:
      return false;
  }
}

std::string describe(const Token& t) {
  if (t.kind == Token::Kind::kEnd) return "end of input";
  if (t.kind == Token::Kind::kString) return "string \"" + t.text + "\"";
  return "'" + t.text + "'";
}

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

  SetExpr expr_only() {
    SetExpr e = parse_union();
    expect_end();
    return e;
  }

  SetConstraint constraint_only() {
    SetConstraint k = parse_or();
    expect_end();
    return k;
  }

 private:
  const Token& peek(std::size_t offset = 0) const {
    const std::size_t at = pos_ + offset;
    if (at < tokens_.size()) return tokens_[at];
    return end_token();
  }

  const Token& end_token() const {
    if (!end_) {
      std::size_t line = 1;
      std::size_t column = 1;
      if (!tokens_.empty()) {
        const Token& last = tokens_.back();
        line = last.line;
        column = last.column + last.text.size();
      }
      end_ = Token{Token::Kind::kEnd, "", line, column};
    }
    return *end_;
  }

  bool at(Token::Kind kind) const { return peek().kind == kind; }

  const Token& take() {
    const Token& t = peek();
    if (pos_ < tokens_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::string& message, const Token& t) const {
    throw ParseError(message, t.line, t.column);
  }

  void expect(Token::Kind kind, const char* what) {
    if (!at(kind)) fail(std::string("expected ") + what + ", found " +
                        describe(peek()), peek());
    take();
  }

  void expect_end() {
    if (at(Token::Kind::kEnd)) return;
    if (at(Token::Kind::kRParen)) fail("unbalanced parenthesis", peek());
    fail("unexpected " + describe(peek()), peek());
  }

  // Index of the ')' matching the '(' at `open`, relative to pos_.
  std::size_t matching_paren(std::size_t open) const {
    int balance = 0;
    for (std::size_t k = open;; ++k) {
      const Token& t = peek(k);
      if (t.kind == Token::Kind::kEnd) {
        fail("unbalanced parenthesis", peek(open));
      }
      if (t.kind == Token::Kind::kLParen) ++balance;
      if (t.kind == Token::Kind::kRParen && --balance == 0) return k;
    }
  }

  SetConstraint parse_or() {
    SetConstraint k = parse_and();
    while (at(Token::Kind::kOr)) {
      take();
      k = SetConstraint::Or(std::move(k), parse_and());
    }
    return k;
  }

  SetConstraint parse_and() {
    SetConstraint k = parse_atom();
    while (at(Token::Kind::kAnd)) {
      take();
      k = SetConstraint::And(std::move(k), parse_atom());
    }
    return k;
  }

  SetConstraint parse_atom() {
    if (at(Token::Kind::kTrue)) {
      take();
      return SetConstraint::True();
    }
    if (at(Token::Kind::kFalse)) {
      take();
      return SetConstraint::False();
    }
    if (at(Token::Kind::kLParen)) {
      // A parenthesized group is a set expression only if an expression or
      // comparison operator follows it; otherwise it wraps a constraint.
      const std::size_t close = matching_paren(0);
      if (!is_expr_operator(peek(close + 1).kind)) {
        take();
        SetConstraint k = parse_or();
        expect(Token::Kind::kRParen, "')'");
        return k;
      }
    }
    return parse_comparison();
  }

  SetConstraint parse_comparison() {
    SetExpr lhs = parse_union();
    if (at(Token::Kind::kSubsetEq)) {
      take();
      return SetConstraint::Subset(std::move(lhs), parse_union());
    }
    if (at(Token::Kind::kEqEq)) {
      take();
      return SetConstraint::Equal(std::move(lhs), parse_union());
    }
    fail("expected '<=' or '==', found " + describe(peek()), peek());
  }

  SetExpr parse_union() {
    SetExpr e = parse_difference();
    while (at(Token::Kind::kPlus) || at(Token::Kind::kPlusPlus)) {
      const bool disjoint = take().kind == Token::Kind::kPlusPlus;
      SetExpr rhs = parse_difference();
      e = disjoint ? SetExpr::DisjointUnion(std::move(e), std::move(rhs))
                   : SetExpr::Union(std::move(e), std::move(rhs));
    }
    return e;
  }

  SetExpr parse_difference() {
    SetExpr e = parse_intersect();
    while (at(Token::Kind::kBackslash)) {
      take();
      e = SetExpr::Difference(std::move(e), parse_intersect());
    }
    return e;
  }

  SetExpr parse_intersect() {
    SetExpr e = parse_unary();
    while (at(Token::Kind::kAmp)) {
      take();
      e = SetExpr::Intersect(std::move(e), parse_unary());
    }
    return e;
  }

  SetExpr parse_unary() {
    if (at(Token::Kind::kTilde)) {
      take();
      return SetExpr::Complement(parse_unary());
    }
    return parse_primary();
  }

  SetExpr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::kEmpty:
        take();
        return SetExpr::Empty();
      case Token::Kind::kUniverse:
        take();
        return SetExpr::Universe();
      case Token::Kind::kIdent:
        take();
        return SetExpr::Var(t.text);
      case Token::Kind::kLParen: {
        matching_paren(0);
        take();
        SetExpr e = parse_union();
        expect(Token::Kind::kRParen, "')'");
        return e;
      }
      case Token::Kind::kRParen:
        fail("unbalanced parenthesis", t);
      default:
        fail("expected set expression, found " + describe(t), t);
    }
  }

  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
  mutable std::optional<Token> end_;
};

}  // namespace

SetExpr parse_expr(std::span<const Token> tokens) {
  return Parser(tokens).expr_only();
}

SetConstraint parse_constraint(std::span<const Token> tokens) {
  return Parser(tokens).constraint_only();
}

SetExpr parse_expr(std::string_view text) {
  const std::vector<Token> tokens = tokenize(text);
  return parse_expr(std::span<const Token>(tokens));
}

SetConstraint parse_constraint(std::string_view text) {
  const std::vector<Token> tokens = tokenize(text);
  return parse_constraint(std::span<const Token>(tokens));
}

// ---------------------------------------------------------------------------
// Printer

std::string format(const SetExpr& e) {
  switch (e.kind()) {
    case SetExpr::Kind::kEmpty:
      return "0";
    case SetExpr::Kind::kUniverse:
      return "U";
    case SetExpr::Kind::kVar:
      return e.name();
    case SetExpr::Kind::kComplement:
      return "~" + format(e.lhs());
    case SetExpr::Kind::kUnion:
      return "(" + format(e.lhs()) + " + " + format(e.rhs()) + ")";
    case SetExpr::Kind::kIntersect:
      return "(" + format(e.lhs()) + " & " + format(e.rhs()) + ")";
    case SetExpr::Kind::kDisjointUnion:
      return "(" + format(e.lhs()) + " ++ " + format(e.rhs()) + ")";
    case SetExpr::Kind::kDifference:
      return "(" + format(e.lhs()) + " \\ " + format(e.rhs()) + ")";
  }
  return "";
}

std::string format(const SetConstraint& k) {
  switch (k.kind()) {
    case SetConstraint::Kind::kTrue:
      return "true";
    case SetConstraint::Kind::kFalse:
      return "false";
    case SetConstraint::Kind::kSubset:
      return "(" + format(k.lhs_expr()) + " <= " + format(k.rhs_expr()) + ")";
    case SetConstraint::Kind::kEqual:
      return "(" + format(k.lhs_expr()) + " == " + format(k.rhs_expr()) + ")";
    case SetConstraint::Kind::kAnd:
      return "(" + format(k.lhs()) + " and " + format(k.rhs()) + ")";
    case SetConstraint::Kind::kOr:
      return "(" + format(k.lhs()) + " or " + format(k.rhs()) + ")";
  }
  return "";
}

}  // namespace setbdd
