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

#ifndef SETBDD_TRANSLATE_H_
#define SETBDD_TRANSLATE_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "setbdd/bdd.h"
#include "setbdd/set_lang.h"

namespace setbdd {

// Bijection between set-variable names and BDD variables. VarIds are handed
// out in declaration order and never reused, even after remove().
class VarBinding {
 public:
  VarBinding() = default;

  // Binds each name in order; rejects duplicates and keywords.
  static VarBinding Of(std::span<const std::string> names);
  static VarBinding Of(std::initializer_list<std::string> names);

  VarId declare(const std::string& name);
  // Binds `name` to a caller-chosen VarId that must not be bound already.
  void bind(const std::string& name, VarId v);
  void remove(const std::string& name);

  std::optional<VarId> find(const std::string& name) const;
  // Throws UnboundVariable.
  VarId at(const std::string& name) const;
  std::optional<std::string> name_of(VarId v) const;
  bool contains(const std::string& name) const { return find(name).has_value(); }

  std::size_t size() const { return by_name_.size(); }
  // One past the largest VarId ever handed out; the manager must have at
  // least this many variables.
  std::uint32_t var_bound() const { return next_; }

  // Bound names ordered by VarId.
  std::vector<std::string> names() const;
  std::vector<VarId> vars() const;

  friend bool operator==(const VarBinding& a, const VarBinding& b) {
    return a.by_name_ == b.by_name_;
  }

 private:
  std::map<std::string, VarId> by_name_;
  std::map<VarId, std::string> by_var_;
  std::uint32_t next_ = 0;
};

// Value of a set expression plus the obligations (disjointness of every
// `++` operand pair) it carries.
struct ExprTranslation {
  NodeHandle expr_bdd;
  NodeHandle side_bdd;
};

ExprTranslation tr_expr(const SetExpr& e, const VarBinding& binding,
                        Manager& m);

// Side constraints of an expression are conjoined at the comparison that
// uses it, so each disjunct of an `or` keeps its own obligations.
NodeHandle tr_cons(const SetConstraint& k, const VarBinding& binding,
                   Manager& m);

}  // namespace setbdd

#endif  // SETBDD_TRANSLATE_H_
