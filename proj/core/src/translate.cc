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

#include "setbdd/translate.h"

#include <algorithm>

#include "setbdd/error.h"

namespace setbdd {

VarBinding VarBinding::Of(std::span<const std::string> names) {
  VarBinding binding;
  for (const std::string& name : names) binding.declare(name);
  return binding;
}

VarBinding VarBinding::Of(std::initializer_list<std::string> names) {
  return Of(std::span<const std::string>(names.begin(), names.size()));
}

VarId VarBinding::declare(const std::string& name) {
  const VarId v{next_};
  bind(name, v);
  return v;
}

void VarBinding::bind(const std::string& name, VarId v) {
  if (name.empty()) throw UsageError("set variable name must be nonempty");
  if (is_keyword(name)) {
    throw UsageError("'" + name + "' is a keyword, not a set variable");
  }
  if (by_name_.contains(name)) {
    throw UsageError("set variable '" + name + "' declared twice");
  }
  if (by_var_.contains(v)) {
    throw UsageError("variable " + std::to_string(v.index) + " already bound");
  }
  by_name_.emplace(name, v);
  by_var_.emplace(v, name);
  next_ = std::max(next_, v.index + 1);
}

void VarBinding::remove(const std::string& name) {
  const VarId v = at(name);
  by_name_.erase(name);
  by_var_.erase(v);
}

std::optional<VarId> VarBinding::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

VarId VarBinding::at(const std::string& name) const {
  if (auto v = find(name)) return *v;
  throw UnboundVariable(name);
}

std::optional<std::string> VarBinding::name_of(VarId v) const {
  auto it = by_var_.find(v);
  if (it == by_var_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> VarBinding::names() const {
  std::vector<std::string> out;
  out.reserve(by_var_.size());
  for (const auto& [v, name] : by_var_) out.push_back(name);
  return out;
}

std::vector<VarId> VarBinding::vars() const {
  std::vector<VarId> out;
  out.reserve(by_var_.size());
  for (const auto& [v, name] : by_var_) out.push_back(v);
  return out;
}

ExprTranslation tr_expr(const SetExpr& e, const VarBinding& binding,
                        Manager& m) {
  using Kind = SetExpr::Kind;
  switch (e.kind()) {
    case Kind::kEmpty:
      return {m.bdd_false(), m.bdd_true()};
    case Kind::kUniverse:
      return {m.bdd_true(), m.bdd_true()};
    case Kind::kVar:
      return {m.var(binding.at(e.name())), m.bdd_true()};
    case Kind::kComplement: {
      const ExprTranslation t = tr_expr(e.lhs(), binding, m);
      return {m.not_(t.expr_bdd), t.side_bdd};
    }
    default:
      break;
  }

  const ExprTranslation l = tr_expr(e.lhs(), binding, m);
  const ExprTranslation r = tr_expr(e.rhs(), binding, m);
  const NodeHandle sides = m.and_(l.side_bdd, r.side_bdd);
  switch (e.kind()) {
    case Kind::kUnion:
      return {m.or_(l.expr_bdd, r.expr_bdd), sides};
    case Kind::kIntersect:
      return {m.and_(l.expr_bdd, r.expr_bdd), sides};
    case Kind::kDisjointUnion:
      return {m.or_(l.expr_bdd, r.expr_bdd),
              m.and_(sides, m.not_(m.and_(l.expr_bdd, r.expr_bdd)))};
    case Kind::kDifference:
      return {m.and_(l.expr_bdd, m.not_(r.expr_bdd)), sides};
    default:
      throw UsageError("malformed set expression");
  }
}

NodeHandle tr_cons(const SetConstraint& k, const VarBinding& binding,
                   Manager& m) {
  using Kind = SetConstraint::Kind;
  switch (k.kind()) {
    case Kind::kTrue:
      return m.bdd_true();
    case Kind::kFalse:
      return m.bdd_false();
    case Kind::kAnd: {
      const NodeHandle l = tr_cons(k.lhs(), binding, m);
      return m.and_(l, tr_cons(k.rhs(), binding, m));
    }
    case Kind::kOr: {
      const NodeHandle l = tr_cons(k.lhs(), binding, m);
      return m.or_(l, tr_cons(k.rhs(), binding, m));
    }
    case Kind::kSubset:
    case Kind::kEqual:
      break;
  }

  const ExprTranslation l = tr_expr(k.lhs_expr(), binding, m);
  const ExprTranslation r = tr_expr(k.rhs_expr(), binding, m);
  NodeHandle body = m.or_(m.not_(l.expr_bdd), r.expr_bdd);
  if (k.kind() == Kind::kEqual) {
    body = m.and_(body, m.or_(m.not_(r.expr_bdd), l.expr_bdd));
  }
  return m.and_(m.and_(body, l.side_bdd), r.side_bdd);
}

}  // namespace setbdd
