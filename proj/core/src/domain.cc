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

#include "setbdd/domain.h"

#include "setbdd/error.h"

namespace setbdd {

void SetDomain::require_same_binding(const AbstractState& a,
                                     const AbstractState& b) {
  if (!(a.binding == b.binding)) throw BindingMismatch();
}

AbstractState SetDomain::top(VarBinding binding) const {
  return {std::move(binding), manager_->bdd_true()};
}

AbstractState SetDomain::bottom(VarBinding binding) const {
  return {std::move(binding), manager_->bdd_false()};
}

AbstractState SetDomain::assume(const AbstractState& s,
                                const SetConstraint& k) const {
  const NodeHandle constraint = tr_cons(k, s.binding, *manager_);
  return {s.binding, manager_->and_(s.bdd, constraint)};
}

AbstractState SetDomain::join(const AbstractState& a,
                              const AbstractState& b) const {
  require_same_binding(a, b);
  return {a.binding, manager_->or_(a.bdd, b.bdd)};
}

AbstractState SetDomain::widen(const AbstractState& previous,
                               const AbstractState& next) const {
  return join(previous, next);
}

bool SetDomain::leq(const AbstractState& a, const AbstractState& b) const {
  require_same_binding(a, b);
  return !manager_->is_sat(manager_->and_(a.bdd, manager_->not_(b.bdd)));
}

bool SetDomain::leq_by_forall(const AbstractState& a,
                              const AbstractState& b) const {
  require_same_binding(a, b);
  const std::vector<VarId> vars = a.binding.vars();
  const NodeHandle implication = manager_->or_(manager_->not_(a.bdd), b.bdd);
  return manager_->forall(implication, vars).is_true();
}

AbstractState SetDomain::project(const AbstractState& s,
                                 std::span<const std::string> names) const {
  AbstractState result = s;
  std::vector<VarId> vars;
  vars.reserve(names.size());
  for (const std::string& name : names) {
    vars.push_back(result.binding.at(name));
    result.binding.remove(name);
  }
  result.bdd = manager_->exists(s.bdd, vars);
  return result;
}

StateStats SetDomain::stats(const AbstractState& s) const {
  StateStats out;
  out.node_count = manager_->node_count(s.bdd);
  for (VarId v : manager_->support(s.bdd)) {
    auto name = s.binding.name_of(v);
    out.support.push_back(name ? *name : "v" + std::to_string(v.index));
  }
  return out;
}

}  // namespace setbdd
