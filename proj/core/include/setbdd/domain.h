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

#ifndef SETBDD_DOMAIN_H_
#define SETBDD_DOMAIN_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "setbdd/bdd.h"
#include "setbdd/set_lang.h"
#include "setbdd/translate.h"

namespace setbdd {

// An element of the set domain: one constraint BDD over the variables of
// `binding`. The false terminal is the only bottom.
struct AbstractState {
  VarBinding binding;
  NodeHandle bdd;
};

struct StateStats {
  std::size_t node_count = 0;
  std::vector<std::string> support;
};

// Lattice operations over states that share one manager.
//
// The lattice is finite for a fixed binding (it is the free Boolean algebra
// on the bound variables), so join doubles as widening.
class SetDomain {
 public:
  explicit SetDomain(Manager& manager) : manager_(&manager) {}

  Manager& manager() const { return *manager_; }

  AbstractState top(VarBinding binding) const;
  AbstractState bottom(VarBinding binding) const;

  // Meet with the translation of `k`.
  AbstractState assume(const AbstractState& s, const SetConstraint& k) const;

  AbstractState join(const AbstractState& a, const AbstractState& b) const;
  AbstractState widen(const AbstractState& previous,
                      const AbstractState& next) const;

  // a ⊑ b, decided as unsatisfiability of a ∧ ¬b.
  bool leq(const AbstractState& a, const AbstractState& b) const;
  // Same order decided by universally quantifying ¬a ∨ b over every bound
  // variable. Kept as an independent route for cross-checking leq().
  bool leq_by_forall(const AbstractState& a, const AbstractState& b) const;

  // Existentially quantifies `names` away and drops them from the binding.
  // The remaining names keep their VarIds.
  AbstractState project(const AbstractState& s,
                        std::span<const std::string> names) const;

  bool is_bottom(const AbstractState& s) const { return s.bdd.is_false(); }
  bool is_top(const AbstractState& s) const { return s.bdd.is_true(); }
  StateStats stats(const AbstractState& s) const;

 private:
  static void require_same_binding(const AbstractState& a,
                                   const AbstractState& b);

  Manager* manager_;
};

}  // namespace setbdd

#endif  // SETBDD_DOMAIN_H_
