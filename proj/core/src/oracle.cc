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

#include "setbdd/oracle.h"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "setbdd/error.h"

namespace setbdd {

Universe::Universe(std::vector<int> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw UsageError("universe must be nonempty");
  if (atoms_.size() > kMaxAtoms) {
    throw UsageError("universe has more than " + std::to_string(kMaxAtoms) +
                     " atoms");
  }
  std::unordered_set<int> seen;
  for (int a : atoms_) {
    if (!seen.insert(a).second) {
      throw UsageError("duplicate atom " + std::to_string(a) + " in universe");
    }
  }
}

Universe Universe::Range(int n) {
  if (n < 1) throw UsageError("universe must be nonempty");
  std::vector<int> atoms;
  for (int i = 1; i <= n; ++i) atoms.push_back(i);
  return Universe(std::move(atoms));
}

AtomSet Universe::subset(std::initializer_list<int> atoms) const {
  AtomSet s;
  for (int a : atoms) {
    auto it = std::find(atoms_.begin(), atoms_.end(), a);
    if (it == atoms_.end()) {
      throw UsageError("atom " + std::to_string(a) + " not in universe");
    }
    s.bits |= std::uint64_t{1} << (it - atoms_.begin());
  }
  return s;
}

std::vector<int> Universe::members(AtomSet s) const {
  std::vector<int> out;
  for (std::size_t j = 0; j < atoms_.size(); ++j) {
    if ((s.bits >> j) & 1u) out.push_back(atoms_[j]);
  }
  return out;
}

std::string Universe::to_string(AtomSet s) const {
  std::string out = "{";
  bool first = true;
  for (int a : members(s)) {
    if (!first) out += ",";
    out += std::to_string(a);
    first = false;
  }
  return out + "}";
}

AtomSet Valuation::at(const std::string& name) const {
  auto it = sets_.find(name);
  if (it == sets_.end()) throw UnboundVariable(name);
  return it->second;
}

Valuation Valuation::forget(const std::vector<std::string>& names) const {
  Valuation out = *this;
  for (const std::string& name : names) out.sets_.erase(name);
  return out;
}

std::string Valuation::to_string(const Universe& u) const {
  std::string out;
  for (const auto& [name, set] : sets_) {
    if (!out.empty()) out += ",";
    out += name + "=" + u.to_string(set);
  }
  return out;
}

AtomSet eval_expr(const SetExpr& e, const Valuation& eta, const Universe& u) {
  using Kind = SetExpr::Kind;
  switch (e.kind()) {
    case Kind::kEmpty:
      return {};
    case Kind::kUniverse:
      return u.full();
    case Kind::kVar:
      return eta.at(e.name());
    case Kind::kComplement:
      return u.complement(eval_expr(e.lhs(), eta, u));
    case Kind::kUnion:
    case Kind::kDisjointUnion:
      return eval_expr(e.lhs(), eta, u) | eval_expr(e.rhs(), eta, u);
    case Kind::kIntersect:
      return eval_expr(e.lhs(), eta, u) & eval_expr(e.rhs(), eta, u);
    case Kind::kDifference:
      return eval_expr(e.lhs(), eta, u) &
             u.complement(eval_expr(e.rhs(), eta, u));
  }
  return {};
}

namespace {

// True when every `++` inside `e` joins disjoint sets.
bool disjointness_holds(const SetExpr& e, const Valuation& eta,
                        const Universe& u) {
  if (e.kind() == SetExpr::Kind::kComplement) {
    return disjointness_holds(e.lhs(), eta, u);
  }
  if (!e.is_binary()) return true;
  if (!disjointness_holds(e.lhs(), eta, u) ||
      !disjointness_holds(e.rhs(), eta, u)) {
    return false;
  }
  if (e.kind() == SetExpr::Kind::kDisjointUnion) {
    return (eval_expr(e.lhs(), eta, u) & eval_expr(e.rhs(), eta, u)).empty();
  }
  return true;
}

}  // namespace

bool satisfies(const SetConstraint& k, const Valuation& eta,
               const Universe& u) {
  using Kind = SetConstraint::Kind;
  switch (k.kind()) {
    case Kind::kTrue:
      return true;
    case Kind::kFalse:
      return false;
    case Kind::kAnd:
      return satisfies(k.lhs(), eta, u) && satisfies(k.rhs(), eta, u);
    case Kind::kOr:
      return satisfies(k.lhs(), eta, u) || satisfies(k.rhs(), eta, u);
    case Kind::kSubset:
    case Kind::kEqual:
      break;
  }
  if (!disjointness_holds(k.lhs_expr(), eta, u) ||
      !disjointness_holds(k.rhs_expr(), eta, u)) {
    return false;
  }
  const AtomSet l = eval_expr(k.lhs_expr(), eta, u);
  const AtomSet r = eval_expr(k.rhs_expr(), eta, u);
  return k.kind() == Kind::kSubset ? l.subset_of(r) : l == r;
}

namespace {

class ValidationSet {
 public:
  ValidationSet(const Manager& m, const VarBinding& binding,
                const Valuation& eta, const Universe& u)
      : m_(m), binding_(binding), eta_(eta), u_(u) {}

  AtomSet of(NodeHandle b) {
    if (b.is_false()) return {};
    if (b.is_true()) return u_.full();
    if (auto it = memo_.find(b); it != memo_.end()) return it->second;

    const Node node = m_.node(b);
    const auto name = binding_.name_of(node.var);
    if (!name) {
      throw UnboundVariable("v" + std::to_string(node.var.index));
    }
    const AtomSet value = eta_.at(*name);
    const AtomSet then_set = of(node.hi);
    const AtomSet else_set = of(node.lo);
    const AtomSet s =
        (u_.complement(value) | then_set) & (value | else_set);
    memo_.emplace(b, s);
    return s;
  }

 private:
  const Manager& m_;
  const VarBinding& binding_;
  const Valuation& eta_;
  const Universe& u_;
  std::unordered_map<NodeHandle, AtomSet> memo_;
};

}  // namespace

AtomSet gamma_s_eval(const Manager& m, NodeHandle b, const VarBinding& binding,
                     const Valuation& eta, const Universe& u) {
  if (!m.owns(b)) throw UsageError("node handle does not belong to manager");
  return ValidationSet(m, binding, eta, u).of(b);
}

bool gamma_member(const Manager& m, NodeHandle b, const VarBinding& binding,
                  const Valuation& eta, const Universe& u) {
  return gamma_s_eval(m, b, binding, eta, u) == u.full();
}

std::uint64_t valuation_count(const VarBinding& binding, const Universe& u,
                              std::uint64_t max_valuations) {
  const std::uint64_t bits = binding.size() * u.size();
  if (bits >= 63 || (std::uint64_t{1} << bits) > max_valuations) {
    throw EnumerationCapExceeded(
        "enumerating (2^" + std::to_string(u.size()) + ")^" +
        std::to_string(binding.size()) + " valuations exceeds the cap of " +
        std::to_string(max_valuations));
  }
  return std::uint64_t{1} << bits;
}

std::vector<Valuation> all_valuations(const VarBinding& binding,
                                      const Universe& u,
                                      std::uint64_t max_valuations) {
  const std::uint64_t count = valuation_count(binding, u, max_valuations);
  const std::vector<std::string> names = binding.names();
  const std::size_t width = u.size();
  const std::size_t total = names.size() * width;
  const std::uint64_t mask = u.full().bits;

  std::vector<Valuation> out;
  out.reserve(count);
  for (std::uint64_t c = 0; c < count; ++c) {
    Valuation eta;
    for (std::size_t p = 0; p < names.size(); ++p) {
      // Variable p owns bit-vector positions [p*width, (p+1)*width) counted
      // from the most significant end; atom j sits at position p*width + j.
      const std::uint64_t chunk = (c >> (total - (p + 1) * width)) & mask;
      AtomSet s;
      for (std::size_t j = 0; j < width; ++j) {
        if ((chunk >> (width - 1 - j)) & 1u) s.bits |= std::uint64_t{1} << j;
      }
      eta.set(names[p], s);
    }
    out.push_back(std::move(eta));
  }
  return out;
}

std::vector<Valuation> enumerate_gamma(const Manager& m, NodeHandle b,
                                       const VarBinding& binding,
                                       const Universe& u,
                                       std::uint64_t max_valuations) {
  std::vector<Valuation> out;
  for (Valuation& eta : all_valuations(binding, u, max_valuations)) {
    if (gamma_member(m, b, binding, eta, u)) out.push_back(std::move(eta));
  }
  return out;
}

std::vector<Valuation> enumerate_solutions(const SetConstraint& k,
                                           const VarBinding& binding,
                                           const Universe& u,
                                           std::uint64_t max_valuations) {
  std::vector<Valuation> out;
  for (Valuation& eta : all_valuations(binding, u, max_valuations)) {
    if (satisfies(k, eta, u)) out.push_back(std::move(eta));
  }
  return out;
}

}  // namespace setbdd
