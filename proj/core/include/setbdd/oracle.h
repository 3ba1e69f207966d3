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

#ifndef SETBDD_ORACLE_H_
#define SETBDD_ORACLE_H_

// Brute-force ground truth over finite universes: concrete evaluation of set
// expressions and constraints, and the concretization of constraint BDDs
// through validation sets.
//
// For a valuation η the validation set of a BDD is computed bottom-up:
//   S(false) = ∅,  S(true) = U,
//   S(ite(v, t, e)) = (η(v)ᶜ ∪ S(t)) ∩ (η(v) ∪ S(e)),
// and η is in the concretization exactly when S(root) = U.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "setbdd/bdd.h"
#include "setbdd/set_lang.h"
#include "setbdd/translate.h"

namespace setbdd {

// Subset of a Universe; bit j stands for the universe's j-th atom.
struct AtomSet {
  std::uint64_t bits = 0;

  friend AtomSet operator|(AtomSet a, AtomSet b) { return {a.bits | b.bits}; }
  friend AtomSet operator&(AtomSet a, AtomSet b) { return {a.bits & b.bits}; }
  friend auto operator<=>(const AtomSet&, const AtomSet&) = default;

  bool empty() const { return bits == 0; }
  bool subset_of(AtomSet other) const { return (bits & ~other.bits) == 0; }
};

// Finite nonempty list of distinct atoms.
class Universe {
 public:
  static constexpr std::size_t kMaxAtoms = 63;

  explicit Universe(std::vector<int> atoms);
  // The atoms 1..n.
  static Universe Range(int n);

  std::size_t size() const { return atoms_.size(); }
  const std::vector<int>& atoms() const { return atoms_; }

  AtomSet full() const { return {(std::uint64_t{1} << atoms_.size()) - 1}; }
  AtomSet complement(AtomSet s) const { return {~s.bits & full().bits}; }
  // Throws UsageError for atoms outside the universe.
  AtomSet subset(std::initializer_list<int> atoms) const;
  std::vector<int> members(AtomSet s) const;
  // "{1,2}".
  std::string to_string(AtomSet s) const;

 private:
  std::vector<int> atoms_;
};

// Concrete state: a subset of the universe for every bound set variable.
class Valuation {
 public:
  Valuation() = default;
  Valuation(std::initializer_list<std::pair<const std::string, AtomSet>> sets)
      : sets_(sets) {}

  void set(const std::string& name, AtomSet value) { sets_[name] = value; }
  // Throws UnboundVariable.
  AtomSet at(const std::string& name) const;
  bool contains(const std::string& name) const { return sets_.contains(name); }
  std::size_t size() const { return sets_.size(); }

  // Same valuation with `names` removed.
  Valuation forget(const std::vector<std::string>& names) const;

  // "A={1},B={}" in name order.
  std::string to_string(const Universe& u) const;

  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend auto operator<=>(const Valuation&, const Valuation&) = default;

 private:
  std::map<std::string, AtomSet> sets_;
};

inline constexpr std::uint64_t kDefaultMaxValuations = std::uint64_t{1} << 20;

// `++` denotes plain union here; its disjointness is a constraint, checked by
// satisfies().
AtomSet eval_expr(const SetExpr& e, const Valuation& eta, const Universe& u);

// Every `++` below a comparison adds the conjunct that its operands are
// disjoint, at that comparison.
bool satisfies(const SetConstraint& k, const Valuation& eta,
               const Universe& u);

// Validation set of `b` under `eta`. Every support variable of `b` must be
// bound in `binding` and valued in `eta`.
AtomSet gamma_s_eval(const Manager& m, NodeHandle b, const VarBinding& binding,
                     const Valuation& eta, const Universe& u);

bool gamma_member(const Manager& m, NodeHandle b, const VarBinding& binding,
                  const Valuation& eta, const Universe& u);

// (2^|u|)^|binding|, or throws EnumerationCapExceeded past `max_valuations`.
std::uint64_t valuation_count(const VarBinding& binding, const Universe& u,
                              std::uint64_t max_valuations =
                                  kDefaultMaxValuations);

// All valuations over `binding`, ordered lexicographically by characteristic
// bit-vector (variables in VarId order, atoms in universe order, first bit
// most significant).
std::vector<Valuation> all_valuations(
    const VarBinding& binding, const Universe& u,
    std::uint64_t max_valuations = kDefaultMaxValuations);

std::vector<Valuation> enumerate_gamma(
    const Manager& m, NodeHandle b, const VarBinding& binding,
    const Universe& u, std::uint64_t max_valuations = kDefaultMaxValuations);

std::vector<Valuation> enumerate_solutions(
    const SetConstraint& k, const VarBinding& binding, const Universe& u,
    std::uint64_t max_valuations = kDefaultMaxValuations);

}  // namespace setbdd

#endif  // SETBDD_ORACLE_H_
