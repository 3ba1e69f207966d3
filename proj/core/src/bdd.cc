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

#include "setbdd/bdd.h"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "setbdd/error.h"

namespace setbdd {
namespace {

std::atomic<std::uint32_t> next_manager_tag{1};

}  // namespace

Assignment Assignment::from_bits(std::uint64_t bits, std::uint32_t var_count) {
  std::vector<bool> values(var_count);
  for (std::uint32_t i = 0; i < var_count; ++i) {
    values[i] = ((bits >> i) & 1u) != 0;
  }
  return Assignment(std::move(values));
}

std::size_t Manager::KeyHash::operator()(const Key& k) const {
  std::uint64_t h = k.tag;
  h = h * 0x9e3779b97f4a7c15ull + k.a;
  h = h * 0x9e3779b97f4a7c15ull + k.b;
  h = h * 0x9e3779b97f4a7c15ull + k.c;
  return static_cast<std::size_t>(h ^ (h >> 29));
}

Manager::Manager(std::uint32_t var_count)
    : tag_(next_manager_tag.fetch_add(1)), var_count_(var_count) {
  nodes_.push_back({kTerminalVar, NodeHandle::kFalseId, NodeHandle::kFalseId});
  nodes_.push_back({kTerminalVar, NodeHandle::kTrueId, NodeHandle::kTrueId});
}

NodeHandle Manager::constant(bool value) const {
  return wrap(value ? NodeHandle::kTrueId : NodeHandle::kFalseId);
}

void Manager::check(NodeHandle f) const {
  if (!owns(f)) {
    throw UsageError("node handle does not belong to this manager");
  }
}

void Manager::check(VarId v) const {
  if (v.index >= var_count_) {
    throw UsageError("variable " + std::to_string(v.index) +
                     " out of range for manager with " +
                     std::to_string(var_count_) + " variables");
  }
}

bool Manager::owns(NodeHandle f) const {
  return f.manager_tag_ == tag_ && f.id_ < nodes_.size();
}

Node Manager::node(NodeHandle f) const {
  check(f);
  if (f.is_terminal()) {
    throw UsageError("terminal has no decision node");
  }
  const StoredNode& n = nodes_[f.id_];
  return Node{VarId{n.var}, wrap(n.lo), wrap(n.hi)};
}

std::uint32_t Manager::make_node(std::uint32_t var, std::uint32_t lo,
                                 std::uint32_t hi) {
  if (lo == hi) return lo;
  const Key key{var, lo, hi, 0};
  auto [it, inserted] =
      unique_.try_emplace(key, static_cast<std::uint32_t>(nodes_.size()));
  if (inserted) nodes_.push_back({var, lo, hi});
  return it->second;
}

NodeHandle Manager::var(VarId v) {
  check(v);
  return wrap(make_node(v.index, NodeHandle::kFalseId, NodeHandle::kTrueId));
}

NodeHandle Manager::ite(NodeHandle f, NodeHandle g, NodeHandle h) {
  check(f);
  check(g);
  check(h);
  return wrap(ite_rec(f.id_, g.id_, h.id_));
}

std::uint32_t Manager::ite_rec(std::uint32_t f, std::uint32_t g,
                               std::uint32_t h) {
  constexpr std::uint32_t kF = NodeHandle::kFalseId;
  constexpr std::uint32_t kT = NodeHandle::kTrueId;
  if (f == kT) return g;
  if (f == kF) return h;
  if (g == h) return g;
  if (g == kT && h == kF) return f;

  const Key key{f, g, h, kIte};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  // Terminals carry kTerminalVar, which sorts after every real variable.
  const std::uint32_t top =
      std::min({top_var(f), top_var(g), top_var(h)});
  auto cofactor = [&](std::uint32_t n, bool value) {
    if (top_var(n) != top) return n;
    return value ? nodes_[n].hi : nodes_[n].lo;
  };
  const std::uint32_t hi =
      ite_rec(cofactor(f, true), cofactor(g, true), cofactor(h, true));
  const std::uint32_t lo =
      ite_rec(cofactor(f, false), cofactor(g, false), cofactor(h, false));
  const std::uint32_t result = make_node(top, lo, hi);
  cache_.emplace(key, result);
  return result;
}

NodeHandle Manager::and_(NodeHandle f, NodeHandle g) {
  return ite(f, g, bdd_false());
}

NodeHandle Manager::or_(NodeHandle f, NodeHandle g) {
  return ite(f, bdd_true(), g);
}

NodeHandle Manager::not_(NodeHandle f) {
  return ite(f, bdd_false(), bdd_true());
}

NodeHandle Manager::implies(NodeHandle f, NodeHandle g) {
  return ite(f, g, bdd_true());
}

NodeHandle Manager::iff(NodeHandle f, NodeHandle g) {
  return ite(f, g, not_(g));
}

NodeHandle Manager::restrict(NodeHandle f, VarId v, bool value) {
  check(f);
  check(v);
  return wrap(restrict_rec(f.id_, v.index, value));
}

std::uint32_t Manager::restrict_rec(std::uint32_t f, std::uint32_t var,
                                    bool value) {
  const std::uint32_t top = top_var(f);
  // Ordered: nothing below a node whose variable follows `var` can test it.
  if (top == kTerminalVar || top > var) return f;
  if (top == var) return value ? nodes_[f].hi : nodes_[f].lo;

  const Key key{f, var, value ? 1u : 0u, kRestrict};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const std::uint32_t lo = restrict_rec(nodes_[f].lo, var, value);
  const std::uint32_t hi = restrict_rec(nodes_[f].hi, var, value);
  const std::uint32_t result = make_node(top, lo, hi);
  cache_.emplace(key, result);
  return result;
}

NodeHandle Manager::exists(NodeHandle f, std::span<const VarId> vars) {
  check(f);
  NodeHandle result = f;
  for (VarId v : vars) {
    result = or_(restrict(result, v, true), restrict(result, v, false));
  }
  return result;
}

NodeHandle Manager::forall(NodeHandle f, std::span<const VarId> vars) {
  check(f);
  NodeHandle result = f;
  for (VarId v : vars) {
    result = and_(restrict(result, v, true), restrict(result, v, false));
  }
  return result;
}

bool Manager::evaluate(NodeHandle f, const Assignment& assignment) const {
  check(f);
  if (assignment.size() != var_count_) {
    throw UsageError("assignment covers " + std::to_string(assignment.size()) +
                     " of " + std::to_string(var_count_) + " variables");
  }
  std::uint32_t n = f.id_;
  while (n > NodeHandle::kTrueId) {
    const StoredNode& node = nodes_[n];
    n = assignment[VarId{node.var}] ? node.hi : node.lo;
  }
  return n == NodeHandle::kTrueId;
}

bool Manager::is_sat(NodeHandle f) const {
  check(f);
  return !f.is_false();
}

std::vector<std::uint32_t> Manager::reachable(std::uint32_t root) const {
  std::vector<std::uint32_t> seen;
  std::vector<std::uint32_t> stack{root};
  std::vector<bool> visited(nodes_.size(), false);
  while (!stack.empty()) {
    const std::uint32_t n = stack.back();
    stack.pop_back();
    if (n <= NodeHandle::kTrueId || visited[n]) continue;
    visited[n] = true;
    seen.push_back(n);
    stack.push_back(nodes_[n].lo);
    stack.push_back(nodes_[n].hi);
  }
  std::sort(seen.begin(), seen.end());
  return seen;
}

std::size_t Manager::node_count(NodeHandle f) const {
  check(f);
  return reachable(f.id_).size();
}

std::vector<VarId> Manager::support(NodeHandle f) const {
  check(f);
  std::vector<VarId> vars;
  for (std::uint32_t n : reachable(f.id_)) vars.push_back(VarId{nodes_[n].var});
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::string Manager::to_dot(NodeHandle f) const {
  check(f);
  const std::vector<std::uint32_t> nodes = reachable(f.id_);
  bool uses_false = f.is_false();
  bool uses_true = f.is_true();
  for (std::uint32_t n : nodes) {
    for (std::uint32_t child : {nodes_[n].lo, nodes_[n].hi}) {
      uses_false |= child == NodeHandle::kFalseId;
      uses_true |= child == NodeHandle::kTrueId;
    }
  }

  std::ostringstream out;
  out << "digraph bdd {\n";
  if (uses_false) out << "  n0 [label=\"F\", shape=box];\n";
  if (uses_true) out << "  n1 [label=\"T\", shape=box];\n";
  for (std::uint32_t n : nodes) {
    out << "  n" << n << " [label=\"v" << nodes_[n].var
        << "\", shape=circle];\n";
  }
  for (std::uint32_t n : nodes) {
    out << "  n" << n << " -> n" << nodes_[n].lo << " [style=solid];\n";
    out << "  n" << n << " -> n" << nodes_[n].hi << " [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace setbdd
