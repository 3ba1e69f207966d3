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

#ifndef SETBDD_BDD_H_
#define SETBDD_BDD_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace setbdd {

// A decision variable. The numeric order of indices is the variable order:
// smaller indices are tested closer to the root.
struct VarId {
  std::uint32_t index = 0;

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

class Manager;

// Reference to a hash-consed node of one Manager. Because every node is
// canonical, two handles of the same manager compare equal exactly when they
// denote the same Boolean function.
class NodeHandle {
 public:
  static constexpr std::uint32_t kFalseId = 0;
  static constexpr std::uint32_t kTrueId = 1;

  NodeHandle() = default;

  std::uint32_t id() const { return id_; }
  bool is_terminal() const { return id_ <= kTrueId; }
  bool is_true() const { return id_ == kTrueId; }
  bool is_false() const { return id_ == kFalseId; }

  friend bool operator==(const NodeHandle&, const NodeHandle&) = default;

 private:
  friend class Manager;
  NodeHandle(std::uint32_t manager_tag, std::uint32_t id)
      : manager_tag_(manager_tag), id_(id) {}

  std::uint32_t manager_tag_ = 0;
  std::uint32_t id_ = kFalseId;
};

// Decision node ite(var, hi, lo): `lo` is the else branch (var = 0), `hi` the
// then branch (var = 1).
struct Node {
  VarId var;
  NodeHandle lo;
  NodeHandle hi;
};

// Total Boolean assignment over a manager's variables.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<bool> values) : values_(std::move(values)) {}

  // Bit i of `bits` is the value of variable i.
  static Assignment from_bits(std::uint64_t bits, std::uint32_t var_count);

  std::size_t size() const { return values_.size(); }
  bool operator[](VarId v) const { return values_.at(v.index); }
  void set(VarId v, bool value) { values_.at(v.index) = value; }

 private:
  std::vector<bool> values_;
};

// Owns the variable order, the unique table and the operation cache of a
// family of reduced ordered BDDs. Nodes are plain (no complement edges) and
// never freed, so handles stay valid for the manager's lifetime.
//
// Construction operations mutate the manager and must be serialized by the
// caller. Const queries on a quiescent manager may run concurrently.
class Manager {
 public:
  explicit Manager(std::uint32_t var_count);

  Manager(const Manager&) = delete;
  Manager& operator=(const Manager&) = delete;
  Manager(Manager&&) = default;
  Manager& operator=(Manager&&) = default;

  std::uint32_t var_count() const { return var_count_; }

  NodeHandle constant(bool value) const;
  NodeHandle bdd_true() const { return constant(true); }
  NodeHandle bdd_false() const { return constant(false); }

  // The projection function of `v`, i.e. ite(v, true, false).
  NodeHandle var(VarId v);

  // (f & g) | (~f & h).
  NodeHandle ite(NodeHandle f, NodeHandle g, NodeHandle h);

  NodeHandle and_(NodeHandle f, NodeHandle g);
  NodeHandle or_(NodeHandle f, NodeHandle g);
  NodeHandle not_(NodeHandle f);
  NodeHandle implies(NodeHandle f, NodeHandle g);
  NodeHandle iff(NodeHandle f, NodeHandle g);

  // Cofactor of `f` with `v` fixed to `value`.
  NodeHandle restrict(NodeHandle f, VarId v, bool value);
  NodeHandle exists(NodeHandle f, std::span<const VarId> vars);
  NodeHandle forall(NodeHandle f, std::span<const VarId> vars);

  bool evaluate(NodeHandle f, const Assignment& assignment) const;

  // Constant time: the only unsatisfiable ROBDD is the false terminal.
  bool is_sat(NodeHandle f) const;

  // Decision nodes reachable from `f`; terminals are not counted.
  std::size_t node_count(NodeHandle f) const;
  // Variables tested anywhere below `f`, ascending.
  std::vector<VarId> support(NodeHandle f) const;

  // Graphviz rendering. Node names derive from handle ids, so identical
  // construction sequences give byte-identical output.
  std::string to_dot(NodeHandle f) const;

  // Requires a decision node.
  Node node(NodeHandle f) const;
  bool owns(NodeHandle f) const;

  // Decision nodes ever created.
  std::size_t unique_size() const { return nodes_.size() - 2; }
  std::size_t cache_size() const { return cache_.size(); }
  void clear_cache() { cache_.clear(); }

 private:
  struct StoredNode {
    std::uint32_t var;
    std::uint32_t lo;
    std::uint32_t hi;
  };

  struct Key {
    std::uint32_t a;
    std::uint32_t b;
    std::uint32_t c;
    std::uint32_t tag;

    friend bool operator==(const Key&, const Key&) = default;
  };

  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };

  enum OpTag : std::uint32_t { kIte = 1, kRestrict = 2 };

  static constexpr std::uint32_t kTerminalVar = UINT32_MAX;

  NodeHandle wrap(std::uint32_t id) const { return NodeHandle(tag_, id); }
  void check(NodeHandle f) const;
  void check(VarId v) const;

  std::uint32_t top_var(std::uint32_t id) const { return nodes_[id].var; }
  std::uint32_t make_node(std::uint32_t var, std::uint32_t lo,
                          std::uint32_t hi);
  std::uint32_t ite_rec(std::uint32_t f, std::uint32_t g, std::uint32_t h);
  std::uint32_t restrict_rec(std::uint32_t f, std::uint32_t var, bool value);

  // Decision nodes reachable from `root`, ascending by id.
  std::vector<std::uint32_t> reachable(std::uint32_t root) const;

  std::uint32_t tag_;
  std::uint32_t var_count_;
  std::vector<StoredNode> nodes_;
  std::unordered_map<Key, std::uint32_t, KeyHash> unique_;
  std::unordered_map<Key, std::uint32_t, KeyHash> cache_;
};

}  // namespace setbdd

template <>
struct std::hash<setbdd::NodeHandle> {
  std::size_t operator()(const setbdd::NodeHandle& h) const noexcept {
    return std::hash<std::uint32_t>()(h.id());
  }
};

#endif  // SETBDD_BDD_H_
