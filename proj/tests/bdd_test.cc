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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "setbdd/error.h"
#include "test_util.h"

namespace setbdd {
namespace {

using testing::Formula;
using testing::bdd_table;
using testing::derive;
using testing::random_formula;
using testing::structure_violation;

// v1 ∧ ¬v3 ∨ ¬v2 ∧ ¬v3 over a manager whose variables 1, 2, 3 play v1, v2,
// v3 (variable 0 is unused so labels match).
NodeHandle build_example(Manager& m) {
  const NodeHandle v1 = m.var(VarId{1});
  const NodeHandle v2 = m.var(VarId{2});
  const NodeHandle v3 = m.var(VarId{3});
  return m.or_(m.and_(v1, m.not_(v3)), m.and_(m.not_(v2), m.not_(v3)));
}

TEST(ManagerTest, ZeroVariablesOnlyTerminals) {
  Manager m(0);
  EXPECT_EQ(m.var_count(), 0u);
  EXPECT_TRUE(m.bdd_true().is_true());
  EXPECT_TRUE(m.bdd_false().is_false());
  EXPECT_THROW(m.var(VarId{0}), UsageError);
  EXPECT_TRUE(m.evaluate(m.bdd_true(), Assignment{}));
  EXPECT_EQ(m.unique_size(), 0u);
}

TEST(ManagerTest, ThreeVariablesRepresentAll256Functions) {
  Manager m(3);
  // Build each function as a disjunction of its minterms; distinct truth
  // tables must yield distinct handles.
  std::vector<NodeHandle> handles;
  for (unsigned table = 0; table < 256; ++table) {
    NodeHandle f = m.bdd_false();
    for (unsigned bits = 0; bits < 8; ++bits) {
      if (!((table >> bits) & 1u)) continue;
      NodeHandle minterm = m.bdd_true();
      for (std::uint32_t v = 0; v < 3; ++v) {
        const NodeHandle lit = m.var(VarId{v});
        minterm = m.and_(minterm, ((bits >> v) & 1u) ? lit : m.not_(lit));
      }
      f = m.or_(f, minterm);
    }
    for (unsigned bits = 0; bits < 8; ++bits) {
      ASSERT_EQ(m.evaluate(f, Assignment::from_bits(bits, 3)),
                ((table >> bits) & 1u) != 0);
    }
    handles.push_back(f);
  }
  std::sort(handles.begin(), handles.end(),
            [](NodeHandle a, NodeHandle b) { return a.id() < b.id(); });
  EXPECT_EQ(std::adjacent_find(handles.begin(), handles.end()), handles.end());
}

TEST(ManagerTest, VariablesAreDistinctAndHashConsed) {
  Manager m(3);
  const NodeHandle a = m.var(VarId{0});
  EXPECT_NE(a, m.var(VarId{1}));
  EXPECT_NE(m.var(VarId{1}), m.var(VarId{2}));
  EXPECT_EQ(a, m.var(VarId{0}));
  const Node n = m.node(a);
  EXPECT_EQ(n.var, VarId{0});
  EXPECT_TRUE(n.lo.is_false());
  EXPECT_TRUE(n.hi.is_true());
}

TEST(ManagerTest, ConstantsUseReservedHandles) {
  Manager m(2);
  EXPECT_EQ(m.constant(true).id(), 1u);
  EXPECT_EQ(m.constant(false).id(), 0u);
  EXPECT_EQ(m.constant(true), m.constant(true));
}

TEST(ManagerTest, NegatedVariableNode) {
  Manager m(1);
  const NodeHandle v = m.var(VarId{0});
  const NodeHandle nv = m.not_(v);
  EXPECT_NE(v, nv);
  const Node n = m.node(nv);
  EXPECT_EQ(n.var, VarId{0});
  EXPECT_TRUE(n.lo.is_true());
  EXPECT_TRUE(n.hi.is_false());
}

TEST(ManagerTest, IteTerminalCases) {
  Manager m(3);
  const NodeHandle f = m.var(VarId{0});
  const NodeHandle g = m.and_(m.var(VarId{1}), m.var(VarId{2}));
  const NodeHandle h = m.var(VarId{2});
  EXPECT_EQ(m.ite(m.bdd_true(), g, h), g);
  EXPECT_EQ(m.ite(m.bdd_false(), g, h), h);
  EXPECT_EQ(m.ite(f, g, g), g);
  EXPECT_EQ(m.ite(f, m.bdd_false(), m.bdd_true()), m.not_(f));
}

TEST(ManagerTest, RejectsForeignHandles) {
  Manager a(2);
  Manager b(2);
  const NodeHandle x = a.var(VarId{0});
  EXPECT_FALSE(b.owns(x));
  EXPECT_THROW(b.not_(x), UsageError);
  EXPECT_THROW(b.ite(x, b.bdd_true(), b.bdd_false()), UsageError);
  EXPECT_THROW(b.and_(b.var(VarId{0}), x), UsageError);
  EXPECT_THROW(a.and_(x, b.bdd_true()), UsageError);
  EXPECT_THROW(a.not_(NodeHandle()), UsageError);
}

TEST(ManagerTest, RejectsOutOfRangeAndPartialInput) {
  Manager m(2);
  EXPECT_THROW(m.var(VarId{2}), UsageError);
  EXPECT_THROW(m.restrict(m.bdd_true(), VarId{5}, true), UsageError);
  EXPECT_THROW(m.evaluate(m.var(VarId{0}), Assignment::from_bits(0, 1)),
               UsageError);
  EXPECT_THROW(m.node(m.bdd_true()), UsageError);
}

TEST(ConnectiveTest, ComplementsLaw) {
  Manager m(1);
  const NodeHandle v = m.var(VarId{0});
  EXPECT_TRUE(m.or_(v, m.not_(v)).is_true());
  EXPECT_TRUE(m.and_(v, m.not_(v)).is_false());
}

TEST(ConnectiveTest, DerivedConnectivesMatchTruthTables) {
  Manager m(2);
  const NodeHandle a = m.var(VarId{0});
  const NodeHandle b = m.var(VarId{1});
  for (unsigned bits = 0; bits < 4; ++bits) {
    const Assignment asg = Assignment::from_bits(bits, 2);
    const bool x = bits & 1u;
    const bool y = bits & 2u;
    EXPECT_EQ(m.evaluate(m.and_(a, b), asg), x && y);
    EXPECT_EQ(m.evaluate(m.or_(a, b), asg), x || y);
    EXPECT_EQ(m.evaluate(m.implies(a, b), asg), !x || y);
    EXPECT_EQ(m.evaluate(m.iff(a, b), asg), x == y);
    EXPECT_EQ(m.evaluate(m.not_(a), asg), !x);
  }
}

TEST(ConnectiveTest, AndWithTrueIsIdentityOnRandomFunctions) {
  std::mt19937 rng(11);
  Manager m(5);
  for (int i = 0; i < 200; ++i) {
    const NodeHandle f = random_formula(rng, 5, 5).build(m);
    EXPECT_EQ(m.and_(f, m.bdd_true()), f);
  }
}

TEST(ExampleTest, StructureMatchesDrawing) {
  Manager m(4);
  const NodeHandle f = build_example(m);
  EXPECT_EQ(m.node_count(f), 3u);
  EXPECT_EQ(m.support(f),
            (std::vector<VarId>{VarId{1}, VarId{2}, VarId{3}}));

  const Node root = m.node(f);
  EXPECT_EQ(root.var, VarId{1});
  const Node then_node = m.node(root.hi);
  EXPECT_EQ(then_node.var, VarId{3});
  EXPECT_TRUE(then_node.lo.is_true());
  EXPECT_TRUE(then_node.hi.is_false());
  const Node else_node = m.node(root.lo);
  EXPECT_EQ(else_node.var, VarId{2});
  EXPECT_TRUE(else_node.hi.is_false());
  // The v3 test is shared between v1's then-edge and v2's else-edge.
  EXPECT_EQ(else_node.lo, root.hi);
}

TEST(ExampleTest, Evaluate) {
  Manager m(4);
  const NodeHandle f = build_example(m);
  auto at = [](bool v1, bool v2, bool v3) {
    return Assignment(std::vector<bool>{false, v1, v2, v3});
  };
  EXPECT_TRUE(m.evaluate(f, at(true, false, false)));
  EXPECT_FALSE(m.evaluate(f, at(false, true, false)));
  EXPECT_TRUE(m.evaluate(m.bdd_true(), at(false, true, true)));
}

TEST(ExampleTest, RestrictAgainstBruteForce) {
  Manager m(4);
  const NodeHandle f = build_example(m);
  const NodeHandle r = m.restrict(f, VarId{3}, false);

  // Brute force over (v1, v2) with v3 = 0.
  for (unsigned bits = 0; bits < 4; ++bits) {
    const bool v1 = bits & 1u;
    const bool v2 = bits & 2u;
    const bool v3 = false;
    const bool expected = (v1 && !v3) || (!v2 && !v3);
    EXPECT_EQ(m.evaluate(r, Assignment(std::vector<bool>{false, v1, v2, v3})),
              expected);
  }
  // Frozen from the enumeration above: f|v3=0 = v1 ∨ ¬v2, not a constant.
  EXPECT_EQ(r, m.or_(m.var(VarId{1}), m.not_(m.var(VarId{2}))));
  EXPECT_TRUE(m.restrict(f, VarId{3}, true).is_false());
}

TEST(ExampleTest, DotGolden) {
  Manager m(4);
  const NodeHandle f = build_example(m);
  const std::string dot = m.to_dot(f);
  // Node names are handle ids, assigned in construction order. Solid edges
  // are else branches, dashed are then branches.
  const char* const kGolden = R"(digraph bdd {
  n0 [label="F", shape=box];
  n1 [label="T", shape=box];
  n5 [label="v3", shape=circle];
  n7 [label="v2", shape=circle];
  n9 [label="v1", shape=circle];
  n5 -> n1 [style=solid];
  n5 -> n0 [style=dashed];
  n7 -> n5 [style=solid];
  n7 -> n0 [style=dashed];
  n9 -> n7 [style=solid];
  n9 -> n5 [style=dashed];
}
)";
  EXPECT_EQ(dot, kGolden);

  Manager again(4);
  EXPECT_EQ(again.to_dot(build_example(again)), dot);
}

TEST(DotTest, Terminals) {
  Manager m(1);
  EXPECT_EQ(m.to_dot(m.bdd_true()),
            "digraph bdd {\n  n1 [label=\"T\", shape=box];\n}\n");
  EXPECT_EQ(m.to_dot(m.bdd_false()),
            "digraph bdd {\n  n0 [label=\"F\", shape=box];\n}\n");
  EXPECT_EQ(m.node_count(m.bdd_true()), 0u);
  EXPECT_TRUE(m.support(m.bdd_false()).empty());
}

TEST(RestrictTest, Basics) {
  Manager m(3);
  const NodeHandle v0 = m.var(VarId{0});
  EXPECT_TRUE(m.restrict(v0, VarId{0}, true).is_true());
  EXPECT_TRUE(m.restrict(v0, VarId{0}, false).is_false());
  const NodeHandle g = m.and_(m.var(VarId{1}), m.var(VarId{2}));
  EXPECT_EQ(m.restrict(g, VarId{0}, true), g);
}

TEST(RestrictTest, SupportExcludesVariable) {
  std::mt19937 rng(5);
  Manager m(5);
  for (int i = 0; i < 100; ++i) {
    const NodeHandle f = random_formula(rng, 5, 6).build(m);
    for (std::uint32_t v = 0; v < 5; ++v) {
      for (bool b : {false, true}) {
        const auto sup = m.support(m.restrict(f, VarId{v}, b));
        EXPECT_EQ(std::find(sup.begin(), sup.end(), VarId{v}), sup.end());
      }
    }
  }
}

TEST(QuantifierTest, Examples) {
  Manager m(2);
  const NodeHandle a = m.var(VarId{0});
  const NodeHandle b = m.var(VarId{1});
  const std::vector<VarId> v0{VarId{0}};
  const std::vector<VarId> v1{VarId{1}};
  EXPECT_TRUE(m.exists(a, v0).is_true());
  EXPECT_TRUE(m.exists(m.bdd_false(), v1).is_false());
  EXPECT_EQ(m.exists(m.and_(a, b), v1), a);
  EXPECT_TRUE(m.forall(a, v0).is_false());
  EXPECT_TRUE(m.forall(m.bdd_true(), v1).is_true());
  EXPECT_EQ(m.forall(m.or_(a, b), v1), a);
  EXPECT_EQ(m.exists(m.and_(a, b), {}), m.and_(a, b));
}

TEST(QuantifierTest, MatchesBruteForceProjection) {
  std::mt19937 rng(17);
  constexpr std::uint32_t n = 4;
  Manager m(n);
  for (int i = 0; i < 200; ++i) {
    const Formula phi = random_formula(rng, n, 6);
    const NodeHandle f = phi.build(m);
    const std::uint32_t q =
        std::uniform_int_distribution<std::uint32_t>(0, n - 1)(rng);
    const std::vector<VarId> vars{VarId{q}};
    const NodeHandle ex = m.exists(f, vars);
    const NodeHandle all = m.forall(f, vars);
    for (std::uint64_t bits = 0; bits < (1u << n); ++bits) {
      const bool lo = phi.eval(bits & ~(std::uint64_t{1} << q));
      const bool hi = phi.eval(bits | (std::uint64_t{1} << q));
      const Assignment asg = Assignment::from_bits(bits, n);
      ASSERT_EQ(m.evaluate(ex, asg), lo || hi);
      ASSERT_EQ(m.evaluate(all, asg), lo && hi);
    }
  }
}

TEST(SatTest, Examples) {
  Manager m(1);
  const NodeHandle v = m.var(VarId{0});
  EXPECT_FALSE(m.is_sat(m.bdd_false()));
  EXPECT_TRUE(m.is_sat(v));
  EXPECT_FALSE(m.is_sat(m.and_(v, m.not_(v))));
}

// Canonicity: handle equality coincides with truth-table equality.
TEST(PropertyTest, Canonicity) {
  std::mt19937 rng(2024);
  for (std::uint32_t n = 1; n <= 6; ++n) {
    Manager m(n);
    std::vector<std::pair<NodeHandle, std::vector<bool>>> built;
    for (int i = 0; i < 150; ++i) {
      const Formula phi = random_formula(rng, n, 5);
      const NodeHandle f = phi.build(m);
      const std::vector<bool> table = phi.table(n);
      ASSERT_EQ(bdd_table(m, f), table);
      for (const auto& [g, other] : built) {
        ASSERT_EQ(f == g, table == other);
      }
      built.emplace_back(f, table);
    }
  }
}

TEST(PropertyTest, StructuralInvariants) {
  std::mt19937 rng(99);
  Manager m(6);
  for (int i = 0; i < 300; ++i) {
    const NodeHandle f = random_formula(rng, 6, 7).build(m);
    ASSERT_EQ(structure_violation(m, f), "");
    const std::vector<VarId> vars{VarId{2}, VarId{4}};
    ASSERT_EQ(structure_violation(m, m.exists(f, vars)), "");
    ASSERT_EQ(structure_violation(m, m.forall(f, vars)), "");
  }
}

TEST(PropertyTest, IteEvaluatesPointwise) {
  std::mt19937 rng(3);
  constexpr std::uint32_t n = 5;
  Manager m(n);
  for (int i = 0; i < 200; ++i) {
    const NodeHandle f = random_formula(rng, n, 4).build(m);
    const NodeHandle g = random_formula(rng, n, 4).build(m);
    const NodeHandle h = random_formula(rng, n, 4).build(m);
    const NodeHandle r = m.ite(f, g, h);
    const Assignment a = Assignment::from_bits(
        std::uniform_int_distribution<std::uint64_t>(0, (1u << n) - 1)(rng), n);
    EXPECT_EQ(m.evaluate(r, a), m.evaluate(f, a) ? m.evaluate(g, a)
                                                 : m.evaluate(h, a));
  }
}

TEST(PropertyTest, QuantifierDuality) {
  std::mt19937 rng(8);
  Manager m(5);
  for (int i = 0; i < 200; ++i) {
    const NodeHandle f = random_formula(rng, 5, 6).build(m);
    std::vector<VarId> vars;
    for (std::uint32_t v = 0; v < 5; ++v) {
      if (rng() % 2) vars.push_back(VarId{v});
    }
    EXPECT_EQ(m.forall(f, vars), m.not_(m.exists(m.not_(f), vars)));
  }
}

TEST(PropertyTest, EvaluateFollowsRules) {
  std::mt19937 rng(21);
  Manager m(6);
  for (int i = 0; i < 50; ++i) {
    const NodeHandle f = random_formula(rng, 6, 6).build(m);
    for (std::uint64_t bits = 0; bits < 64; ++bits) {
      const Assignment a = Assignment::from_bits(bits, 6);
      ASSERT_EQ(m.evaluate(f, a), derive(m, f, a));
    }
  }
}

TEST(PropertyTest, CacheIsTransparent) {
  std::mt19937 rng(44);
  std::vector<Formula> formulas;
  for (int i = 0; i < 100; ++i) formulas.push_back(random_formula(rng, 5, 6));

  Manager m(5);
  std::vector<NodeHandle> first;
  for (const Formula& phi : formulas) first.push_back(phi.build(m));
  EXPECT_GT(m.cache_size(), 0u);
  const std::size_t nodes = m.unique_size();

  m.clear_cache();
  EXPECT_EQ(m.cache_size(), 0u);
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    EXPECT_EQ(formulas[i].build(m), first[i]);
  }
  EXPECT_EQ(m.unique_size(), nodes);
}

}  // namespace
}  // namespace setbdd
