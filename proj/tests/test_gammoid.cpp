// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <optional>
#include <random>

#include "heavyarc/gammoid.hpp"
#include "support/brute_force.hpp"
#include "support/worked_example.hpp"
#include "support/printers.hpp"
#include "support/random_instances.hpp"

namespace heavyarc {
namespace {

using testing::worked_example;

TEST(IsIndependent, EmptySet) {
  auto ex = worked_example();
  EXPECT_TRUE(is_independent(ex.gammoid, {}));
}

TEST(IsIndependent, WorkedExample) {
  auto ex = worked_example();
  EXPECT_TRUE(is_independent(ex.gammoid, ex.set({"f", "g"})));
  EXPECT_FALSE(is_independent(ex.gammoid, ex.set({"d", "e", "f", "i"})));
}

TEST(IsIndependent, RejectsSubsetsOutsideGround) {
  auto ex = worked_example();
  EXPECT_THROW(is_independent(ex.gammoid, ex.set({"a"})), InputError);
}

TEST(Rank, EmptySetHasRankZero) {
  auto ex = worked_example();
  EXPECT_EQ(rank(ex.gammoid, {}), 0u);
}

TEST(Rank, CircuitHasRankOneLess) {
  auto ex = worked_example();
  EXPECT_EQ(rank(ex.gammoid, ex.set({"f", "g", "i"})), 2u);
}

TEST(Rank, MatchesBruteForceAndIsAMatroidRank) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 60; ++round) {
    auto inst = round % 2 ? testing::random_cyclic_instance(rng, 6, 10)
                          : testing::random_acyclic_instance(rng, 6, 10);
    const auto& g = inst.gammoid;
    const auto& e = g.ground;
    auto table = testing::brute_rank_table(g.digraph, e, g.targets);
    const std::uint32_t full = (1u << e.size()) - 1;
    EXPECT_EQ(rank(g, e), table[full]);
    for (std::uint32_t m = 0; m <= full; ++m) {
      ASSERT_EQ(rank(g, testing::subset_of(e, m)), table[m]);
      for (std::size_t i = 0; i < e.size(); ++i) {
        std::uint32_t bigger = m | (1u << i);
        EXPECT_LE(table[m], table[bigger]);
        EXPECT_LE(table[bigger], table[m] + 1);
      }
      for (std::uint32_t k = 0; k <= full; ++k)
        EXPECT_LE(table[m | k] + table[m & k], table[m] + table[k]);
    }
  }
}

TEST(Circuits, FreeMatroidHasNone) {
  Digraph d({"a", "b", "c"});
  RepresentedGammoid g(d, {0, 1, 2}, {0, 1, 2});
  EXPECT_TRUE(circuits(g).members.empty());
}

TEST(Circuits, LoopsAreSingletonCircuits) {
  Digraph d({"a", "b"});
  RepresentedGammoid g(d, {1}, {0, 1});
  EXPECT_EQ(circuits(g).members, (std::vector<VertexSet>{{0}}));
}

TEST(Circuits, WorkedExampleContainsListedCircuits) {
  auto ex = worked_example();
  auto family = circuits(ex.gammoid);
  EXPECT_TRUE(family.contains(ex.set({"f", "g", "i"})));
  EXPECT_TRUE(family.contains(ex.set({"d", "e", "f", "i"})));
  EXPECT_TRUE(family.contains(ex.set({"d", "e", "g", "i"})));
}

TEST(Circuits, MatchBruteForceAndAreMinimalDependentSets) {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 80; ++round) {
    auto inst = round % 2 ? testing::random_cyclic_instance(rng, 6, 10)
                          : testing::random_acyclic_instance(rng, 7, 12);
    const auto& g = inst.gammoid;
    auto family = circuits(g);
    ASSERT_EQ(family.members, testing::brute_circuits(g.digraph, g.ground, g.targets));
    for (const auto& c : family.members) {
      EXPECT_FALSE(c.empty());
      EXPECT_FALSE(is_independent(g, c));
      for (Vertex v : c) EXPECT_TRUE(is_independent(g, without(c, v)));
      for (const auto& other : family.members)
        if (other != c) {
          EXPECT_FALSE(is_subset(other, c));
        }
    }
  }
}

TEST(ContractCircuits, IdentityContraction) {
  auto ex = worked_example();
  auto family = circuits(ex.gammoid);
  EXPECT_EQ(contract_circuits(family, family.ground), family);
}

TEST(ContractCircuits, ParallelPairContractsToLoop) {
  // a and b both reach the single target t, so {a, b} is a circuit. After
  // contracting a, b has rank rk({a, b}) - rk({a}) = 0 and becomes a loop.
  Digraph d({"a", "b", "t"}, {{0, 2}, {1, 2}});
  RepresentedGammoid g(d, {2}, {0, 1});
  auto family = circuits(g);
  ASSERT_EQ(family.members, (std::vector<VertexSet>{{0, 1}}));
  auto table = testing::brute_rank_table(d, g.ground, g.targets);
  auto oracle = testing::brute_contracted_circuits(table, g.ground, {1});
  ASSERT_EQ(oracle, (std::vector<VertexSet>{{1}}));
  EXPECT_EQ(contract_circuits(family, {1}).members, oracle);
}

TEST(ContractCircuits, MatchesRankFunctionDefinition) {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 80; ++round) {
    auto inst = testing::random_cyclic_instance(rng, 6, 10);
    const auto& g = inst.gammoid;
    auto table = testing::brute_rank_table(g.digraph, g.ground, g.targets);
    auto keep = testing::random_subset(rng, g.digraph.vertex_count(), 0.6, false);
    std::vector<Vertex> kept;
    std::set_intersection(keep.begin(), keep.end(), g.ground.begin(), g.ground.end(),
                          std::back_inserter(kept));
    auto contracted = contract_circuits(circuits(g), kept);
    EXPECT_EQ(contracted.ground, kept);
    EXPECT_EQ(contracted.members, testing::brute_contracted_circuits(table, g.ground, kept));
  }
}

TEST(ContractCircuits, RejectsNonSubset) {
  CircuitFamily f{{0, 1}, {{0, 1}}};
  EXPECT_THROW(contract_circuits(f, {2}), InputError);
}

TEST(ContractCircuits, LiftedWorkedExampleContractsBack) {
  auto ex = worked_example();
  const auto& g = ex.gammoid;
  const auto& d = g.digraph;
  Digraph lifted = lift_cycle(d, *find_cycle(d), "x1", "t1");
  const Vertex x = *lifted.find("x1"), t = *lifted.find("t1");
  RepresentedGammoid lg(lifted, set_union(g.targets, {t}), set_union(g.ground, {x}));
  EXPECT_EQ(contract_circuits(circuits(lg), g.ground), circuits(g));
}

TEST(MatroidsEqual, Basics) {
  CircuitFamily f{{0, 1}, {{0, 1}}};
  EXPECT_TRUE(matroids_equal(f, f));
  EXPECT_FALSE(matroids_equal(f, CircuitFamily{{0, 1}, {{0}}}));
  EXPECT_THROW(matroids_equal(f, CircuitFamily{{0, 2}, {}}), InputError);
}

// Taken literally, the pivot drops every arc out of r, so a vertex that only
// reached s directly can no longer reach the new target r.
TEST(Pivot, LiteralPivotCanChangeTheGammoid) {
  Digraph d({"a", "r", "s"}, {{0, 2}, {1, 2}});
  RepresentedGammoid g(d, {2}, {0, 1});
  RepresentedGammoid pivoted(pivot(d, 1, 2), {1}, {0, 1});
  EXPECT_EQ(circuits(g).members, (std::vector<VertexSet>{{0, 1}}));
  EXPECT_EQ(circuits(pivoted).members, (std::vector<VertexSet>{{0}}));
  EXPECT_FALSE(matroids_equal(circuits(g), circuits(pivoted)));
}

// With the reversed arc (s, r) added, the target swap keeps the matroid.
TEST(Pivot, PivotWithReversedArcPreservesTheGammoid) {
  std::mt19937_64 rng(37);
  for (int round = 0; round < 100; ++round) {
    auto inst = testing::random_pivot_instance(rng);
    const auto& g = inst.gammoid;
    VertexSet t = set_union(without(g.targets, inst.s), {inst.r});
    Digraph p = pivot(g.digraph, inst.r, inst.s);
    auto arcs = p.arcs();
    if (!p.has_arc({inst.s, inst.r})) arcs.push_back({inst.s, inst.r});
    RepresentedGammoid pivoted(Digraph(p.names(), arcs), t, g.ground);
    EXPECT_TRUE(matroids_equal(circuits(g), circuits(pivoted)));
  }
}

// A path through t is blocked while t routes itself, but usable once t is
// no longer a target.
TEST(Gammoid, ContractingATargetThatIsNotASink) {
  Digraph d({"a", "t", "b"}, {{0, 1}, {1, 2}});
  RepresentedGammoid g(d, {1, 2}, {0, 1});
  RepresentedGammoid smaller(d, {2}, {0});
  EXPECT_EQ(contract_circuits(circuits(g), {0}).members, (std::vector<VertexSet>{{0}}));
  EXPECT_TRUE(circuits(smaller).members.empty());
}

TEST(Gammoid, ContractingASinkTargetInTheGroundRemovesIt) {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int round = 0; round < 400 && checked < 60; ++round) {
    auto inst = testing::random_cyclic_instance(rng, 6, 10);
    const auto& g = inst.gammoid;
    std::optional<Vertex> sink;
    for (Vertex t : g.targets)
      if (contains(g.ground, t) && g.digraph.successors(t).empty()) sink = t;
    if (!sink) continue;
    ++checked;
    const Vertex t = *sink;
    RepresentedGammoid smaller(g.digraph, without(g.targets, t), without(g.ground, t));
    EXPECT_EQ(contract_circuits(circuits(g), without(g.ground, t)), circuits(smaller));
  }
  EXPECT_GT(checked, 20);
}

TEST(NormalizeTargets, KeepsTheMatroidWithRankManyTargets) {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 60; ++round) {
    auto inst = testing::random_cyclic_instance(rng, 6, 10);
    const auto& g = inst.gammoid;
    auto normalized = normalize_targets(g);
    EXPECT_EQ(normalized.targets.size(), rank(g, g.ground));
    EXPECT_EQ(circuits(normalized), circuits(g));
  }
}

}  // namespace
}  // namespace heavyarc
