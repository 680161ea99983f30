// Copyright 2026 The porient Authors
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

#include <random>
#include <variant>

#include "porient/base_orientation.h"
#include "porient/error.h"
#include "porient/gap_closer.h"
#include "porient/generators.h"
#include "porient/pfo.h"
#include "support/test_oracles.h"

namespace porient {
namespace {

using testing::MakeGraph;

BaseOrientation Base(const Graph& g, int k) { return std::get<BaseOrientation>(BuildKOrientation(g, k)); }

TEST(Pfo, PotentialOfFreshVertexIsItsDegree) {
  Graph g = MakeGraph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  PartialOrientation p(g);
  EXPECT_EQ(p.Potential(0), 5);
  EXPECT_EQ(p.OrientedOutdegree(0), 0);
  EXPECT_EQ(p.UnorientedCount(0), 5);
}

TEST(Pfo, HalfShare) {
  Graph g = MakeGraph(2, {{0, 1}});
  PartialOrientation p(g);
  p.SetShare(0, 0, MakeRational(1, 2));
  EXPECT_EQ(p.Potential(0), MakeRational(1, 2));
  EXPECT_EQ(p.State(0), EdgeState::kFractional);
  EXPECT_EQ(p.RecomputePotential(1), MakeRational(1, 2));
}

TEST(Pfo, OrientedOutdegreeOfSingleArc) {
  Graph g = MakeGraph(2, {{0, 1}});
  PartialOrientation p(g);
  p.OrientOut(0, 0);
  EXPECT_EQ(p.OrientedOutdegree(0), 1);
  EXPECT_EQ(p.OrientedOutdegree(1), 0);
  EXPECT_EQ(p.State(0), EdgeState::kOriented);
  EXPECT_TRUE(p.IsOrientedVertex(1));
}

TEST(Pfo, AssignRejectsInvalidPairs) {
  Graph g = MakeGraph(2, {{0, 1}});
  PartialOrientation p(g);
  EXPECT_THROW(p.Assign(0, MakeRational(1, 2), MakeRational(1, 3)), InvariantError);
  EXPECT_THROW(p.Assign(0, MakeRational(3, 2), MakeRational(-1, 2)), InvariantError);
  EXPECT_THROW(p.Assign(0, MakeRational(1), MakeRational(1, 2)), InvariantError);
}

TEST(Pfo, ResidualInCount) {
  Graph g = MakeGraph(4, {{0, 3}, {1, 3}, {2, 3}});
  BaseOrientation base = Base(g, 1);
  PartialOrientation p(g);
  ASSERT_EQ(base.Outdegree(3), 0);
  EXPECT_EQ(p.ResidualInCount(base, 3), 3);
  p.OrientOut(0, 0);
  EXPECT_EQ(p.ResidualInCount(base, 3), 2);
}

TEST(CheckJProper, FreshPfoPasses) {
  Graph g = MakeGraph(4, {{0, 1}, {1, 2}, {2, 3}});
  BaseOrientation base = Base(g, 1);
  PartialOrientation p(g);
  for (int j = 0; j < 4; ++j) EXPECT_TRUE(CheckJProper(p, base, j, true).ok);
}

TEST(CheckJProper, AdjacentLevelMembersFail) {
  Graph g = MakeGraph(2, {{0, 1}});
  BaseOrientation base = Base(g, 1);
  PartialOrientation p(g);
  p.SetShare(0, 0, MakeRational(1, 2));
  p.AddToLevel(0, 5);
  p.AddToLevel(1, 5);
  JProperReport r = CheckJProper(p, base, 1, false);
  EXPECT_FALSE(r.ok);
}

TEST(CheckJProper, IndependenceFailureIsProperty2) {
  // Two adjacent vertices whose edges are all oriented and whose potentials
  // both equal 1: a triangle oriented cyclically.
  Graph g = MakeGraph(3, {{0, 1}, {1, 2}, {0, 2}});
  BaseOrientation base = Base(g, 1);
  PartialOrientation p(g);
  p.OrientOut(0, 0);
  p.OrientOut(1, 1);
  p.OrientOut(2, 2);
  p.AddToLevel(0, 1);
  p.AddToLevel(1, 1);
  p.AddToLevel(2, 1);
  JProperReport r = CheckJProper(p, base, 0, false);
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.property, 2);
}

TEST(Strongify, IntegralInputIsAFixedPoint) {
  Graph g = MakeGraph(3, {{0, 1}, {1, 2}});
  BaseOrientation base = Base(g, 1);
  PartialOrientation p(g);
  std::string before = p.DebugDump();
  StrongifyStats s = Strongify(p, base, 2);
  EXPECT_EQ(s.path_shifts + s.cycle_shifts, 0);
  EXPECT_EQ(p.DebugDump(), before);
}

TEST(Strongify, LoneHalfEdgeRoundsToFloorAndCeiling) {
  Graph g = MakeGraph(2, {{0, 1}});
  BaseOrientation base = Base(g, 1);
  PartialOrientation p(g);
  p.SetShare(0, 0, MakeRational(1, 2));
  Strongify(p, base, 1, /*check_input=*/false);
  EXPECT_EQ(p.State(0), EdgeState::kOriented);
  std::vector<Rational> d = {p.Potential(0), p.Potential(1)};
  std::sort(d.begin(), d.end());
  EXPECT_EQ(d[0], 0);
  EXPECT_EQ(d[1], 1);
}

TEST(Strongify, HalfCycleKeepsIntegralPotentials) {
  Graph g = MakeGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  BaseOrientation base = Base(g, 1);
  PartialOrientation p(g);
  for (EdgeId e = 0; e < 4; ++e) p.SetShare(e, 0, MakeRational(1, 2));
  Strongify(p, base, 3, false);
  for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(p.Potential(v), 1);
}

TEST(Strongify, RejectsInputThatIsNotJProper) {
  Graph g = MakeGraph(2, {{0, 1}});
  BaseOrientation base = Base(g, 1);
  PartialOrientation p(g);
  p.SetShare(0, 0, MakeRational(1, 2));
  EXPECT_THROW(Strongify(p, base, 1), PreconditionError);
}

// Runs leveling and rounds on random bipartite graphs and checks the
// saturation contract on each intermediate state.
TEST(Strongify, ContractOnPipelineStates) {
  int fractional_states = 0;
  for (uint64_t seed = 0; seed < 120; ++seed) {
    FamilyParams fp;
    fp.n = 20 + static_cast<int>(seed * 7 % 180);
    fp.m = fp.n + static_cast<int>(seed * 13 % (2 * fp.n));
    fp.seed = seed;
    GeneratedGraph gg = GenFamily("random_bipartite", fp);
    const Graph& g = gg.graph;
    const int k = std::max(1, MinOrientationK(g));
    BaseOrientation base = Base(g, k);
    const VertexPartition& part = *gg.partition;
    // Bipartite round: leveling down to k + 1, then one round to k.
    PartialOrientation p = InitialLevels(g, part, base, k + 3);
    {
      RoundSpec spec;
      spec.j = p.level();
      spec.focus_part = 1;
      spec.protected_parts = {2};
      CloseRound(p, base, part, spec);

      PartialOrientation q = p;
      const int j = q.level();
      bool had_fraction = false;
      for (EdgeId e = 0; e < g.num_edges(); ++e) had_fraction |= q.IsFractional(e);
      fractional_states += had_fraction;
      Strongify(q, base, j);
      ASSERT_TRUE(CheckJProper(q, base, j, true).ok);
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const Rational& before = p.Potential(v);
        const Rational& after = q.Potential(v);
        if (IsInteger(before)) {
          EXPECT_EQ(after, before);
        } else if (before > j) {
          EXPECT_LE(after, before);
        } else {
          EXPECT_TRUE(after == Rational(Floor(before)) || after == Rational(Ceil(before)));
        }
        EXPECT_EQ(q.LevelOf(v), p.LevelOf(v));
      }
      for (EdgeId e = 0; e < g.num_edges(); ++e) EXPECT_EQ(q.IsUnoriented(e), p.IsUnoriented(e));
    }
  }
  EXPECT_GT(fractional_states, 0);
}

TEST(Finalize, IntegralProperInputIsKept) {
  Graph g = MakeGraph(3, {{0, 1}, {1, 2}});
  BaseOrientation base = Base(g, 1);
  PartialOrientation p(g);
  p.OrientOut(0, 0);
  p.OrientOut(1, 1);
  p.AddToLevel(0, 1);
  p.AddToLevel(1, 1);  // not independent
  p.set_level(0);
  EXPECT_THROW(Finalize(p, base), PreconditionError);

  PartialOrientation ok(g);
  ok.OrientOut(0, 1);  // 1 -> 0
  ok.OrientOut(1, 1);  // 1 -> 2
  ok.AddToLevel(1, 2);
  ok.set_level(1);
  IntegralOrientation o = Finalize(ok, base);
  EXPECT_EQ(o.Outdegrees(g), (std::vector<int>{0, 2, 0}));
}

TEST(Finalize, PathOnThreeVertices) {
  Graph g = MakeGraph(3, {{0, 1}, {1, 2}});
  BaseOrientation base = Base(g, 1);
  PartialOrientation p(g);
  p.set_level(1);
  EXPECT_THROW(Finalize(p, base), PreconditionError);  // the center has gap 1
  p.set_level(2);
  IntegralOrientation o = Finalize(p, base);
  std::vector<int> out = o.Outdegrees(g);
  EXPECT_TRUE(VerifyProperOrientation(g, o, 2).is_proper);
  for (VertexId v = 0; v < 3; ++v) EXPECT_LE(out[v], g.degree(v));
}

TEST(Pfo, DebugDumpFormat) {
  Graph g = MakeGraph(3, {{0, 1}, {1, 2}});
  PartialOrientation p(g);
  p.SetShare(0, 1, MakeRational(2, 3));
  p.OrientOut(1, 1);
  p.AddToLevel(1, 9);
  p.set_level(4);
  EXPECT_EQ(p.DebugDump(), "0 1 1/3 2/3\n1 2 1 0\nA 9: 1\nj 4\n");
}

TEST(GapLedger, PartMaxima) {
  Graph g = MakeGraph(4, {{0, 1}, {1, 2}, {2, 3}});
  PartialOrientation p(g);
  p.set_level(1);
  VertexPartition part{{1, 2, 1, 2}, 2};
  GapLedger led = ComputeGapLedger(p, part);
  EXPECT_EQ(*led.PartGap(1), 1);
  EXPECT_EQ(*led.PartGap(2), 1);
  EXPECT_EQ(*led.gap[3], 0);
  EXPECT_FALSE(led.PartClosed(1));
}

}  // namespace
}  // namespace porient
