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

#include "porient/base_orientation.h"
#include "porient/error.h"
#include "porient/generators.h"
#include "porient/oracle.h"

namespace porient {
namespace {

int Binom(int n, int r) {
  int c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

TEST(Tightness, SizeFormulas) {
  for (int k = 1; k <= 5; ++k) {
    int copies = k * (k + 2) + 1;
    int n = k + (k + 3) * k * k + (k + 3) * k;
    int m = (k + 3) * k * k * k + (k + 3) * k * k;  // A-C and C-D
    for (int i = 1; i <= k; ++i) {
      n += copies * Binom(k, i);
      m += copies * Binom(k, i) * i;
    }
    GeneratedGraph g1 = GenTightnessG1(k);
    EXPECT_EQ(g1.graph.num_vertices(), n) << k;
    EXPECT_EQ(g1.graph.num_edges(), m) << k;
    EXPECT_EQ(TightnessSpec::ForK(k).VertexCount(), n);
    GeneratedGraph g = GenTightnessG(k);
    EXPECT_EQ(g.graph.num_vertices(), 8 * n) << k;
    EXPECT_EQ(g.graph.num_edges(), 8 * m + 7 * k * k) << k;
  }
}

TEST(Tightness, PartitionsAreProperBipartitions) {
  for (int k = 1; k <= 5; ++k) {
    for (const GeneratedGraph& g : {GenTightnessG1(k), GenTightnessG(k)}) {
      ASSERT_TRUE(g.partition.has_value());
      EXPECT_EQ(g.partition->r, 2);
      EXPECT_TRUE(g.partition->IsProperFor(g.graph));
      EXPECT_TRUE(TwoColoring(g.graph).has_value());
    }
  }
}

TEST(Tightness, OrientationNumberIsK) {
  for (int k = 1; k <= 3; ++k) {
    GeneratedGraph g = GenTightnessG(k);
    EXPECT_EQ(MinOrientationK(g.graph), k) << k;
    EXPECT_EQ(MinOrientationK(GenTightnessG1(k).graph), k) << k;
  }
}

TEST(Tightness, KOneIsATreeWithValueFour) {
  GeneratedGraph g = GenTightnessG(1);
  EXPECT_EQ(g.graph.num_vertices(), 104);
  EXPECT_TRUE(IsConnected(g.graph));
  EXPECT_TRUE(IsForest(g.graph));
  EXPECT_EQ(ExactProperChromaticTree(g.graph), 4);
  // G1 alone is a tree where 3 already suffices.
  EXPECT_LE(ExactProperChromaticTree(GenTightnessG1(1).graph), 3);
}

TEST(Tightness, RejectsBadK) {
  EXPECT_THROW(GenTightnessG1(0), PreconditionError);
  EXPECT_THROW(GenTightnessG(13), PreconditionError);
}

TEST(Families, Examples) {
  FamilyParams p;
  p.n = 5;
  GeneratedGraph c5 = GenFamily("cycle", p);
  EXPECT_EQ(c5.graph.num_edges(), 5);
  EXPECT_FALSE(c5.partition.has_value());
  for (VertexId v = 0; v < 5; ++v) EXPECT_EQ(c5.graph.degree(v), 2);

  p = {};
  p.rows = 3;
  p.cols = 3;
  GeneratedGraph grid = GenFamily("grid", p);
  EXPECT_EQ(grid.graph.num_vertices(), 9);
  EXPECT_EQ(grid.graph.num_edges(), 12);
  EXPECT_TRUE(grid.partition->IsProperFor(grid.graph));

  p = {};
  p.n = 4;
  GeneratedGraph star = GenFamily("star", p);
  EXPECT_EQ(star.graph.num_vertices(), 5);
  EXPECT_EQ(star.graph.degree(0), 4);

  p = {};
  p.a = 3;
  p.b = 4;
  GeneratedGraph kab = GenFamily("complete_bipartite", p);
  EXPECT_EQ(kab.graph.num_edges(), 12);

  p = {};
  p.n = 6;
  GeneratedGraph k6 = GenFamily("complete", p);
  EXPECT_EQ(k6.graph.num_edges(), 15);
  EXPECT_EQ(k6.partition->r, 6);

  p = {};
  p.n = 7;
  GeneratedGraph path = GenFamily("path", p);
  EXPECT_EQ(path.graph.num_edges(), 6);
  EXPECT_TRUE(IsForest(path.graph));
}

TEST(Families, RandomBipartiteIsReproducible) {
  FamilyParams p;
  p.n = 50;
  p.m = 120;
  p.seed = 7;
  GeneratedGraph a = GenFamily("random_bipartite", p);
  GeneratedGraph b = GenFamily("random_bipartite", p);
  EXPECT_EQ(a.graph.num_edges(), 120);
  EXPECT_EQ(SerializeGraph(a.graph), SerializeGraph(b.graph));
  EXPECT_TRUE(a.partition->IsProperFor(a.graph));
  p.seed = 8;
  EXPECT_NE(SerializeGraph(GenFamily("random_bipartite", p).graph), SerializeGraph(a.graph));
  p.m = 50 * 50;
  EXPECT_THROW(GenFamily("random_bipartite", p), PreconditionError);
}

TEST(Families, RandomTreesAndFans) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    FamilyParams p;
    p.n = 3 + static_cast<int>(seed) * 7;
    p.seed = seed;
    GeneratedGraph t = GenFamily("random_tree", p);
    EXPECT_TRUE(IsForest(t.graph));
    EXPECT_TRUE(IsConnected(t.graph));
    GeneratedGraph fan = GenFamily("maximal_outerplanar_fan", p);
    EXPECT_EQ(fan.graph.num_edges(), 2 * p.n - 3);
    EXPECT_TRUE(fan.partition->IsProperFor(fan.graph));
    EXPECT_LE(fan.partition->r, 3);
  }
}

TEST(Families, UnknownNameThrows) {
  EXPECT_THROW(GenFamily("hypercube", {}), PreconditionError);
  EXPECT_EQ(FamilyNames().size(), 9u);
}

}  // namespace
}  // namespace porient
