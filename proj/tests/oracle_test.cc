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

#include "porient/base_orientation.h"
#include "porient/error.h"
#include "porient/oracle.h"
#include "support/test_oracles.h"

namespace porient {
namespace {

using testing::MakeGraph;

Graph Cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return MakeGraph(n, e);
}

Graph RandomTree(int n, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.emplace_back(static_cast<int>(rng() % v), v);
  return MakeGraph(n, e);
}

TEST(Oracle, SmallExamples) {
  EXPECT_EQ(ExactProperChromatic(MakeGraph(2, {{0, 1}})), 1);
  EXPECT_EQ(ExactProperChromatic(Cycle(3)), 2);
  EXPECT_EQ(ExactProperChromatic(Cycle(4)), 2);
  EXPECT_EQ(ExactProperChromatic(MakeGraph(3, {})), 0);
  EXPECT_TRUE(HasProperOrientation(Cycle(4), 2));
  EXPECT_FALSE(HasProperOrientation(Cycle(4), 1));
}

TEST(Oracle, TreeExamples) {
  EXPECT_EQ(ExactProperChromaticTree(MakeGraph(3, {{0, 1}, {1, 2}})), 1);
  EXPECT_EQ(ExactProperChromaticTree(MakeGraph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})), 1);
  EXPECT_EQ(ExactProperChromaticTree(MakeGraph(1, {})), 0);
  EXPECT_THROW(ExactProperChromaticTree(Cycle(3)), PreconditionError);
}

TEST(Oracle, MadExamples) {
  Graph k33 = MakeGraph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  EXPECT_EQ(ExactMad(k33), 3);
  EXPECT_EQ(ExactMad(MakeGraph(3, {{0, 1}, {1, 2}})), MakeRational(4, 3));
  EXPECT_EQ(ExactMad(MakeGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})), MakeRational(5, 2));
  EXPECT_EQ(ExactMad(MakeGraph(0, {})), 0);
}

TEST(Oracle, BacktrackingMatchesBruteForce) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 250; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (rng() % 2 == 0 && e.size() < 16) e.emplace_back(a, b);
      }
    }
    Graph g = MakeGraph(n, e);
    ASSERT_EQ(ExactProperChromatic(g), testing::BruteProperChromatic(g));
  }
}

TEST(Oracle, TreeDpMatchesBacktracking) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Graph t = RandomTree(2 + static_cast<int>(rng() % 12), rng);
    ASSERT_EQ(ExactProperChromaticTree(t), ExactProperChromatic(t));
  }
}

TEST(Oracle, MadMatchesBruteForceAndBoundsChromatic) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (rng() % 3 == 0 && e.size() < 14) e.emplace_back(a, b);
      }
    }
    Graph g = MakeGraph(n, e);
    Rational mad = ExactMad(g);
    ASSERT_EQ(mad, testing::BruteMad(g));
    Rational half = mad / 2;
    EXPECT_LE(CeilInt(half), ExactProperChromatic(g));
    EXPECT_EQ(CeilInt(half), MinOrientationK(g));
  }
}

TEST(Oracle, BudgetIsEnforced) {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < 7; ++a) {
    for (int b = a + 1; b < 7; ++b) e.emplace_back(a, b);
  }
  Graph k7 = MakeGraph(7, e);
  EXPECT_THROW(ExactProperChromatic(k7), BudgetExceeded);  // 21 edges
  OracleBudget wide;
  wide.max_edges = 21;
  EXPECT_EQ(ExactProperChromatic(k7, wide), 6);
  OracleBudget few;
  few.max_vertices = 5;
  EXPECT_THROW(ExactMad(k7, few), BudgetExceeded);
  EXPECT_THROW(ExactProperChromatic(k7, few), BudgetExceeded);
}

}  // namespace
}  // namespace porient
