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

#ifndef PORIENT_TESTS_SUPPORT_TEST_ORACLES_H_
#define PORIENT_TESTS_SUPPORT_TEST_ORACLES_H_

// Deliberately naive reference computations, sharing no code with the
// library beyond the Graph type.

#include <cstdint>
#include <utility>
#include <vector>

#include "porient/graph.h"
#include "porient/hall.h"
#include "porient/rational.h"

namespace porient::testing {

Graph MakeGraph(int n, const std::vector<std::pair<int, int>>& edges);

// Minimum max outdegree over all 2^m proper orientations (m <= 22).
int BruteProperChromatic(const Graph& g);

// max over nonempty S of 2|E(S)|/|S| by listing every subset and counting
// edges directly.
Rational BruteMad(const Graph& g);

// max over nonempty S of |E(S)| - k|S| > 0, i.e. no k-orientation exists.
bool BruteDenseSubset(const Graph& g, int k);

// Tries every subset of edges (at most 20) for a weighted Hall subgraph.
bool BruteHallFeasible(const HallInstance& inst);

// Lexicographic optimum of (W(A), |A ∩ focus|, |A|) over independent sets,
// by plain subset enumeration (n <= 22).
struct BruteKey {
  int64_t weight = 0;
  int focus = 0;
  int size = 0;
};
BruteKey BruteBestIndependentKey(const std::vector<std::vector<int>>& adjacency,
                                 const std::vector<int64_t>& weight,
                                 const std::vector<uint8_t>& is_focus);

// All pairwise non-isomorphic connected graphs on n vertices (n <= 7).
std::vector<Graph> ConnectedGraphs(int n);

// Planar triangulations with a proper 4-coloring (classes 1..4).
struct ColoredGraph {
  Graph graph;
  VertexPartition partition;
};
ColoredGraph Icosahedron();
// Stacked triangulation: starts from K4 and inserts `n - 4` vertices into
// faces chosen by `seed`; the new vertex takes the color its face misses.
ColoredGraph Apollonian(int n, uint64_t seed);
// Stacked triangulation whose insertion face is, with probability
// `recent_bias`, one of the three newest faces; color classes are permuted
// by `seed`. Biased stacking yields runs of high-degree vertices.
ColoredGraph StackedTriangulation(int n, uint64_t seed, double recent_bias);
// Maximal outerplanar graph grown by stacking on random outer edges, with
// its 3-coloring (classes 1..3).
ColoredGraph RandomMaximalOuterplanar(int n, uint64_t seed);
// Proper coloring with at most `colors` classes by backtracking, if any.
bool ColorGraph(const Graph& g, int colors, VertexPartition* out);

}  // namespace porient::testing

#endif  // PORIENT_TESTS_SUPPORT_TEST_ORACLES_H_
