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

#ifndef PORIENT_BASE_ORIENTATION_H_
#define PORIENT_BASE_ORIENTATION_H_

#include <variant>
#include <vector>

#include "porient/graph.h"

namespace porient {

// A k-orientation D0 fixed for the whole pipeline.
struct BaseOrientation {
  int k = 0;
  IntegralOrientation direction;
  std::vector<std::vector<VertexId>> out_of;  // D0 out-neighbors, ascending

  // True when edge e leaves v in D0.
  bool IsOut(const Graph& g, EdgeId e, VertexId v) const { return direction.Tail(g, e) == v; }
  int Outdegree(VertexId v) const { return static_cast<int>(out_of[v].size()); }
};

// Vertex set S with 2|E(G[S])| > 2k|S|, certifying that no k-orientation
// exists.
struct InfeasibilityWitness {
  std::vector<VertexId> vertex_set;
  int edge_count = 0;
};

using KOrientationResult = std::variant<BaseOrientation, InfeasibilityWitness>;

// Starts from the smallest-last orientation and repairs overloaded vertices
// by reversing BFS paths to an underloaded vertex. When no such vertex is
// reachable from an overloaded one, the reachable set is returned as the
// witness.
KOrientationResult BuildKOrientation(const Graph& g, int k);

// Smallest k for which BuildKOrientation succeeds (0 for edgeless graphs).
int MinOrientationK(const Graph& g);

// Number of edges of the subgraph induced by `vertices`.
int InducedEdgeCount(const Graph& g, const std::vector<VertexId>& vertices);

}  // namespace porient

#endif  // PORIENT_BASE_ORIENTATION_H_
