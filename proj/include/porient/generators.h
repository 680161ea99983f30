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

#ifndef PORIENT_GENERATORS_H_
#define PORIENT_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "porient/graph.h"

namespace porient {

struct GeneratedGraph {
  Graph graph;
  std::optional<VertexPartition> partition;
};

// Block sizes of the lower-bound gadget G1(k).
struct TightnessSpec {
  int k = 1;
  int a_size = 0;
  std::vector<int> b_sizes;  // index i-1 for B_i
  int c_size = 0;
  int d_size = 0;

  static TightnessSpec ForK(int k);
  int VertexCount() const;
};

// Largest vertex count the tightness generators will build.
inline constexpr int kTightnessVertexCap = 200000;

// G1(k): A, then B_1..B_k (grouped by subset of A in lexicographic order),
// then C, then D, with ids assigned in that order. Partition: A and D in
// class 1, B and C in class 2.
GeneratedGraph GenTightnessG1(int k);

// Eight copies of G1(k) with complete joins between the A-sets of linked
// copies; copies 4, 6, 7 and 8 have their classes swapped.
GeneratedGraph GenTightnessG(int k);

struct FamilyParams {
  int n = 0;
  int m = 0;
  int a = 0;
  int b = 0;
  int rows = 0;
  int cols = 0;
  uint64_t seed = 0;
};

// path(n), cycle(n), star(n leaves), complete(n), complete_bipartite(a, b),
// grid(rows, cols), random_tree(n, seed), random_bipartite(n, m, seed),
// maximal_outerplanar_fan(n). Bipartite families and the fan come with a
// proper partition. Throws PreconditionError on an unknown name or bad
// parameters.
GeneratedGraph GenFamily(const std::string& name, const FamilyParams& params);

const std::vector<std::string>& FamilyNames();

}  // namespace porient

#endif  // PORIENT_GENERATORS_H_
