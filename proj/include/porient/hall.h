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

#ifndef PORIENT_HALL_H_
#define PORIENT_HALL_H_

#include <cstdint>
#include <utility>
#include <vector>

namespace porient {

// Bipartite instance with integer vertex weights. Sides are indexed
// independently: left 0..num_left-1, right 0..num_right-1. Every edge must
// have weight 1 on at least one endpoint.
struct HallInstance {
  std::vector<int64_t> left_weight;
  std::vector<int64_t> right_weight;
  std::vector<std::pair<int, int>> edges;  // (left, right), no duplicates
};

struct HallOutcome {
  bool success = false;
  // Success: chosen edges, as indices into HallInstance::edges, with every
  // left vertex covered exactly weight times and every right vertex at
  // most weight times.
  std::vector<int> chosen;
  // Failure: left set S with W(S) > W(N(S)), ascending.
  std::vector<int> witness;
};

// Decides the weighted Hall condition with a max-flow (BFS augmenting
// paths) and returns either the subgraph M or a violating set. Throws
// PreconditionError when an edge has weight other than 1 on both ends.
HallOutcome SolveHall(const HallInstance& inst);

// Direct checks of the two outcome contracts.
bool IsValidHallSubgraph(const HallInstance& inst, const std::vector<int>& chosen);
bool IsHallViolation(const HallInstance& inst, const std::vector<int>& witness);

}  // namespace porient

#endif  // PORIENT_HALL_H_
