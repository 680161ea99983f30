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

#ifndef PORIENT_GAP_CLOSER_H_
#define PORIENT_GAP_CLOSER_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "porient/base_orientation.h"
#include "porient/graph.h"
#include "porient/indset.h"
#include "porient/pfo.h"
#include "porient/rational.h"

namespace porient {

enum class RoundMode { kLemma, kCorollary };

const char* RoundModeName(RoundMode mode);

struct RoundSpec {
  int j = 0;
  int focus_part = 1;
  std::vector<int> protected_parts;
  RoundMode mode = RoundMode::kCorollary;
  // Optional claimed caps, checked and recorded but not enforced here.
  std::optional<Rational> delta_cap;
  std::map<int, Rational> part_gap_caps;  // part -> cap on its new Gap
  std::string label;

  int i() const { return static_cast<int>(protected_parts.size()); }
};

struct PreconditionCheck {
  VertexId vertex = -1;
  std::string inequality;
  bool pass = true;
};

struct ClaimCheck {
  std::string claim;
  Rational value;
  Rational cap;
  bool pass = true;
};

struct RoundReport {
  RoundSpec spec;
  StrongifyStats strongify;
  // max{delta_i(A∩focus), delta_0(A∩unprotected)} from the pre-round d_1.
  Rational delta_bound;
  // Corollary mode only: max gap/(j - k - (i-1)ceil(gap)) over the new A_j.
  std::optional<Rational> corollary_bound;
  std::vector<std::optional<Rational>> old_part_gaps;
  std::vector<std::optional<Rational>> new_part_gaps;
  std::vector<PreconditionCheck> precondition_checks;
  std::vector<ClaimCheck> claims;
  int candidates = 0;
  int seed = 0;
  int selected = 0;
  int hall_edges = 0;
  int fractional_edges = 0;
  SelectionKey key;
  int selector_iterations = 0;

  bool ClaimsHold() const;
};

// Levels l, l-1, ..., l-r+1 by greedy independent sets. The result is
// (l-r)-proper, aligned with D0 and has no fractional edge. Throws
// PreconditionError when l < r + k.
PartialOrientation InitialLevels(const Graph& g, const VertexPartition& part,
                                 const BaseOrientation& base, int l);

struct CloseRoundOptions {
  bool exact_selection = false;  // branch and bound, up to 30 candidates
};

// One gap-closing round at level spec.j == pfo.level(). On return the PFO
// is (j-1)-proper with the new A_j. Precondition failures throw
// PreconditionError naming the vertex and inequality; failed
// postconditions or certificates throw InvariantError.
RoundReport CloseRound(PartialOrientation& pfo, const BaseOrientation& base,
                       const VertexPartition& part, const RoundSpec& spec,
                       const CloseRoundOptions& options = {});

}  // namespace porient

#endif  // PORIENT_GAP_CLOSER_H_
