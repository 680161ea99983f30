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

#ifndef PORIENT_ORACLE_H_
#define PORIENT_ORACLE_H_

#include <chrono>

#include "porient/graph.h"
#include "porient/rational.h"

namespace porient {

// Limits checked before (and, for time, during) an exact search.
struct OracleBudget {
  int max_vertices = 20;
  int max_edges = 20;
  std::chrono::milliseconds time_cap{10000};
};

// Exact proper chromatic number by backtracking over edge directions for
// increasing caps. Throws BudgetExceeded outside the budget.
int ExactProperChromatic(const Graph& g, const OracleBudget& budget = {});

// Same search for a single cap: is there a proper orientation with maximum
// outdegree at most `cap`?
bool HasProperOrientation(const Graph& g, int cap, const OracleBudget& budget = {});

// Exact value on trees by dynamic programming over (outdegree, direction of
// the parent edge). Throws PreconditionError unless g is a tree.
int ExactProperChromaticTree(const Graph& g);

// max over nonempty vertex sets S of 2|E(G[S])|/|S|; 0 for the empty graph.
// Throws BudgetExceeded above budget.max_vertices (at most 24).
Rational ExactMad(const Graph& g, const OracleBudget& budget = {});

}  // namespace porient

#endif  // PORIENT_ORACLE_H_
