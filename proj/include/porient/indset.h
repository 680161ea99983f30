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

#ifndef PORIENT_INDSET_H_
#define PORIENT_INDSET_H_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "porient/graph.h"

namespace porient {

enum class CandidateRole { kFocus, kProtected, kOther };

// Candidates U (unoriented, gap >= 0) with the round's weights. Candidate
// indices are local; `vertices` maps them back to graph ids (ascending).
struct SelectionInstance {
  std::vector<VertexId> vertices;
  std::vector<int> part;
  std::vector<CandidateRole> role;
  std::vector<int64_t> weight;
  std::vector<std::vector<int>> adjacency;  // local, ascending
  std::vector<int> protected_parts;
  // Oriented gap-0 vertices; always part of A and adjacent to no candidate.
  std::vector<VertexId> seed;

  int size() const { return static_cast<int>(vertices.size()); }
};

// Restricts g to `candidates` (ascending ids) and assigns roles from the
// partition. Throws PreconditionError if a seed vertex touches a candidate.
SelectionInstance MakeSelectionInstance(const Graph& g, const VertexPartition& part,
                                        std::vector<VertexId> candidates,
                                        std::vector<int64_t> weights, int focus_part,
                                        std::vector<int> protected_parts,
                                        std::vector<VertexId> seed);

struct SelectionKey {
  int64_t weight = 0;
  int focus_count = 0;
  int size = 0;
  friend auto operator<=>(const SelectionKey&, const SelectionKey&) = default;
};

struct SelectionResult {
  std::vector<uint8_t> selected;  // per candidate
  SelectionKey key;
  int iterations = 0;
  int hall_exchanges = 0;
  int focus_exchanges = 0;
  int additions = 0;

  // Graph ids of the selected candidates, ascending (seed excluded).
  std::vector<VertexId> Members(const SelectionInstance& inst) const;
};

struct SelectionOptions {
  // 0 picks the bound implied by the lexicographic key.
  long iteration_cap = 0;
};

// Greedy start followed by improving exchanges until none applies. Each
// exchange strictly raises the key; InvariantError otherwise, or when the
// iteration cap is hit.
SelectionResult SelectIndependentSet(const SelectionInstance& inst,
                                     const SelectionOptions& options = {});

// Lexicographic maximum over all independent subsets by branch and bound.
// Throws BudgetExceeded above 30 candidates.
SelectionResult SelectIndependentSetExact(const SelectionInstance& inst);

SelectionKey KeyOf(const SelectionInstance& inst, const std::vector<uint8_t>& selected);

struct CertificateReport {
  bool independent = true;
  bool hall = true;       // c1
  bool protected_cover = true;  // c2
  bool dominating = true;       // c3
  std::vector<std::string> failures;
  bool ok() const { return independent && hall && protected_cover && dominating; }
};

// Recomputes independence and the three certificates from scratch.
CertificateReport VerifyCertificates(const SelectionInstance& inst,
                                     const std::vector<uint8_t>& selected);

}  // namespace porient

#endif  // PORIENT_INDSET_H_
