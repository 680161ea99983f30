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

#ifndef PORIENT_SCHEDULES_H_
#define PORIENT_SCHEDULES_H_

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "porient/gap_closer.h"
#include "porient/graph.h"

namespace porient {

enum class FamilyTag { kBipartite, kRpartite, kPlanar4, kColorable3, kOuterplanar };

const char* FamilyTagName(FamilyTag tag);
std::optional<FamilyTag> ParseFamilyTag(std::string_view name);

struct ScheduleParams {
  int r = 0;
  int k = 0;
  int l = 0;
  int t = 0;  // r-partite only
  std::vector<RoundSpec> rounds;
  FamilyTag family = FamilyTag::kBipartite;

  // Initial leveling steps plus closing rounds.
  int LevelsConsumed() const { return r + static_cast<int>(rounds.size()); }
};

// Smallest t >= 1 with t^(t+1) >= r - 1.
int MinimalT(int r);

ScheduleParams ScheduleBipartite(int k);
ScheduleParams ScheduleRpartite(int r, int k);
ScheduleParams SchedulePlanar4(int k = 3);
// k in {2, 3}.
ScheduleParams ScheduleColorable3(int k);
ScheduleParams ScheduleOuterplanar();

// Picks a schedule for g. With a partition of at most two classes, or a
// bipartite graph, the bipartite schedule; otherwise the r-partite one on
// the given (or a greedy) partition. The partition actually used is
// written to *part.
ScheduleParams AutoSchedule(const Graph& g, std::optional<VertexPartition>* part);

// Schedule by name ("auto", "bipartite", "rpartite", "planar4",
// "colorable3", "outerplanar"). k_override < 0 means derive k from g. When
// *part is empty a two-coloring or greedy partition is filled in.
ScheduleParams ScheduleByName(const Graph& g, std::string_view name, int k_override,
                              std::optional<VertexPartition>* part);

struct PipelineOptions {
  bool exact_selection = false;
  // Throw InvariantError when a round misses one of its claimed caps.
  bool enforce_claims = true;
  // NDJSON event log, one record per step. Not owned.
  std::ostream* log = nullptr;
  // Include every precondition check in the log records.
  bool verbose_log = false;
};

struct PipelineResult {
  ScheduleParams schedule;
  IntegralOrientation orientation;
  int achieved_max = 0;
  int guaranteed_bound = 0;
  std::vector<std::optional<Rational>> initial_part_gaps;
  std::vector<RoundReport> round_log;
  VerificationReport verification;
  long audit_checks = 0;
  std::vector<std::string> audit_violations;
};

// Base orientation, initial leveling, every round of the schedule with an
// invariant audit after each, then completion to a proper orientation.
// Partitions with fewer classes than the schedule are padded with empty
// ones. Precondition failures surface as PreconditionError.
PipelineResult RunPipeline(const Graph& g, const VertexPartition& part,
                           const ScheduleParams& sched, const PipelineOptions& options = {});

}  // namespace porient

#endif  // PORIENT_SCHEDULES_H_
