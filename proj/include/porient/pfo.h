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

#ifndef PORIENT_PFO_H_
#define PORIENT_PFO_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "porient/base_orientation.h"
#include "porient/graph.h"
#include "porient/rational.h"

namespace porient {

enum class EdgeState {
  kUnoriented,  // p(u,v) = p(v,u) = 1
  kOriented,    // {p(u,v), p(v,u)} = {1, 0}
  kFractional,  // p(u,v) + p(v,u) = 1, both in (0,1)
};

// Partial fractional orientation with its level sets A_m and current level
// j. Every member of a level set is an oriented vertex whose potential
// outdegree equals its level; all level sets sit strictly above j.
//
// Holds a reference to the graph, which must outlive it. Single writer.
class PartialOrientation {
 public:
  explicit PartialOrientation(const Graph& g);

  const Graph& graph() const { return *g_; }
  int level() const { return j_; }
  void set_level(int j) { j_ = j; }

  // p(from, other endpoint of e).
  const Rational& Share(EdgeId e, VertexId from) const {
    return g_->edge(e).u == from ? p_uv_[e] : p_vu_[e];
  }
  EdgeState State(EdgeId e) const;
  bool IsUnoriented(EdgeId e) const { return State(e) == EdgeState::kUnoriented; }
  bool IsFractional(EdgeId e) const { return State(e) == EdgeState::kFractional; }

  // p(tail, head) = 1, p(head, tail) = 0.
  void OrientOut(EdgeId e, VertexId tail);
  // p(from, to) = share, p(to, from) = 1 - share, share in [0,1].
  void SetShare(EdgeId e, VertexId from, const Rational& share);
  // Writes both values; throws InvariantError unless exactly one of the
  // three edge states results.
  void Assign(EdgeId e, const Rational& p_uv, const Rational& p_vu);

  // d_p(v) = sum over neighbors u of p(v,u). Maintained incrementally.
  const Rational& Potential(VertexId v) const { return potential_[v]; }
  Rational RecomputePotential(VertexId v) const;
  // d_p^+(v) = sum over neighbors u of (1 - p(u,v)).
  Rational OrientedOutdegree(VertexId v) const;
  int UnorientedCount(VertexId v) const { return unoriented_count_[v]; }
  bool IsOrientedVertex(VertexId v) const { return unoriented_count_[v] == 0; }
  // d_1(v): unoriented edges that enter v in the base orientation.
  int ResidualInCount(const BaseOrientation& base, VertexId v) const;

  int LevelOf(VertexId v) const { return level_of_[v]; }
  bool InLevelSets(VertexId v) const { return level_of_[v] >= 0; }
  void AddToLevel(VertexId v, int m);
  const std::map<int, std::vector<VertexId>>& level_sets() const { return levels_; }

  // d_p(v) - j.
  Rational Gap(VertexId v) const { return potential_[v] - j_; }

  // Per-edge "u v p(u,v) p(v,u)" lines, then "A m: members" lines and "j".
  std::string DebugDump() const;

 private:
  const Graph* g_;
  std::vector<Rational> p_uv_;
  std::vector<Rational> p_vu_;
  std::vector<Rational> potential_;
  std::vector<int> unoriented_count_;
  std::vector<int> level_of_;
  std::map<int, std::vector<VertexId>> levels_;
  int j_ = 0;
};

// gap(v) = d_p(v) - j for vertices outside the level sets, and the part
// maxima Gap(i). A part with no vertex outside the level sets has no gap.
struct GapLedger {
  int j = 0;
  std::vector<std::optional<Rational>> gap;
  std::vector<std::optional<Rational>> part_gap;  // index i-1 for part i

  const std::optional<Rational>& PartGap(int part) const { return part_gap[part - 1]; }
  // Gap(i) <= 0, treating an absent gap as closed.
  bool PartClosed(int part) const { return !PartGap(part) || *PartGap(part) <= 0; }
};

GapLedger ComputeGapLedger(const PartialOrientation& pfo, const VertexPartition& part);

struct JProperReport {
  bool ok = true;
  // 0 edge state, 1 integrality, 2 level-set independence/consistency,
  // 3 oriented edges touch a level set, 4 alignment, 5 strong integrality.
  int property = 0;
  VertexId vertex = -1;
  EdgeId edge = -1;
  std::string message;
};

// Checks the j-proper conditions (and the strong one when `strong`), and
// returns the first violation found.
JProperReport CheckJProper(const PartialOrientation& pfo, const BaseOrientation& base, int j,
                           bool strong);

struct InvariantAudit {
  long checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Full invariant sweep at the current level: edge states, alignment with
// D0, d_1(v) >= ceil(gap(v)) + j - k outside the level sets, independence
// of each A_m and d_p(v) = m on its members. Collects every violation.
InvariantAudit AuditInvariants(const PartialOrientation& pfo, const BaseOrientation& base);

struct StrongifyStats {
  int path_shifts = 0;
  int cycle_shifts = 0;
};

// Turns a j-proper PFO into a strongly j-proper one by saturating
// fractional paths and cycles. Unoriented edges and level sets are left
// alone; integral potentials never move; potentials above j only decrease;
// potentials below j end at their floor or ceiling. Throws
// PreconditionError if the input is not j-proper, unless `check_input` is
// false (the saturation itself only needs valid edge states).
StrongifyStats Strongify(PartialOrientation& pfo, const BaseOrientation& base, int j,
                         bool check_input = true);

// Completes a PFO whose gaps are all nonpositive into a proper orientation
// with d_q(v) <= d_p(v). Gap-0 vertices are taken in ascending id at each
// level; leftover fractional edges are removed by cycle rotations. The
// result is checked with VerifyProperOrientation before returning.
IntegralOrientation Finalize(PartialOrientation& pfo, const BaseOrientation& base);

}  // namespace porient

#endif  // PORIENT_PFO_H_
