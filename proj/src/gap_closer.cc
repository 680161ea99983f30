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

#include "porient/gap_closer.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "porient/error.h"
#include "porient/hall.h"

namespace porient {

namespace {

std::string Str(int64_t x) { return std::to_string(x); }

void ValidateSpec(const RoundSpec& spec, int r) {
  auto in_range = [r](int p) { return p >= 1 && p <= r; };
  if (!in_range(spec.focus_part)) {
    throw PreconditionError("focus part " + Str(spec.focus_part) + " outside 1.." + Str(r));
  }
  std::set<int> seen;
  for (int s : spec.protected_parts) {
    if (!in_range(s)) throw PreconditionError("protected part " + Str(s) + " out of range");
    if (s == spec.focus_part) throw PreconditionError("focus part is also protected");
    if (!seen.insert(s).second) throw PreconditionError("protected part listed twice");
  }
}

[[noreturn]] void FailPreconditions(const Graph& g, const RoundSpec& spec,
                                    const std::vector<PreconditionCheck>& checks) {
  std::vector<const PreconditionCheck*> failed;
  for (const PreconditionCheck& c : checks) {
    if (!c.pass) failed.push_back(&c);
  }
  std::ostringstream os;
  os << "round " << (spec.label.empty() ? "j=" + Str(spec.j) : spec.label) << ": ";
  if (failed.front()->vertex >= 0) os << "vertex " << g.label(failed.front()->vertex) << ": ";
  os << failed.front()->inequality << " fails";
  if (failed.size() > 1) os << " (" << failed.size() - 1 << " more)";
  throw PreconditionError(os.str());
}

}  // namespace

const char* RoundModeName(RoundMode mode) {
  return mode == RoundMode::kLemma ? "lemma" : "corollary";
}

bool RoundReport::ClaimsHold() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimCheck& c) { return c.pass; });
}

PartialOrientation InitialLevels(const Graph& g, const VertexPartition& part,
                                 const BaseOrientation& base, int l) {
  const int r = part.r;
  if (l < r + base.k) {
    throw PreconditionError("l >= r + k fails: " + Str(l) + " < " + Str(r) + " + " + Str(base.k));
  }
  PartialOrientation pfo(g);
  pfo.set_level(l - r);
  std::vector<uint8_t> chosen(g.num_vertices(), 0);
  for (int i = 1; i <= r; ++i) {
    const int level = l - i + 1;
    std::vector<VertexId> x;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (!pfo.IsOrientedVertex(v) && !pfo.InLevelSets(v) && pfo.Potential(v) >= level) {
        x.push_back(v);
      }
    }
    std::vector<VertexId> a;
    auto take = [&](VertexId v) {
      for (const Incidence& inc : g.incident(v)) {
        if (chosen[inc.neighbor]) return;
      }
      chosen[v] = 1;
      a.push_back(v);
    };
    for (VertexId v : x) {
      if (part.class_of[v] == i) take(v);
    }
    for (VertexId v : x) {
      if (part.class_of[v] != i && !chosen[v]) take(v);
    }
    std::sort(a.begin(), a.end());
    for (VertexId v : a) {
      std::vector<EdgeId> in_edges;
      for (const Incidence& inc : g.incident(v)) {
        if (!pfo.IsUnoriented(inc.edge)) continue;
        if (base.IsOut(g, inc.edge, v)) {
          pfo.OrientOut(inc.edge, v);
        } else {
          in_edges.push_back(inc.edge);
        }
      }
      const Rational excess = pfo.Potential(v) - level;
      const int64_t inward = excess.get_num().get_si();
      if (!IsInteger(excess) || inward < 0 || inward > static_cast<int64_t>(in_edges.size())) {
        throw InvariantError("vertex " + g.label(v) + " cannot be brought to outdegree " +
                             Str(level));
      }
      const size_t outward = in_edges.size() - static_cast<size_t>(inward);
      for (size_t q = 0; q < in_edges.size(); ++q) {
        EdgeId e = in_edges[q];
        pfo.OrientOut(e, q < outward ? v : g.edge(e).Other(v));
      }
      pfo.AddToLevel(v, level);
    }
    for (VertexId v : a) chosen[v] = 0;
  }
  return pfo;
}

RoundReport CloseRound(PartialOrientation& pfo, const BaseOrientation& base,
                       const VertexPartition& part, const RoundSpec& spec,
                       const CloseRoundOptions& options) {
  const Graph& g = pfo.graph();
  const int j = spec.j;
  const int i = spec.i();
  const int k = base.k;
  ValidateSpec(spec, part.r);
  if (pfo.level() != j) {
    throw PreconditionError("round expects level " + Str(j) + " but the PFO is at " +
                            Str(pfo.level()));
  }
  if (JProperReport jp = CheckJProper(pfo, base, j, false); !jp.ok) {
    throw PreconditionError("input is not " + Str(j) + "-proper: " + jp.message);
  }

  RoundReport rep;
  rep.spec = spec;
  rep.strongify = Strongify(pfo, base, j);
  const GapLedger before = ComputeGapLedger(pfo, part);
  rep.old_part_gaps = before.part_gap;

  auto is_protected = [&](int p) {
    return std::find(spec.protected_parts.begin(), spec.protected_parts.end(), p) !=
           spec.protected_parts.end();
  };

  auto& checks = rep.precondition_checks;
  checks.push_back({-1, "j >= k: " + Str(j) + " >= " + Str(k), j >= k});
  for (int s : spec.protected_parts) {
    const auto& gs = before.PartGap(s);
    checks.push_back({-1, "Gap(" + Str(s) + ") <= 0: " + (gs ? ToString(*gs) : "none") + " <= 0",
                      before.PartClosed(s)});
  }

  std::vector<VertexId> u_set, seed;
  std::vector<int64_t> weights;
  std::vector<Rational> gap_of(g.num_vertices());
  std::vector<int> d1_of(g.num_vertices(), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (pfo.InLevelSets(v)) continue;
    const Rational gap = pfo.Gap(v);
    if (gap < 0) continue;
    if (pfo.IsOrientedVertex(v)) {
      if (gap == 0) seed.push_back(v);
      continue;
    }
    const int64_t cg = CeilInt(gap);
    const int d1 = pfo.ResidualInCount(base, v);
    const int p = part.class_of[v];
    if (spec.mode == RoundMode::kLemma) {
      if (p == spec.focus_part) {
        checks.push_back({v,
                          "d1 >= (i+1)*ceil(gap): " + Str(d1) + " >= " + Str(i + 1) + "*" + Str(cg),
                          d1 >= (i + 1) * cg});
      }
    } else {
      checks.push_back({v, "j >= i*ceil(gap) + k: " + Str(j) + " >= " + Str(i) + "*" + Str(cg) +
                               " + " + Str(k),
                        j >= i * cg + k});
      if (p == spec.focus_part && j >= i * cg + k && d1 < (i + 1) * cg) {
        throw InvariantError("vertex " + g.label(v) +
                             ": corollary condition holds but d1 >= (i+1)*ceil(gap) does not");
      }
    }
    gap_of[v] = gap;
    d1_of[v] = d1;
    u_set.push_back(v);
    weights.push_back(p == spec.focus_part ? cg : is_protected(p) ? 1 : 0);
  }
  for (const PreconditionCheck& c : checks) {
    if (!c.pass) FailPreconditions(g, spec, checks);
  }

  SelectionInstance inst = MakeSelectionInstance(g, part, u_set, weights, spec.focus_part,
                                                 spec.protected_parts, seed);
  SelectionResult sel =
      options.exact_selection ? SelectIndependentSetExact(inst) : SelectIndependentSet(inst);
  CertificateReport cert = VerifyCertificates(inst, sel.selected);
  if (!cert.ok()) throw InvariantError("selection certificate failed: " + cert.failures.front());
  rep.candidates = inst.size();
  rep.seed = static_cast<int>(seed.size());
  rep.key = sel.key;
  rep.selector_iterations = sel.iterations;

  std::vector<uint8_t> in_a(g.num_vertices(), 0), in_x(g.num_vertices(), 0);
  std::vector<int64_t> weight_of(g.num_vertices(), 0);
  for (int q = 0; q < inst.size(); ++q) {
    (sel.selected[q] ? in_a : in_x)[inst.vertices[q]] = 1;
    weight_of[inst.vertices[q]] = inst.weight[q];
  }
  const std::vector<VertexId> a_set = sel.Members(inst);
  rep.selected = static_cast<int>(a_set.size());

  for (int s : spec.protected_parts) {
    HallInstance h;
    std::vector<VertexId> left;
    std::vector<int> right_pos(g.num_vertices(), -1);
    std::vector<VertexId> right;
    for (VertexId a : a_set) {
      if (part.class_of[a] == s) continue;
      right_pos[a] = static_cast<int>(right.size());
      right.push_back(a);
      h.right_weight.push_back(weight_of[a]);
    }
    std::vector<EdgeId> edge_ids;
    for (VertexId x : u_set) {
      if (!in_x[x] || part.class_of[x] != s) continue;
      const int li = static_cast<int>(left.size());
      left.push_back(x);
      h.left_weight.push_back(1);
      for (const Incidence& inc : g.incident(x)) {
        if (right_pos[inc.neighbor] >= 0) {
          h.edges.emplace_back(li, right_pos[inc.neighbor]);
          edge_ids.push_back(inc.edge);
        }
      }
    }
    HallOutcome out = SolveHall(h);
    if (!out.success) {
      throw InvariantError("Hall condition fails for protected part " + Str(s));
    }
    for (int c : out.chosen) {
      EdgeId e = edge_ids[c];
      if (!pfo.IsUnoriented(e)) throw InvariantError("Hall edge is not unoriented");
      pfo.OrientOut(e, right[h.edges[c].second]);
      ++rep.hall_edges;
    }
  }

  Rational delta = 0;
  for (VertexId a : a_set) {
    const int p = part.class_of[a];
    if (is_protected(p)) {
      for (const Incidence& inc : g.incident(a)) {
        if (pfo.IsUnoriented(inc.edge)) pfo.OrientOut(inc.edge, a);
      }
      continue;
    }
    std::vector<EdgeId> rest;
    for (const Incidence& inc : g.incident(a)) {
      if (!pfo.IsUnoriented(inc.edge)) continue;
      if (base.IsOut(g, inc.edge, a)) {
        pfo.OrientOut(inc.edge, a);
      } else {
        rest.push_back(inc.edge);
      }
    }
    const Rational& gap = gap_of[a];
    const int d1p = static_cast<int>(rest.size());
    if (gap > 0) {
      if (d1p == 0 || d1p < gap) {
        throw InvariantError("vertex " + g.label(a) + " has d1' = " + Str(d1p) + " below gap " +
                             ToString(gap));
      }
      const Rational share = 1 - gap / d1p;
      for (EdgeId e : rest) {
        pfo.SetShare(e, a, share);
        if (pfo.IsFractional(e)) ++rep.fractional_edges;
      }
      const int64_t used = p == spec.focus_part ? i * CeilInt(gap) : 0;
      delta = std::max(delta, Rational(gap / (d1_of[a] - used)));
    } else {
      for (EdgeId e : rest) pfo.OrientOut(e, a);
    }
  }
  rep.delta_bound = delta;

  std::vector<VertexId> new_level = a_set;
  new_level.insert(new_level.end(), seed.begin(), seed.end());
  for (VertexId v : new_level) pfo.AddToLevel(v, j);
  pfo.set_level(j - 1);

  if (spec.mode == RoundMode::kCorollary) {
    Rational bound = 0;
    for (VertexId a : a_set) {
      const Rational& gap = gap_of[a];
      if (gap > 0) bound = std::max(bound, Rational(gap / (j - k - (i - 1) * CeilInt(gap))));
    }
    rep.corollary_bound = bound;
  }

  const GapLedger after = ComputeGapLedger(pfo, part);
  rep.new_part_gaps = after.part_gap;

  std::vector<std::string> post;
  if (JProperReport jp = CheckJProper(pfo, base, j - 1, false); !jp.ok) {
    post.push_back("result is not " + Str(j - 1) + "-proper: " + jp.message);
  }
  for (VertexId v : new_level) {
    if (pfo.Potential(v) != j) post.push_back("A_j member " + g.label(v) + " has d_p != j");
  }
  for (int s = 1; s <= part.r; ++s) {
    const auto& now = after.PartGap(s);
    if (s == spec.focus_part || is_protected(s)) {
      if (!after.PartClosed(s)) post.push_back("Gap(" + Str(s) + ") stays positive");
      continue;
    }
    if (!now || *now <= 0) continue;
    const auto& old = before.PartGap(s);
    if (!old || *now > *old + delta) {
      post.push_back("Gap(" + Str(s) + ") grew by more than the delta bound");
    }
  }
  if (rep.corollary_bound && delta > *rep.corollary_bound) {
    post.push_back("delta bound exceeds the corollary bound");
  }
  if (!post.empty()) throw InvariantError("round j=" + Str(j) + ": " + post.front());

  if (spec.delta_cap) {
    rep.claims.push_back({"delta <= cap", delta, *spec.delta_cap, delta <= *spec.delta_cap});
  }
  for (const auto& [s, cap] : spec.part_gap_caps) {
    const auto& now = after.PartGap(s);
    Rational value = now ? *now : Rational(0);
    rep.claims.push_back({"Gap(" + Str(s) + ") <= cap", value, cap, !now || *now <= cap});
  }
  return rep;
}

}  // namespace porient
