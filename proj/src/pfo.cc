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

#include "porient/pfo.h"

#include <algorithm>
#include <sstream>

#include "porient/error.h"

namespace porient {

namespace {

const Rational kZero(0);
const Rational kOne(1);

bool InUnitInterval(const Rational& q) { return q >= 0 && q <= 1; }

std::string Name(const Graph& g, VertexId v) { return g.label(v); }

std::string EdgeName(const Graph& g, EdgeId e) {
  return Name(g, g.edge(e).u) + "-" + Name(g, g.edge(e).v);
}

}  // namespace

// ---- PartialOrientation --------------------------------------------------

PartialOrientation::PartialOrientation(const Graph& g)
    : g_(&g),
      p_uv_(g.num_edges(), kOne),
      p_vu_(g.num_edges(), kOne),
      potential_(g.num_vertices()),
      unoriented_count_(g.num_vertices()),
      level_of_(g.num_vertices(), -1) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    potential_[v] = g.degree(v);
    unoriented_count_[v] = g.degree(v);
  }
}

EdgeState PartialOrientation::State(EdgeId e) const {
  const Rational& a = p_uv_[e];
  const Rational& b = p_vu_[e];
  if (a == 1 && b == 1) return EdgeState::kUnoriented;
  if ((a == 1 && b == 0) || (a == 0 && b == 1)) return EdgeState::kOriented;
  return EdgeState::kFractional;
}

void PartialOrientation::Assign(EdgeId e, const Rational& p_uv, const Rational& p_vu) {
  const bool unoriented = p_uv == 1 && p_vu == 1;
  const bool valid = unoriented || (p_uv + p_vu == 1 && InUnitInterval(p_uv) && InUnitInterval(p_vu));
  if (!valid) {
    throw InvariantError("edge " + EdgeName(*g_, e) + " would get shares " + ToString(p_uv) +
                         ", " + ToString(p_vu));
  }
  const Edge& ed = g_->edge(e);
  const bool was_unoriented = IsUnoriented(e);
  potential_[ed.u] += p_uv - p_uv_[e];
  potential_[ed.v] += p_vu - p_vu_[e];
  p_uv_[e] = p_uv;
  p_vu_[e] = p_vu;
  if (was_unoriented != unoriented) {
    int delta = unoriented ? 1 : -1;
    unoriented_count_[ed.u] += delta;
    unoriented_count_[ed.v] += delta;
  }
}

void PartialOrientation::OrientOut(EdgeId e, VertexId tail) { SetShare(e, tail, kOne); }

void PartialOrientation::SetShare(EdgeId e, VertexId from, const Rational& share) {
  Rational rest = 1 - share;
  if (g_->edge(e).u == from) {
    Assign(e, share, rest);
  } else {
    Assign(e, rest, share);
  }
}

Rational PartialOrientation::RecomputePotential(VertexId v) const {
  Rational sum = 0;
  for (const Incidence& inc : g_->incident(v)) sum += Share(inc.edge, v);
  return sum;
}

Rational PartialOrientation::OrientedOutdegree(VertexId v) const {
  Rational sum = 0;
  for (const Incidence& inc : g_->incident(v)) sum += 1 - Share(inc.edge, inc.neighbor);
  return sum;
}

int PartialOrientation::ResidualInCount(const BaseOrientation& base, VertexId v) const {
  int count = 0;
  for (const Incidence& inc : g_->incident(v)) {
    if (IsUnoriented(inc.edge) && !base.IsOut(*g_, inc.edge, v)) ++count;
  }
  return count;
}

void PartialOrientation::AddToLevel(VertexId v, int m) {
  if (level_of_[v] >= 0) {
    throw InvariantError("vertex " + Name(*g_, v) + " already in A_" + std::to_string(level_of_[v]));
  }
  level_of_[v] = m;
  auto& members = levels_[m];
  members.insert(std::lower_bound(members.begin(), members.end(), v), v);
}

std::string PartialOrientation::DebugDump() const {
  std::ostringstream os;
  for (EdgeId e = 0; e < g_->num_edges(); ++e) {
    const Edge& ed = g_->edge(e);
    os << Name(*g_, ed.u) << ' ' << Name(*g_, ed.v) << ' ' << ToString(p_uv_[e]) << ' '
       << ToString(p_vu_[e]) << '\n';
  }
  for (const auto& [m, members] : levels_) {
    os << "A " << m << ':';
    for (VertexId v : members) os << ' ' << Name(*g_, v);
    os << '\n';
  }
  os << "j " << j_ << '\n';
  return os.str();
}

// ---- Gap ledger ----------------------------------------------------------

GapLedger ComputeGapLedger(const PartialOrientation& pfo, const VertexPartition& part) {
  const Graph& g = pfo.graph();
  GapLedger led;
  led.j = pfo.level();
  led.gap.assign(g.num_vertices(), std::nullopt);
  led.part_gap.assign(part.r, std::nullopt);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (pfo.InLevelSets(v)) continue;
    Rational gap = pfo.Potential(v) - led.j;
    auto& pg = led.part_gap[part.class_of[v] - 1];
    if (!pg || gap > *pg) pg = gap;
    led.gap[v] = std::move(gap);
  }
  return led;
}

// ---- j-proper checks -----------------------------------------------------

JProperReport CheckJProper(const PartialOrientation& pfo, const BaseOrientation& base, int j,
                           bool strong) {
  const Graph& g = pfo.graph();
  auto fail = [&](int prop, VertexId v, EdgeId e, std::string msg) {
    JProperReport r;
    r.ok = false;
    r.property = prop;
    r.vertex = v;
    r.edge = e;
    r.message = std::move(msg);
    return r;
  };
  // A = union of A_m over m > j.
  auto in_a = [&](VertexId v) { return pfo.LevelOf(v) > j; };

  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const Rational& a = pfo.Share(e, ed.u);
    const Rational& b = pfo.Share(e, ed.v);
    bool unoriented = a == 1 && b == 1;
    if (!unoriented && !(a + b == 1 && InUnitInterval(a) && InUnitInterval(b))) {
      return fail(0, -1, e, "edge " + EdgeName(g, e) + " is in none of the three edge states");
    }
  }
  for (const auto& [m, members] : pfo.level_sets()) {
    if (m <= j) {
      return fail(2, members.empty() ? -1 : members.front(), -1,
                  "level set A_" + std::to_string(m) + " is not above j=" + std::to_string(j));
    }
    for (VertexId v : members) {
      if (!pfo.IsOrientedVertex(v)) {
        return fail(1, v, -1, "A_" + std::to_string(m) + " member " + Name(g, v) + " is not oriented");
      }
      if (pfo.Potential(v) != m) {
        return fail(1, v, -1,
                    "A_" + std::to_string(m) + " member " + Name(g, v) + " has d_p=" +
                        ToString(pfo.Potential(v)));
      }
      for (const Incidence& inc : g.incident(v)) {
        if (pfo.LevelOf(inc.neighbor) == m) {
          return fail(2, v, inc.edge,
                      "A_" + std::to_string(m) + " is not independent: " + EdgeName(g, inc.edge));
        }
      }
    }
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (in_a(v) || !pfo.IsOrientedVertex(v)) continue;
    // An oriented vertex with potential above j belongs in some A_m.
    if (pfo.Potential(v) > j) {
      return fail(1, v, -1,
                  "oriented vertex " + Name(g, v) + " with d_p=" + ToString(pfo.Potential(v)) +
                      " > j is outside the level sets");
    }
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (pfo.IsUnoriented(e)) continue;
    const Edge& ed = g.edge(e);
    if (!in_a(ed.u) && !in_a(ed.v)) {
      return fail(3, -1, e, "oriented edge " + EdgeName(g, e) + " touches no level set");
    }
    // Alignment: an edge leaving an A-vertex in D0 must leave it under p too
    // when the other end is outside A.
    for (VertexId x : {ed.u, ed.v}) {
      VertexId y = ed.Other(x);
      if (in_a(x) && !in_a(y) && base.IsOut(g, e, x)) {
        if (pfo.Share(e, x) != 1 || pfo.Share(e, y) != 0) {
          return fail(4, x, e, "edge " + EdgeName(g, e) + " not aligned with the base orientation");
        }
      }
    }
  }
  if (strong) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      const Rational& d = pfo.Potential(v);
      if (d <= j && !IsInteger(d)) {
        return fail(5, v, -1, "vertex " + Name(g, v) + " has fractional d_p=" + ToString(d) + " <= j");
      }
    }
  }
  return {};
}

InvariantAudit AuditInvariants(const PartialOrientation& pfo, const BaseOrientation& base) {
  const Graph& g = pfo.graph();
  const int j = pfo.level();
  InvariantAudit audit;
  auto in_a = [&](VertexId v) { return pfo.LevelOf(v) > j; };
  auto note = [&](bool ok, std::string msg) {
    ++audit.checks;
    if (!ok) audit.violations.push_back(std::move(msg));
  };
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const Rational& a = pfo.Share(e, ed.u);
    const Rational& b = pfo.Share(e, ed.v);
    bool pfo1 = a == 1 && b == 1;
    bool pfo2 = (a == 1 && b == 0) || (a == 0 && b == 1);
    bool pfo3 = a + b == 1 && a > 0 && a < 1;
    note(int(pfo1) + int(pfo2) + int(pfo3) == 1, "edge " + EdgeName(g, e) + " violates PFO1/2/3");
    if (pfo1) continue;
    note(in_a(ed.u) || in_a(ed.v), "oriented edge " + EdgeName(g, e) + " touches no level set");
    for (VertexId x : {ed.u, ed.v}) {
      VertexId y = ed.Other(x);
      if (in_a(x) && !in_a(y) && base.IsOut(g, e, x)) {
        note(a + b == 1 && pfo.Share(e, x) == 1,
             "edge " + EdgeName(g, e) + " not aligned with the base orientation");
      }
    }
  }
  for (const auto& [m, members] : pfo.level_sets()) {
    note(m > j, "level set A_" + std::to_string(m) + " not above j");
    for (VertexId v : members) {
      note(pfo.IsOrientedVertex(v), "A_" + std::to_string(m) + " member " + Name(g, v) + " not oriented");
      note(pfo.Potential(v) == m, "A_" + std::to_string(m) + " member " + Name(g, v) +
                                      " has d_p=" + ToString(pfo.Potential(v)));
      for (const Incidence& inc : g.incident(v)) {
        if (inc.neighbor > v) {
          note(pfo.LevelOf(inc.neighbor) != m,
               "A_" + std::to_string(m) + " contains the edge " + EdgeName(g, inc.edge));
        }
      }
    }
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    note(pfo.Potential(v) == pfo.RecomputePotential(v), "cached d_p of " + Name(g, v) + " is stale");
    if (in_a(v)) continue;
    note(pfo.OrientedOutdegree(v) <= base.k,
         "vertex " + Name(g, v) + " outside A has d_p^+ > k");
    Rational gap = pfo.Gap(v);
    int64_t bound = CeilInt(gap) + j - base.k;
    note(pfo.ResidualInCount(base, v) >= bound,
         "vertex " + Name(g, v) + " violates d_1 >= ceil(gap) + j - k (d_1=" +
             std::to_string(pfo.ResidualInCount(base, v)) + ", gap=" + ToString(gap) + ")");
  }
  return audit;
}

// ---- Fractional walks ----------------------------------------------------

namespace {

struct Walk {
  std::vector<VertexId> vertices;  // w0 .. wt
  std::vector<EdgeId> edges;       // edges[a] joins vertices[a], vertices[a+1]
  bool cycle = false;              // vertices.front() == vertices.back()
};

// Follows fractional edges from `start`, lowest neighbor id first, never
// leaving along the edge it arrived on. Stops on revisiting a vertex
// (cycle) or, when `stop_at_fractional`, on reaching a vertex whose
// potential is not an integer (path).
Walk WalkFractional(const PartialOrientation& pfo, VertexId start, bool stop_at_fractional,
                    std::vector<int>& pos_stamp, std::vector<int>& pos, int& stamp) {
  const Graph& g = pfo.graph();
  ++stamp;
  Walk w;
  w.vertices.push_back(start);
  pos_stamp[start] = stamp;
  pos[start] = 0;
  VertexId cur = start;
  EdgeId came = -1;
  while (true) {
    EdgeId next_edge = -1;
    VertexId next = -1;
    for (const Incidence& inc : g.incident(cur)) {
      if (inc.edge != came && pfo.IsFractional(inc.edge)) {
        next_edge = inc.edge;
        next = inc.neighbor;
        break;
      }
    }
    if (next_edge < 0) {
      throw InvariantError("fractional walk stuck at " + g.label(cur) +
                           " (integral potential with a single fractional edge)");
    }
    if (pos_stamp[next] == stamp) {
      int from = pos[next];
      Walk c;
      c.cycle = true;
      c.vertices.assign(w.vertices.begin() + from, w.vertices.end());
      c.vertices.push_back(next);
      c.edges.assign(w.edges.begin() + from, w.edges.end());
      c.edges.push_back(next_edge);
      return c;
    }
    w.vertices.push_back(next);
    w.edges.push_back(next_edge);
    pos_stamp[next] = stamp;
    pos[next] = static_cast<int>(w.vertices.size()) - 1;
    if (stop_at_fractional && !IsInteger(pfo.Potential(next))) return w;
    cur = next;
    came = next_edge;
  }
}

// Moves eps along the walk: p(w_{a-1}, w_a) += eps on every edge. Interior
// vertices keep their potential; w0 gains eps and wt loses eps (nothing
// changes for a cycle).
void Push(PartialOrientation& pfo, const Walk& w, const Rational& eps) {
  for (size_t a = 0; a < w.edges.size(); ++a) {
    VertexId from = w.vertices[a];
    pfo.SetShare(w.edges[a], from, pfo.Share(w.edges[a], from) + eps);
  }
}

Rational EdgeSlack(const PartialOrientation& pfo, const Walk& w) {
  Rational eps = 1;
  for (size_t a = 0; a < w.edges.size(); ++a) {
    // Room for p(w_a, w_{a+1}) to reach 1.
    const Rational& room = pfo.Share(w.edges[a], w.vertices[a + 1]);
    if (room < eps) eps = room;
  }
  return eps;
}

}  // namespace

StrongifyStats Strongify(PartialOrientation& pfo, const BaseOrientation& base, int j,
                         bool check_input) {
  JProperReport pre = check_input ? CheckJProper(pfo, base, j, false) : JProperReport{};
  if (!pre.ok) throw PreconditionError("strongify: input is not " + std::to_string(j) + "-proper: " + pre.message);
  const Graph& g = pfo.graph();
  StrongifyStats stats;
  std::vector<int> pos_stamp(g.num_vertices(), 0), pos(g.num_vertices(), 0);
  int stamp = 0;
  while (true) {
    VertexId start = -1;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      const Rational& d = pfo.Potential(v);
      if (d < j && !IsInteger(d)) {
        start = v;
        break;
      }
    }
    if (start < 0) break;
    Walk w = WalkFractional(pfo, start, true, pos_stamp, pos, stamp);
    Rational eps = EdgeSlack(pfo, w);
    if (!w.cycle) {
      const Rational& d0 = pfo.Potential(w.vertices.front());
      const Rational& dt = pfo.Potential(w.vertices.back());
      Rational up = Rational(Ceil(d0)) - d0;
      Rational down = dt - Rational(Floor(dt));
      eps = std::min({eps, up, down});
      ++stats.path_shifts;
    } else {
      ++stats.cycle_shifts;
    }
    Push(pfo, w, eps);
  }
  return stats;
}

IntegralOrientation Finalize(PartialOrientation& pfo, const BaseOrientation& base) {
  const Graph& g = pfo.graph();
  const int j = pfo.level();
  JProperReport pre = CheckJProper(pfo, base, j, false);
  if (!pre.ok) throw PreconditionError("finalize: input is not " + std::to_string(j) + "-proper: " + pre.message);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!pfo.InLevelSets(v) && pfo.Potential(v) > j) {
      throw PreconditionError("finalize: vertex " + g.label(v) + " has positive gap " +
                              ToString(pfo.Gap(v)));
    }
  }
  Strongify(pfo, base, j);

  // Every potential outside the level sets is now an integer <= j; peel
  // off gap-0 vertices one level at a time.
  for (int level = j; level >= 0; --level) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (pfo.InLevelSets(v) || pfo.Potential(v) != level) continue;
      pfo.AddToLevel(v, level);
      for (const Incidence& inc : g.incident(v)) {
        if (pfo.IsUnoriented(inc.edge)) pfo.OrientOut(inc.edge, v);
      }
    }
    pfo.set_level(level - 1);
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!pfo.InLevelSets(v)) {
      throw InvariantError("finalize: vertex " + g.label(v) + " left without a level (d_p=" +
                           ToString(pfo.Potential(v)) + ")");
    }
  }

  // Rotate fractional cycles away; potentials are all integral, so the
  // fractional subgraph has minimum degree two wherever it is nonempty.
  std::vector<int> pos_stamp(g.num_vertices(), 0), pos(g.num_vertices(), 0);
  int stamp = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    while (pfo.IsFractional(e)) {
      Walk w = WalkFractional(pfo, g.edge(e).u, false, pos_stamp, pos, stamp);
      Push(pfo, w, EdgeSlack(pfo, w));
    }
  }

  IntegralOrientation out;
  out.forward.resize(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (pfo.State(e) != EdgeState::kOriented) {
      throw InvariantError("finalize: edge " + EdgeName(g, e) + " is not oriented");
    }
    out.forward[e] = pfo.Share(e, g.edge(e).u) == 1;
  }
  int bound = pfo.level_sets().empty() ? 0 : pfo.level_sets().rbegin()->first;
  VerificationReport rep = VerifyProperOrientation(g, out, bound);
  if (!rep.is_proper || !rep.bound_respected) {
    throw InvariantError("finalize produced an improper orientation");
  }
  return out;
}

}  // namespace porient
