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

#include "porient/base_orientation.h"

#include <algorithm>
#include <deque>

#include "porient/error.h"

namespace porient {

namespace {

BaseOrientation Finish(const Graph& g, int k, IntegralOrientation dir) {
  BaseOrientation base;
  base.k = k;
  base.out_of.assign(g.num_vertices(), {});
  for (EdgeId e = 0; e < g.num_edges(); ++e) base.out_of[dir.Tail(g, e)].push_back(dir.Head(g, e));
  for (auto& list : base.out_of) std::sort(list.begin(), list.end());
  base.direction = std::move(dir);
  return base;
}

}  // namespace

int InducedEdgeCount(const Graph& g, const std::vector<VertexId>& vertices) {
  std::vector<uint8_t> in(g.num_vertices(), 0);
  for (VertexId v : vertices) in[v] = 1;
  int count = 0;
  for (const Edge& e : g.edges()) count += in[e.u] && in[e.v];
  return count;
}

KOrientationResult BuildKOrientation(const Graph& g, int k) {
  if (k < 0) throw PreconditionError("k must be non-negative");
  const int n = g.num_vertices();
  // Orient every edge away from the endpoint eliminated first in the
  // smallest-last order; outdegrees are then bounded by the degeneracy.
  std::vector<VertexId> order = SmallestLastOrder(g);
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  IntegralOrientation dir;
  dir.forward.resize(g.num_edges());
  std::vector<int> out(n, 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    dir.forward[e] = rank[ed.u] < rank[ed.v];
    ++out[dir.Tail(g, e)];
  }

  std::vector<EdgeId> via(n);
  std::vector<int> stamp(n, -1);
  int round = 0;
  for (VertexId v = 0; v < n; ++v) {
    while (out[v] > k) {
      ++round;
      // BFS along out-arcs, neighbors in ascending id.
      std::deque<VertexId> queue{v};
      std::vector<VertexId> reached{v};
      stamp[v] = round;
      VertexId target = -1;
      while (!queue.empty() && target < 0) {
        VertexId x = queue.front();
        queue.pop_front();
        for (const Incidence& inc : g.incident(x)) {
          if (dir.Tail(g, inc.edge) != x || stamp[inc.neighbor] == round) continue;
          stamp[inc.neighbor] = round;
          via[inc.neighbor] = inc.edge;
          reached.push_back(inc.neighbor);
          if (out[inc.neighbor] < k) {
            target = inc.neighbor;
            break;
          }
          queue.push_back(inc.neighbor);
        }
      }
      if (target < 0) {
        std::sort(reached.begin(), reached.end());
        InfeasibilityWitness w{reached, InducedEdgeCount(g, reached)};
        return w;
      }
      for (VertexId x = target; x != v;) {
        EdgeId e = via[x];
        VertexId prev = g.edge(e).Other(x);
        dir.forward[e] = !dir.forward[e];
        x = prev;
      }
      --out[v];
      ++out[target];
    }
  }
  return Finish(g, k, std::move(dir));
}

int MinOrientationK(const Graph& g) {
  if (g.num_edges() == 0) return 0;
  auto ok = [&](int k) { return std::holds_alternative<BaseOrientation>(BuildKOrientation(g, k)); };
  int hi = 1;
  while (!ok(hi)) hi *= 2;
  int lo = hi / 2;  // infeasible (or 0, which is infeasible with edges)
  while (hi - lo > 1) {
    int mid = (lo + hi) / 2;
    if (ok(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace porient
