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

#include "porient/oracle.h"

#include <algorithm>
#include <array>
#include <numeric>

#include "porient/error.h"

namespace porient {

namespace {

void CheckSize(const Graph& g, const OracleBudget& budget) {
  if (g.num_vertices() > budget.max_vertices) {
    throw BudgetExceeded("graph has " + std::to_string(g.num_vertices()) +
                         " vertices, budget is " + std::to_string(budget.max_vertices));
  }
  if (g.num_edges() > budget.max_edges) {
    throw BudgetExceeded("graph has " + std::to_string(g.num_edges()) + " edges, budget is " +
                         std::to_string(budget.max_edges));
  }
}

class Backtracker {
 public:
  Backtracker(const Graph& g, int cap, const OracleBudget& budget)
      : g_(g), cap_(cap), out_(g.num_vertices(), 0), rem_(g.num_vertices()) {
    deadline_ = std::chrono::steady_clock::now() + budget.time_cap;
    order_.resize(g.num_edges());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) {
      auto sum = [&](EdgeId e) { return g.degree(g.edge(e).u) + g.degree(g.edge(e).v); };
      return sum(a) > sum(b);
    });
    for (VertexId v = 0; v < g.num_vertices(); ++v) rem_[v] = g.degree(v);
  }

  bool Run() { return Search(0); }

 private:
  // A completed vertex must differ from every completed neighbor.
  bool Clashes(VertexId v) const {
    if (rem_[v] != 0) return false;
    for (const Incidence& inc : g_.incident(v)) {
      if (rem_[inc.neighbor] == 0 && out_[inc.neighbor] == out_[v]) return true;
    }
    return false;
  }

  bool Search(size_t pos) {
    if ((++nodes_ & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline_) {
      throw BudgetExceeded("exact search exceeded its time cap");
    }
    if (pos == order_.size()) return true;
    const Edge& e = g_.edge(order_[pos]);
    --rem_[e.u];
    --rem_[e.v];
    for (VertexId tail : {e.u, e.v}) {
      if (out_[tail] == cap_) continue;
      ++out_[tail];
      if (!Clashes(e.u) && !Clashes(e.v) && Search(pos + 1)) return true;
      --out_[tail];
    }
    ++rem_[e.u];
    ++rem_[e.v];
    return false;
  }

  const Graph& g_;
  int cap_;
  std::vector<int> out_;
  std::vector<int> rem_;
  std::vector<EdgeId> order_;
  std::chrono::steady_clock::time_point deadline_;
  long nodes_ = 0;
};

}  // namespace

bool HasProperOrientation(const Graph& g, int cap, const OracleBudget& budget) {
  CheckSize(g, budget);
  return Backtracker(g, cap, budget).Run();
}

int ExactProperChromatic(const Graph& g, const OracleBudget& budget) {
  CheckSize(g, budget);
  if (g.num_edges() == 0) return 0;
  for (int cap = 1;; ++cap) {
    if (Backtracker(g, cap, budget).Run()) return cap;
  }
}

int ExactProperChromaticTree(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0 || g.num_edges() != n - 1 || !IsConnected(g)) {
    throw PreconditionError("graph is not a tree");
  }
  if (n == 1) return 0;

  std::vector<VertexId> order, parent(n, -1);
  order.reserve(n);
  std::vector<uint8_t> seen(n, 0);
  order.push_back(0);
  seen[0] = 1;
  for (size_t q = 0; q < order.size(); ++q) {
    for (const Incidence& inc : g.incident(order[q])) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        parent[inc.neighbor] = order[q];
        order.push_back(inc.neighbor);
      }
    }
  }

  // ok[v][up][d]: the subtree of v admits a proper orientation in which v
  // has outdegree d and the parent edge points up (v -> parent) iff up.
  auto feasible = [&](int cap) {
    std::vector<std::array<std::vector<uint8_t>, 2>> ok(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const VertexId v = *it;
      for (int up = 0; up < 2; ++up) {
        ok[v][up].assign(cap + 1, 0);
        if (parent[v] < 0 && up) continue;
        for (int d = up; d <= cap; ++d) {
          int only_out = 0, both = 0;
          bool dead = false;
          for (const Incidence& inc : g.incident(v)) {
            const VertexId c = inc.neighbor;
            if (c == parent[v]) continue;
            bool can_out = false, can_in = false;  // v -> c, c -> v
            for (int dc = 0; dc <= cap; ++dc) {
              if (dc == d) continue;
              can_out = can_out || ok[c][0][dc];
              can_in = can_in || ok[c][1][dc];
            }
            if (!can_out && !can_in) {
              dead = true;
              break;
            }
            if (can_out && can_in) {
              ++both;
            } else if (can_out) {
              ++only_out;
            }
          }
          const int need = d - up;
          ok[v][up][d] = !dead && only_out <= need && need <= only_out + both;
        }
      }
    }
    const auto& root = ok[order.front()][0];
    return std::find(root.begin(), root.end(), 1) != root.end();
  };
  for (int cap = 1; cap < n; ++cap) {
    if (feasible(cap)) {
      if (cap > 4) throw InvariantError("tree needs more than 4 out-arcs");
      return cap;
    }
  }
  throw InvariantError("tree DP found no proper orientation");
}

Rational ExactMad(const Graph& g, const OracleBudget& budget) {
  const int n = g.num_vertices();
  if (n > std::min(budget.max_vertices, 24)) {
    throw BudgetExceeded("exact MAD is limited to " + std::to_string(std::min(budget.max_vertices, 24)) +
                         " vertices");
  }
  std::vector<uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  const uint32_t full = (1u << n) - 1;
  std::vector<int> edges(static_cast<size_t>(full) + 1, 0);
  int64_t best_num = 0, best_den = 1;
  for (uint32_t s = 1; s <= full; ++s) {
    const int v = __builtin_ctz(s);
    const uint32_t rest = s & (s - 1);
    edges[s] = edges[rest] + __builtin_popcount(adj[v] & rest);
    const int size = __builtin_popcount(s);
    if (static_cast<int64_t>(2 * edges[s]) * best_den > best_num * size) {
      best_num = 2 * edges[s];
      best_den = size;
    }
  }
  return MakeRational(best_num, best_den);
}

}  // namespace porient
