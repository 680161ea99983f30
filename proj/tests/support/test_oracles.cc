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

#include "support/test_oracles.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace porient::testing {

Graph MakeGraph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<VertexId, VertexId>> e(edges.begin(), edges.end());
  return Graph::FromEdges(n, e);
}

int BruteProperChromatic(const Graph& g) {
  const int m = g.num_edges();
  if (m > 22) throw std::invalid_argument("too many edges for brute force");
  if (m == 0) return 0;
  int best = m + 1;
  std::vector<int> out(g.num_vertices());
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::fill(out.begin(), out.end(), 0);
    for (int e = 0; e < m; ++e) ++out[(mask >> e & 1u) ? g.edge(e).u : g.edge(e).v];
    bool proper = true;
    for (int e = 0; e < m && proper; ++e) proper = out[g.edge(e).u] != out[g.edge(e).v];
    if (proper) best = std::min(best, *std::max_element(out.begin(), out.end()));
  }
  return best;
}

Rational BruteMad(const Graph& g) {
  const int n = g.num_vertices();
  Rational best = 0;
  for (uint32_t s = 1; s < (1u << n); ++s) {
    int edges = 0;
    for (const Edge& e : g.edges()) edges += (s >> e.u & 1u) && (s >> e.v & 1u);
    Rational d(2 * edges, __builtin_popcount(s));
    d.canonicalize();
    best = std::max(best, d);
  }
  return best;
}

bool BruteDenseSubset(const Graph& g, int k) {
  const int n = g.num_vertices();
  for (uint32_t s = 1; s < (1u << n); ++s) {
    int edges = 0;
    for (const Edge& e : g.edges()) edges += (s >> e.u & 1u) && (s >> e.v & 1u);
    if (edges > k * __builtin_popcount(s)) return true;
  }
  return false;
}

bool BruteHallFeasible(const HallInstance& inst) {
  const int m = static_cast<int>(inst.edges.size());
  if (m > 20) throw std::invalid_argument("too many edges for brute force");
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int64_t> dl(inst.left_weight.size()), dr(inst.right_weight.size());
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1u) {
        ++dl[inst.edges[e].first];
        ++dr[inst.edges[e].second];
      }
    }
    if (dl == inst.left_weight &&
        std::equal(dr.begin(), dr.end(), inst.right_weight.begin(),
                   [](int64_t d, int64_t w) { return d <= w; })) {
      return true;
    }
  }
  return false;
}

BruteKey BruteBestIndependentKey(const std::vector<std::vector<int>>& adjacency,
                                 const std::vector<int64_t>& weight,
                                 const std::vector<uint8_t>& is_focus) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<uint32_t> nbr(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int u : adjacency[v]) nbr[v] |= 1u << u;
  }
  BruteKey best;
  for (uint32_t s = 0; s < (1u << n); ++s) {
    bool indep = true;
    BruteKey k;
    for (int v = 0; v < n && indep; ++v) {
      if (!(s >> v & 1u)) continue;
      indep = (nbr[v] & s) == 0;
      k.weight += weight[v];
      k.focus += is_focus[v];
      ++k.size;
    }
    if (!indep) continue;
    if (std::tie(k.weight, k.focus, k.size) > std::tie(best.weight, best.focus, best.size)) {
      best = k;
    }
  }
  return best;
}

namespace {

using Adj = std::vector<uint8_t>;  // n*n matrix

// Smallest upper-triangle bit string over vertex orders that list vertices
// by ascending degree; isomorphic graphs get equal codes.
uint64_t Canonical(int n, const Adj& a) {
  std::vector<int> deg(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) deg[i] += a[i * n + j];
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int x, int y) { return deg[x] < deg[y]; });
  uint64_t best = ~0ull;
  // Permute within runs of equal degree only.
  std::vector<std::pair<int, int>> runs;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && deg[perm[j]] == deg[perm[i]]) ++j;
    runs.emplace_back(i, j);
    i = j;
  }
  auto code = [&] {
    uint64_t c = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) c = c << 1 | a[perm[i] * n + perm[j]];
    }
    return c;
  };
  auto rec = [&](auto&& self, size_t r) -> void {
    if (r == runs.size()) {
      best = std::min(best, code());
      return;
    }
    auto [lo, hi] = runs[r];
    std::sort(perm.begin() + lo, perm.begin() + hi);
    do {
      self(self, r + 1);
    } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
  };
  rec(rec, 0);
  return best;
}

bool ConnectedAdj(int n, const Adj& a) {
  if (n == 0) return true;
  std::vector<int> seen(n, 0), stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y = 0; y < n; ++y) {
      if (a[x * n + y] && !seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return std::count(seen.begin(), seen.end(), 1) == n;
}

}  // namespace

std::vector<Graph> ConnectedGraphs(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("n must be in 1..7");
  std::vector<Adj> level{Adj{0}};
  for (int size = 2; size <= n; ++size) {
    std::set<uint64_t> seen;
    std::vector<Adj> next;
    for (const Adj& a : level) {
      for (uint32_t nb = 0; nb < (1u << (size - 1)); ++nb) {
        Adj b(size * size, 0);
        for (int i = 0; i < size - 1; ++i) {
          for (int j = 0; j < size - 1; ++j) b[i * size + j] = a[i * (size - 1) + j];
        }
        for (int i = 0; i < size - 1; ++i) {
          if (nb >> i & 1u) b[i * size + size - 1] = b[(size - 1) * size + i] = 1;
        }
        if (seen.insert(Canonical(size, b)).second) next.push_back(std::move(b));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (const Adj& a : level) {
    if (!ConnectedAdj(n, a)) continue;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (a[i * n + j]) edges.emplace_back(i, j);
      }
    }
    out.push_back(MakeGraph(n, edges));
  }
  return out;
}

bool ColorGraph(const Graph& g, int colors, VertexPartition* out) {
  const int n = g.num_vertices();
  std::vector<int> order(n), color(n, 0);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  auto rec = [&](auto&& self, int idx) -> bool {
    if (idx == n) return true;
    int v = order[idx];
    for (int c = 1; c <= colors; ++c) {
      bool ok = true;
      for (const Incidence& inc : g.incident(v)) ok = ok && color[inc.neighbor] != c;
      if (!ok) continue;
      color[v] = c;
      if (self(self, idx + 1)) return true;
      color[v] = 0;
    }
    return false;
  };
  if (!rec(rec, 0)) return false;
  out->class_of = color;
  out->r = colors;
  return true;
}

ColoredGraph Icosahedron() {
  const std::vector<std::pair<int, int>> edges = {
      {0, 1},  {0, 2},  {0, 3},  {0, 4},  {0, 5},  {1, 2},  {2, 3},  {3, 4},
      {4, 5},  {5, 1},  {1, 6},  {2, 6},  {2, 7},  {3, 7},  {3, 8},  {4, 8},
      {4, 9},  {5, 9},  {5, 10}, {1, 10}, {6, 7},  {7, 8},  {8, 9},  {9, 10},
      {10, 6}, {11, 6}, {11, 7}, {11, 8}, {11, 9}, {11, 10}};
  ColoredGraph cg{MakeGraph(12, edges), {}};
  if (!ColorGraph(cg.graph, 4, &cg.partition)) throw std::logic_error("icosahedron coloring");
  return cg;
}

ColoredGraph Apollonian(int n, uint64_t seed) {
  if (n < 4) throw std::invalid_argument("n >= 4");
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<int> color = {1, 2, 3, 4};
  std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  std::mt19937_64 rng(seed);
  for (int v = 4; v < n; ++v) {
    size_t f = std::uniform_int_distribution<size_t>(0, faces.size() - 1)(rng);
    auto [a, b, c] = faces[f];
    edges.emplace_back(a, v);
    edges.emplace_back(b, v);
    edges.emplace_back(c, v);
    color.push_back(10 - color[a] - color[b] - color[c]);
    faces[f] = {a, b, v};
    faces.push_back({a, c, v});
    faces.push_back({b, c, v});
  }
  ColoredGraph cg{MakeGraph(n, edges), {}};
  cg.partition.class_of = color;
  cg.partition.r = 4;
  return cg;
}

ColoredGraph StackedTriangulation(int n, uint64_t seed, double recent_bias) {
  if (n < 4) throw std::invalid_argument("n >= 4");
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<int> color = {1, 2, 3, 4};
  std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution recent(recent_bias);
  for (int v = 4; v < n; ++v) {
    size_t f = recent(rng) ? faces.size() - 1 - rng() % 3
                           : std::uniform_int_distribution<size_t>(0, faces.size() - 1)(rng);
    auto [a, b, c] = faces[f];
    edges.emplace_back(a, v);
    edges.emplace_back(b, v);
    edges.emplace_back(c, v);
    color.push_back(10 - color[a] - color[b] - color[c]);
    faces[f] = {a, b, v};
    faces.push_back({a, c, v});
    faces.push_back({b, c, v});
  }
  std::array<int, 4> perm = {1, 2, 3, 4};
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int& c : color) c = perm[c - 1];
  ColoredGraph cg{MakeGraph(n, edges), {}};
  cg.partition.class_of = color;
  cg.partition.r = 4;
  return cg;
}

ColoredGraph RandomMaximalOuterplanar(int n, uint64_t seed) {
  if (n < 3) throw std::invalid_argument("n >= 3");
  std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {0, 2}};
  std::vector<std::pair<int, int>> outer = {{0, 1}, {1, 2}, {2, 0}};  // boundary in cyclic order
  std::vector<int> color = {1, 2, 3};
  std::mt19937_64 rng(seed);
  for (int v = 3; v < n; ++v) {
    size_t i = std::uniform_int_distribution<size_t>(0, outer.size() - 1)(rng);
    auto [a, b] = outer[i];
    edges.emplace_back(a, v);
    edges.emplace_back(b, v);
    color.push_back(6 - color[a] - color[b]);
    outer[i] = {a, v};
    outer.insert(outer.begin() + static_cast<std::ptrdiff_t>(i) + 1, {v, b});
  }
  ColoredGraph cg{MakeGraph(n, edges), {}};
  cg.partition.class_of = color;
  cg.partition.r = 3;
  return cg;
}

}  // namespace porient::testing
