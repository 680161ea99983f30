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

#include "porient/generators.h"

#include <algorithm>
#include <random>

#include "porient/error.h"

namespace porient {

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

GeneratedGraph Make(int n, const EdgeList& edges, std::optional<std::vector<int>> classes = {}) {
  GeneratedGraph out;
  out.graph = Graph::FromEdges(n, edges);
  if (classes) {
    VertexPartition p;
    p.class_of = std::move(*classes);
    p.r = p.class_of.empty() ? 0 : *std::max_element(p.class_of.begin(), p.class_of.end());
    out.partition = std::move(p);
  }
  return out;
}

int64_t Binomial(int n, int r) {
  int64_t c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

// All r-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> Subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(r);
  for (int i = 0; i < r; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = r - 1;
    while (i >= 0 && cur[i] == n - r + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int q = i + 1; q < r; ++q) cur[q] = cur[q - 1] + 1;
  }
  return out;
}

void Need(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace

TightnessSpec TightnessSpec::ForK(int k) {
  Need(k >= 1, "tightness construction needs k >= 1");
  TightnessSpec s;
  s.k = k;
  s.a_size = k;
  for (int i = 1; i <= k; ++i) s.b_sizes.push_back((k * (k + 2) + 1) * Binomial(k, i));
  s.c_size = (k + 3) * k * k;
  s.d_size = (k + 3) * k;
  return s;
}

int TightnessSpec::VertexCount() const {
  int n = a_size + c_size + d_size;
  for (int b : b_sizes) n += b;
  return n;
}

GeneratedGraph GenTightnessG1(int k) {
  Need(k >= 1 && k <= 12, "tightness construction needs 1 <= k <= 12");
  const TightnessSpec spec = TightnessSpec::ForK(k);
  Need(spec.VertexCount() <= kTightnessVertexCap, "tightness graph exceeds the size cap");
  EdgeList edges;
  std::vector<int> cls;
  for (int a = 0; a < k; ++a) cls.push_back(1);
  int next = k;
  const int copies = k * (k + 2) + 1;
  for (int i = 1; i <= k; ++i) {
    for (const std::vector<int>& s : Subsets(k, i)) {
      for (int c = 0; c < copies; ++c) {
        for (int a : s) edges.emplace_back(a, next);
        cls.push_back(2);
        ++next;
      }
    }
  }
  const int c_start = next;
  for (int c = 0; c < spec.c_size; ++c) {
    for (int a = 0; a < k; ++a) edges.emplace_back(a, next);
    cls.push_back(2);
    ++next;
  }
  for (int d = 0; d < spec.d_size; ++d) {
    for (int q = 0; q < k; ++q) edges.emplace_back(c_start + d * k + q, next);
    cls.push_back(1);
    ++next;
  }
  return Make(next, edges, cls);
}

GeneratedGraph GenTightnessG(int k) {
  const GeneratedGraph one = GenTightnessG1(k);
  const int n1 = one.graph.num_vertices();
  const std::vector<std::pair<int, int>> links = {{1, 4}, {2, 4}, {3, 4}, {4, 5},
                                                  {5, 6}, {5, 7}, {5, 8}};
  const std::vector<int> flipped = {0, 0, 0, 1, 0, 1, 1, 1};  // per copy 1..8
  EdgeList edges;
  std::vector<int> cls;
  for (int c = 0; c < 8; ++c) {
    const int off = c * n1;
    for (const Edge& e : one.graph.edges()) edges.emplace_back(off + e.u, off + e.v);
    for (int v = 0; v < n1; ++v) {
      int x = one.partition->class_of[v];
      cls.push_back(flipped[c] ? 3 - x : x);
    }
  }
  for (const auto& [p, q] : links) {
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) edges.emplace_back((p - 1) * n1 + a, (q - 1) * n1 + b);
    }
  }
  return Make(8 * n1, edges, cls);
}

const std::vector<std::string>& FamilyNames() {
  static const std::vector<std::string> names = {
      "path", "cycle",        "star",          "complete",
      "complete_bipartite",   "grid",          "random_tree",
      "random_bipartite",     "maximal_outerplanar_fan"};
  return names;
}

GeneratedGraph GenFamily(const std::string& name, const FamilyParams& p) {
  EdgeList edges;
  if (name == "path") {
    Need(p.n >= 1, "path needs n >= 1");
    std::vector<int> cls;
    for (int v = 0; v < p.n; ++v) cls.push_back(v % 2 + 1);
    for (int v = 0; v + 1 < p.n; ++v) edges.emplace_back(v, v + 1);
    return Make(p.n, edges, cls);
  }
  if (name == "cycle") {
    Need(p.n >= 3, "cycle needs n >= 3");
    for (int v = 0; v < p.n; ++v) edges.emplace_back(v, (v + 1) % p.n);
    if (p.n % 2) return Make(p.n, edges);
    std::vector<int> cls;
    for (int v = 0; v < p.n; ++v) cls.push_back(v % 2 + 1);
    return Make(p.n, edges, cls);
  }
  if (name == "star") {
    Need(p.n >= 1, "star needs n >= 1 leaves");
    std::vector<int> cls{1};
    for (int v = 1; v <= p.n; ++v) {
      edges.emplace_back(0, v);
      cls.push_back(2);
    }
    return Make(p.n + 1, edges, cls);
  }
  if (name == "complete") {
    Need(p.n >= 1, "complete needs n >= 1");
    std::vector<int> cls;
    for (int v = 0; v < p.n; ++v) {
      cls.push_back(v + 1);
      for (int u = v + 1; u < p.n; ++u) edges.emplace_back(v, u);
    }
    return Make(p.n, edges, cls);
  }
  if (name == "complete_bipartite") {
    Need(p.a >= 1 && p.b >= 1, "complete_bipartite needs a, b >= 1");
    std::vector<int> cls(p.a, 1);
    cls.resize(p.a + p.b, 2);
    for (int x = 0; x < p.a; ++x) {
      for (int y = 0; y < p.b; ++y) edges.emplace_back(x, p.a + y);
    }
    return Make(p.a + p.b, edges, cls);
  }
  if (name == "grid") {
    Need(p.rows >= 1 && p.cols >= 1, "grid needs rows, cols >= 1");
    std::vector<int> cls;
    for (int r = 0; r < p.rows; ++r) {
      for (int c = 0; c < p.cols; ++c) {
        const int v = r * p.cols + c;
        cls.push_back((r + c) % 2 + 1);
        if (c + 1 < p.cols) edges.emplace_back(v, v + 1);
        if (r + 1 < p.rows) edges.emplace_back(v, v + p.cols);
      }
    }
    return Make(p.rows * p.cols, edges, cls);
  }
  if (name == "random_tree") {
    Need(p.n >= 1, "random_tree needs n >= 1");
    std::mt19937_64 rng(p.seed);
    std::vector<int> cls{1};
    for (int v = 1; v < p.n; ++v) {
      const int parent = static_cast<int>(std::uniform_int_distribution<int>(0, v - 1)(rng));
      edges.emplace_back(parent, v);
      cls.push_back(3 - cls[parent]);
    }
    return Make(p.n, edges, cls);
  }
  if (name == "random_bipartite") {
    Need(p.n >= 2, "random_bipartite needs n >= 2");
    const int left = (p.n + 1) / 2, right = p.n - left;
    const int64_t pairs = static_cast<int64_t>(left) * right;
    Need(p.m >= 0 && p.m <= pairs, "random_bipartite needs 0 <= m <= ceil(n/2)*floor(n/2)");
    std::mt19937_64 rng(p.seed);
    std::vector<int64_t> all(pairs);
    for (int64_t q = 0; q < pairs; ++q) all[q] = q;
    for (int q = 0; q < p.m; ++q) {
      const int64_t pick = std::uniform_int_distribution<int64_t>(q, pairs - 1)(rng);
      std::swap(all[q], all[pick]);
      edges.emplace_back(static_cast<int>(all[q] / right), left + static_cast<int>(all[q] % right));
    }
    std::vector<int> cls(left, 1);
    cls.resize(p.n, 2);
    return Make(p.n, edges, cls);
  }
  if (name == "maximal_outerplanar_fan") {
    Need(p.n >= 3, "fan needs n >= 3");
    std::vector<int> cls{1};
    for (int v = 1; v < p.n; ++v) {
      edges.emplace_back(0, v);
      if (v + 1 < p.n) edges.emplace_back(v, v + 1);
      cls.push_back(v % 2 + 2);
    }
    return Make(p.n, edges, cls);
  }
  throw PreconditionError("unknown family '" + name + "'");
}

}  // namespace porient
