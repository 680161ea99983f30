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

#include "porient/graph.h"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "porient/error.h"

namespace porient {

Graph Graph::FromEdges(int num_vertices,
                       std::span<const std::pair<VertexId, VertexId>> edges) {
  if (num_vertices < 0) throw PreconditionError("negative vertex count");
  Graph g;
  g.edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices) {
      throw PreconditionError("edge endpoint out of range: " + std::to_string(a) + " " +
                              std::to_string(b));
    }
    if (a == b) throw PreconditionError("self-loop at vertex " + std::to_string(a));
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::vector<int32_t> deg(num_vertices, 0);
  for (const Edge& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(num_vertices + 1, 0);
  for (int v = 0; v < num_vertices; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.incidence_.resize(g.offsets_[num_vertices]);
  std::vector<int32_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edges_[e];
    g.incidence_[fill[ed.u]++] = {ed.v, e};
    g.incidence_[fill[ed.v]++] = {ed.u, e};
  }
  for (int v = 0; v < num_vertices; ++v) {
    auto first = g.incidence_.begin() + g.offsets_[v];
    auto last = g.incidence_.begin() + g.offsets_[v + 1];
    std::sort(first, last, [](const Incidence& x, const Incidence& y) {
      return x.neighbor < y.neighbor;
    });
    for (auto it = first; it != last && it + 1 != last; ++it) {
      if (it->neighbor == (it + 1)->neighbor) {
        throw PreconditionError("parallel edge " + std::to_string(v) + " " +
                                std::to_string(it->neighbor));
      }
    }
  }
  std::vector<std::string> labels(num_vertices);
  for (int v = 0; v < num_vertices; ++v) labels[v] = std::to_string(v);
  g.SetLabels(std::move(labels));
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (VertexId v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
  return best;
}

std::optional<EdgeId> Graph::FindEdge(VertexId a, VertexId b) const {
  if (a < 0 || b < 0 || a >= num_vertices() || b >= num_vertices()) return std::nullopt;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto inc = incident(a);
  auto it = std::lower_bound(inc.begin(), inc.end(), b, [](const Incidence& x, VertexId id) {
    return x.neighbor < id;
  });
  if (it != inc.end() && it->neighbor == b) return it->edge;
  return std::nullopt;
}

std::optional<VertexId> Graph::FindLabel(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

void Graph::SetLabels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != num_vertices()) {
    throw PreconditionError("label count does not match vertex count");
  }
  label_index_.clear();
  for (VertexId v = 0; v < num_vertices(); ++v) {
    if (!label_index_.emplace(labels[v], v).second) {
      throw PreconditionError("duplicate vertex label '" + labels[v] + "'");
    }
  }
  labels_ = std::move(labels);
}

// ---- VertexPartition -----------------------------------------------------

std::vector<std::vector<VertexId>> VertexPartition::Classes() const {
  std::vector<std::vector<VertexId>> out(r);
  for (VertexId v = 0; v < static_cast<VertexId>(class_of.size()); ++v) {
    if (class_of[v] >= 1 && class_of[v] <= r) out[class_of[v] - 1].push_back(v);
  }
  return out;
}

void VertexPartition::Validate(const Graph& g) const {
  if (static_cast<int>(class_of.size()) != g.num_vertices()) {
    throw PreconditionError("partition covers " + std::to_string(class_of.size()) +
                            " vertices, graph has " + std::to_string(g.num_vertices()));
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (class_of[v] < 1 || class_of[v] > r) {
      throw PreconditionError("vertex " + g.label(v) + " has class " +
                              std::to_string(class_of[v]) + " outside 1.." + std::to_string(r));
    }
  }
  for (const Edge& e : g.edges()) {
    if (class_of[e.u] == class_of[e.v]) {
      throw PreconditionError("partition is not a proper coloring: edge " + g.label(e.u) + " " +
                              g.label(e.v) + " inside class " + std::to_string(class_of[e.u]));
    }
  }
}

bool VertexPartition::IsProperFor(const Graph& g) const {
  try {
    Validate(g);
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

VertexPartition VertexPartition::WithClassCount(int new_r) const {
  if (new_r < r) throw PreconditionError("cannot shrink a partition");
  VertexPartition p = *this;
  p.r = new_r;
  return p;
}

// ---- Orientations --------------------------------------------------------

std::vector<int> IntegralOrientation::Outdegrees(const Graph& g) const {
  std::vector<int> out(g.num_vertices(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) ++out[Tail(g, e)];
  return out;
}

IntegralOrientation IntegralOrientation::FromArcs(
    const Graph& g, std::span<const std::pair<VertexId, VertexId>> arcs) {
  IntegralOrientation o;
  o.forward.assign(g.num_edges(), 0);
  std::vector<uint8_t> seen(g.num_edges(), 0);
  for (const auto& [tail, head] : arcs) {
    auto e = g.FindEdge(tail, head);
    if (!e) {
      throw PreconditionError("arc " + std::to_string(tail) + "->" + std::to_string(head) +
                              " is not an edge of the graph");
    }
    if (seen[*e]) throw PreconditionError("edge oriented twice");
    seen[*e] = 1;
    o.forward[*e] = g.edge(*e).u == tail;
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!seen[e]) {
      throw PreconditionError("edge " + g.label(g.edge(e).u) + " " + g.label(g.edge(e).v) +
                              " has no orientation");
    }
  }
  return o;
}

std::vector<std::pair<VertexId, VertexId>> IntegralOrientation::Arcs(const Graph& g) const {
  std::vector<std::pair<VertexId, VertexId>> arcs;
  arcs.reserve(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) arcs.emplace_back(Tail(g, e), Head(g, e));
  return arcs;
}

VerificationReport VerifyProperOrientation(const Graph& g, const IntegralOrientation& o,
                                           int bound) {
  if (static_cast<int>(o.forward.size()) != g.num_edges()) {
    throw PreconditionError("orientation does not cover the edge set");
  }
  VerificationReport rep;
  rep.bound = bound;
  std::vector<int> out = o.Outdegrees(g);
  for (int d : out) rep.max_outdegree = std::max(rep.max_outdegree, d);
  for (const Edge& e : g.edges()) {
    if (out[e.u] == out[e.v]) rep.violations.push_back(e);
  }
  rep.is_proper = rep.violations.empty();
  rep.bound_respected = rep.max_outdegree <= bound;
  return rep;
}

// ---- Colorings -----------------------------------------------------------

std::vector<VertexId> SmallestLastOrder(const Graph& g, int* degeneracy) {
  const int n = g.num_vertices();
  std::vector<int> deg(n);
  std::set<std::pair<int, VertexId>> queue;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<uint8_t> removed(n, 0);
  std::vector<VertexId> order;
  order.reserve(n);
  int degen = 0;
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = 1;
    degen = std::max(degen, d);
    order.push_back(v);
    for (const Incidence& inc : g.incident(v)) {
      VertexId w = inc.neighbor;
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      queue.emplace(--deg[w], w);
    }
  }
  if (degeneracy) *degeneracy = degen;
  return order;
}

VertexPartition GreedyPartition(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<VertexId> order = SmallestLastOrder(g);
  VertexPartition p;
  p.class_of.assign(n, 0);
  std::vector<int> mark(n + 2, -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexId v = *it;
    for (const Incidence& inc : g.incident(v)) {
      int c = p.class_of[inc.neighbor];
      if (c > 0) mark[c] = v;
    }
    int c = 1;
    while (mark[c] == v) ++c;
    p.class_of[v] = c;
    p.r = std::max(p.r, c);
  }
  return p;
}

std::optional<VertexPartition> TwoColoring(const Graph& g) {
  const int n = g.num_vertices();
  VertexPartition p;
  p.r = 2;
  p.class_of.assign(n, 0);
  std::deque<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    if (p.class_of[s]) continue;
    p.class_of[s] = 1;
    queue.push_back(s);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (const Incidence& inc : g.incident(v)) {
        int& c = p.class_of[inc.neighbor];
        if (c == 0) {
          c = 3 - p.class_of[v];
          queue.push_back(inc.neighbor);
        } else if (c == p.class_of[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return p;
}

bool IsConnected(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return true;
  std::vector<uint8_t> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incident(v)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        ++count;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return count == n;
}

bool IsForest(const Graph& g) {
  // Union-find cycle check.
  std::vector<VertexId> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) {
    VertexId a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

// ---- Text formats --------------------------------------------------------

namespace {

// Splits a line into whitespace-separated tokens, dropping a '#' comment.
std::vector<std::string_view> Tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename Fn>
void ForEachLine(std::string_view text, Fn&& fn) {
  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(lineno, line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

VertexId ResolveLabel(const Graph& g, std::string_view label, int lineno) {
  auto v = g.FindLabel(label);
  if (!v) throw ParseError(lineno, "unknown vertex '" + std::string(label) + "'");
  return *v;
}

}  // namespace

ParsedGraph ParseGraph(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> ids;
  auto intern = [&](std::string_view label) {
    auto [it, inserted] = ids.emplace(std::string(label), static_cast<VertexId>(labels.size()));
    if (inserted) labels.emplace_back(label);
    return it->second;
  };
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::unordered_map<uint64_t, int> seen;
  int duplicates = 0;
  ForEachLine(text, [&](int lineno, std::string_view line) {
    auto tok = Tokenize(line);
    if (tok.empty()) return;
    if (tok.size() > 2) throw ParseError(lineno, "expected 'u v', got " + std::to_string(tok.size()) + " fields");
    if (tok.size() == 1) {
      intern(tok[0]);
      return;
    }
    if (tok[0] == tok[1]) throw ParseError(lineno, "self-loop at '" + std::string(tok[0]) + "'");
    VertexId a = intern(tok[0]);
    VertexId b = intern(tok[1]);
    uint64_t key = (static_cast<uint64_t>(std::min(a, b)) << 32) | static_cast<uint32_t>(std::max(a, b));
    if (!seen.emplace(key, lineno).second) {
      ++duplicates;
      return;
    }
    edges.emplace_back(a, b);
  });
  ParsedGraph out;
  out.graph = Graph::FromEdges(static_cast<int>(labels.size()), edges);
  out.graph.SetLabels(std::move(labels));
  out.duplicate_edges = duplicates;
  return out;
}

std::string SerializeGraph(const Graph& g) {
  std::ostringstream os;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) os << g.label(v) << '\n';
  }
  for (const Edge& e : g.edges()) os << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  return os.str();
}

VertexPartition ParsePartition(const Graph& g, std::string_view text) {
  VertexPartition p;
  p.class_of.assign(g.num_vertices(), 0);
  ForEachLine(text, [&](int lineno, std::string_view line) {
    auto tok = Tokenize(line);
    if (tok.empty()) return;
    if (tok.size() != 2) throw ParseError(lineno, "expected 'v c'");
    VertexId v = ResolveLabel(g, tok[0], lineno);
    int c = 0;
    try {
      size_t used = 0;
      c = std::stoi(std::string(tok[1]), &used);
      if (used != tok[1].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError(lineno, "class index '" + std::string(tok[1]) + "' is not an integer");
    }
    if (c < 1) throw ParseError(lineno, "class index must be >= 1");
    if (p.class_of[v] != 0 && p.class_of[v] != c) throw ParseError(lineno, "vertex assigned twice");
    p.class_of[v] = c;
    p.r = std::max(p.r, c);
  });
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (p.class_of[v] == 0) throw ParseError(0, "vertex '" + g.label(v) + "' has no class");
  }
  return p;
}

std::string SerializePartition(const Graph& g, const VertexPartition& p) {
  std::ostringstream os;
  for (VertexId v = 0; v < g.num_vertices(); ++v) os << g.label(v) << ' ' << p.class_of[v] << '\n';
  return os.str();
}

IntegralOrientation ParseOrientation(const Graph& g, std::string_view text) {
  std::vector<std::pair<VertexId, VertexId>> arcs;
  ForEachLine(text, [&](int lineno, std::string_view line) {
    auto tok = Tokenize(line);
    if (tok.empty()) return;
    if (tok.size() != 2) throw ParseError(lineno, "expected 'u v'");
    VertexId a = ResolveLabel(g, tok[0], lineno);
    VertexId b = ResolveLabel(g, tok[1], lineno);
    if (!g.Adjacent(a, b)) {
      throw ParseError(lineno, "arc " + std::string(tok[0]) + " -> " + std::string(tok[1]) +
                                   " is not an edge of the graph");
    }
    arcs.emplace_back(a, b);
  });
  try {
    return IntegralOrientation::FromArcs(g, arcs);
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
}

std::string SerializeOrientation(const Graph& g, const IntegralOrientation& o) {
  std::ostringstream os;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    os << g.label(o.Tail(g, e)) << ' ' << g.label(o.Head(g, e)) << '\n';
  }
  return os.str();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error("write failed for '" + path + "'");
}

}  // namespace porient
