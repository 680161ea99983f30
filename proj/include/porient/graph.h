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

#ifndef PORIENT_GRAPH_H_
#define PORIENT_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace porient {

using VertexId = int32_t;
using EdgeId = int32_t;

// Undirected edge, always stored with u < v.
struct Edge {
  VertexId u;
  VertexId v;

  VertexId Other(VertexId w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

// Simple undirected graph on dense ids 0..n-1. Immutable once built;
// incidence lists are sorted by neighbor id, which is the tie-break order
// used by every deterministic routine in the library.
class Graph {
 public:
  Graph() = default;

  // Throws PreconditionError on self-loops, parallel edges or ids out of
  // range.
  static Graph FromEdges(int num_vertices,
                         std::span<const std::pair<VertexId, VertexId>> edges);

  int num_vertices() const { return static_cast<int>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const Incidence> incident(VertexId v) const {
    return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
  }
  int degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const;

  std::optional<EdgeId> FindEdge(VertexId a, VertexId b) const;
  bool Adjacent(VertexId a, VertexId b) const { return FindEdge(a, b).has_value(); }

  // External labels; defaults to the decimal id.
  const std::string& label(VertexId v) const { return labels_[v]; }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<VertexId> FindLabel(std::string_view label) const;
  void SetLabels(std::vector<std::string> labels);

 private:
  std::vector<Edge> edges_;
  std::vector<int32_t> offsets_;
  std::vector<Incidence> incidence_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> label_index_;
};

// Vertex partition V_1 .. V_r. Class indices are 1-based; a class may be
// empty, which is how a k-coloring is used as an r-partition for r > k.
struct VertexPartition {
  std::vector<int> class_of;
  int r = 0;

  std::vector<std::vector<VertexId>> Classes() const;
  // Throws PreconditionError when some vertex has no class, a class index is
  // outside 1..r, or some edge joins two vertices of the same class.
  void Validate(const Graph& g) const;
  bool IsProperFor(const Graph& g) const;
  // Same classes, class count raised to r (new classes empty).
  VertexPartition WithClassCount(int new_r) const;
};

// One direction per edge: forward[e] means edge(e).u -> edge(e).v.
struct IntegralOrientation {
  std::vector<uint8_t> forward;

  VertexId Tail(const Graph& g, EdgeId e) const { return forward[e] ? g.edge(e).u : g.edge(e).v; }
  VertexId Head(const Graph& g, EdgeId e) const { return forward[e] ? g.edge(e).v : g.edge(e).u; }
  std::vector<int> Outdegrees(const Graph& g) const;

  // Builds from a list of arcs (tail, head). Throws PreconditionError when an
  // arc is not an edge of g, an edge is given twice, or an edge is missing.
  static IntegralOrientation FromArcs(const Graph& g,
                                      std::span<const std::pair<VertexId, VertexId>> arcs);
  std::vector<std::pair<VertexId, VertexId>> Arcs(const Graph& g) const;
};

struct VerificationReport {
  bool is_proper = false;
  int max_outdegree = 0;
  std::vector<Edge> violations;  // edges whose endpoints share an outdegree
  bool bound_respected = false;
  int bound = 0;
};

// Checks that adjacent vertices get distinct outdegrees and that every
// outdegree is at most `bound`.
VerificationReport VerifyProperOrientation(const Graph& g, const IntegralOrientation& o,
                                           int bound);

// Smallest-last (degeneracy) order, then lowest free color in reverse
// removal order. Uses at most degeneracy+1 classes.
VertexPartition GreedyPartition(const Graph& g);

// BFS 2-coloring (lowest uncolored id seeds each component with class 1).
std::optional<VertexPartition> TwoColoring(const Graph& g);

// Smallest-last elimination order; ties broken by lowest id.
std::vector<VertexId> SmallestLastOrder(const Graph& g, int* degeneracy = nullptr);

bool IsConnected(const Graph& g);
bool IsForest(const Graph& g);

// ---- Text formats --------------------------------------------------------

struct ParsedGraph {
  Graph graph;
  int duplicate_edges = 0;
};

// Edge-list document: one "u v" pair per line, '#' starts a comment, labels
// are arbitrary whitespace-free tokens. A line holding a single label
// declares an (possibly isolated) vertex. Labels get dense ids in order of
// first appearance. Duplicate edges are collapsed and counted; self-loops
// are a ParseError.
ParsedGraph ParseGraph(std::string_view text);
std::string SerializeGraph(const Graph& g);

// "v c" lines, c in 1..r; labels resolved against g. r is the largest class
// index seen.
VertexPartition ParsePartition(const Graph& g, std::string_view text);
std::string SerializePartition(const Graph& g, const VertexPartition& p);

// "u v" lines meaning u -> v.
IntegralOrientation ParseOrientation(const Graph& g, std::string_view text);
std::string SerializeOrientation(const Graph& g, const IntegralOrientation& o);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace porient

#endif  // PORIENT_GRAPH_H_
