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

#include "porient/indset.h"

#include <algorithm>
#include <numeric>

#include "porient/error.h"
#include "porient/hall.h"

namespace porient {

namespace {

// Hall instance for protected part s: left X∩V_s with weight 1, right
// A∖V_s with its weight. Fills the local index maps.
HallInstance BuildPartHall(const SelectionInstance& inst, const std::vector<uint8_t>& sel, int s,
                           std::vector<int>* left, std::vector<int>* right) {
  const int n = inst.size();
  left->clear();
  right->clear();
  std::vector<int> right_pos(n, -1);
  for (int v = 0; v < n; ++v) {
    if (sel[v] && inst.part[v] != s) {
      right_pos[v] = static_cast<int>(right->size());
      right->push_back(v);
    } else if (!sel[v] && inst.part[v] == s) {
      left->push_back(v);
    }
  }
  HallInstance h;
  h.left_weight.assign(left->size(), 1);
  for (int v : *right) h.right_weight.push_back(inst.weight[v]);
  for (size_t a = 0; a < left->size(); ++a) {
    for (int u : inst.adjacency[(*left)[a]]) {
      if (right_pos[u] >= 0) h.edges.emplace_back(static_cast<int>(a), right_pos[u]);
    }
  }
  return h;
}

int ProtectedNeighbors(const SelectionInstance& inst, const std::vector<uint8_t>& sel, int x) {
  int c = 0;
  for (int u : inst.adjacency[x]) {
    if (sel[u] && inst.role[u] == CandidateRole::kProtected) ++c;
  }
  return c;
}

bool HasSelectedNeighbor(const SelectionInstance& inst, const std::vector<uint8_t>& sel, int x) {
  for (int u : inst.adjacency[x]) {
    if (sel[u]) return true;
  }
  return false;
}

}  // namespace

SelectionInstance MakeSelectionInstance(const Graph& g, const VertexPartition& part,
                                        std::vector<VertexId> candidates,
                                        std::vector<int64_t> weights, int focus_part,
                                        std::vector<int> protected_parts,
                                        std::vector<VertexId> seed) {
  if (candidates.size() != weights.size()) throw PreconditionError("one weight per candidate");
  SelectionInstance inst;
  std::vector<size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return candidates[a] < candidates[b]; });
  std::vector<int> local(g.num_vertices(), -1);
  for (size_t i : order) {
    local[candidates[i]] = inst.size();
    inst.vertices.push_back(candidates[i]);
    inst.weight.push_back(weights[i]);
  }
  for (VertexId v : inst.vertices) {
    int p = part.class_of[v];
    inst.part.push_back(p);
    if (p == focus_part) {
      inst.role.push_back(CandidateRole::kFocus);
    } else if (std::find(protected_parts.begin(), protected_parts.end(), p) !=
               protected_parts.end()) {
      inst.role.push_back(CandidateRole::kProtected);
    } else {
      inst.role.push_back(CandidateRole::kOther);
    }
    std::vector<int> adj;
    for (const Incidence& inc : g.incident(v)) {
      if (local[inc.neighbor] >= 0) adj.push_back(local[inc.neighbor]);
    }
    inst.adjacency.push_back(std::move(adj));
  }
  for (VertexId s : seed) {
    for (const Incidence& inc : g.incident(s)) {
      if (local[inc.neighbor] >= 0) {
        throw PreconditionError("seed vertex " + g.label(s) + " is adjacent to candidate " +
                                g.label(inc.neighbor));
      }
    }
  }
  inst.protected_parts = std::move(protected_parts);
  inst.seed = std::move(seed);
  return inst;
}

std::vector<VertexId> SelectionResult::Members(const SelectionInstance& inst) const {
  std::vector<VertexId> out;
  for (int v = 0; v < inst.size(); ++v) {
    if (selected[v]) out.push_back(inst.vertices[v]);
  }
  return out;
}

SelectionKey KeyOf(const SelectionInstance& inst, const std::vector<uint8_t>& selected) {
  SelectionKey key;
  for (int v = 0; v < inst.size(); ++v) {
    if (!selected[v]) continue;
    key.weight += inst.weight[v];
    key.focus_count += inst.role[v] == CandidateRole::kFocus;
    ++key.size;
  }
  return key;
}

SelectionResult SelectIndependentSet(const SelectionInstance& inst,
                                     const SelectionOptions& options) {
  const int n = inst.size();
  SelectionResult res;
  std::vector<uint8_t>& sel = res.selected;
  sel.assign(n, 0);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    bool fa = inst.role[a] == CandidateRole::kFocus, fb = inst.role[b] == CandidateRole::kFocus;
    if (fa != fb) return fa;
    return inst.weight[a] > inst.weight[b];
  });
  for (int v : order) {
    if (!HasSelectedNeighbor(inst, sel, v)) sel[v] = 1;
  }

  int64_t max_w = 0;
  for (int64_t w : inst.weight) max_w = std::max(max_w, w);
  long cap = options.iteration_cap;
  if (cap <= 0) cap = (static_cast<long>(n) * max_w + 1) * (n + 1) * (n + 1);

  SelectionKey key = KeyOf(inst, sel);
  std::vector<int> left, right;
  while (true) {
    bool fired = false;
    for (int s : inst.protected_parts) {
      HallInstance h = BuildPartHall(inst, sel, s, &left, &right);
      HallOutcome out = SolveHall(h);
      if (out.success) continue;
      for (int a : out.witness) {
        for (int u : inst.adjacency[left[a]]) sel[u] = 0;
      }
      for (int a : out.witness) sel[left[a]] = 1;
      ++res.hall_exchanges;
      fired = true;
      break;
    }
    if (!fired) {
      for (int x = 0; x < n && !fired; ++x) {
        if (sel[x] || inst.role[x] != CandidateRole::kFocus) continue;
        if (ProtectedNeighbors(inst, sel, x) >= inst.weight[x] + 1) continue;
        int64_t lost = 0;
        for (int u : inst.adjacency[x]) {
          if (sel[u]) lost += inst.weight[u];
        }
        if (inst.weight[x] < lost) continue;
        for (int u : inst.adjacency[x]) sel[u] = 0;
        sel[x] = 1;
        ++res.focus_exchanges;
        fired = true;
      }
    }
    if (!fired) {
      for (int x = 0; x < n && !fired; ++x) {
        if (sel[x] || HasSelectedNeighbor(inst, sel, x)) continue;
        sel[x] = 1;
        ++res.additions;
        fired = true;
      }
    }
    if (!fired) break;
    SelectionKey next = KeyOf(inst, sel);
    if (!(next > key)) throw InvariantError("selector exchange did not raise the key");
    key = next;
    if (++res.iterations > cap) throw InvariantError("selector exceeded its iteration cap");
  }
  res.key = key;
  return res;
}

SelectionResult SelectIndependentSetExact(const SelectionInstance& inst) {
  const int n = inst.size();
  if (n > 30) throw BudgetExceeded("exact selection is limited to 30 candidates");
  const int64_t base = n + 1;
  std::vector<int64_t> value(n);
  for (int v = 0; v < n; ++v) {
    value[v] = inst.weight[v] * base * base +
               (inst.role[v] == CandidateRole::kFocus ? base : 0) + 1;
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return value[a] > value[b]; });
  std::vector<uint32_t> nbr(n, 0);  // in order positions
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (int i = 0; i < n; ++i) {
    for (int u : inst.adjacency[order[i]]) nbr[i] |= 1u << pos[u];
  }

  int64_t best = -1;
  uint32_t best_set = 0;
  auto recurse = [&](auto&& self, uint32_t avail, uint32_t chosen, int64_t val) -> void {
    if (avail == 0) {
      if (val > best) {
        best = val;
        best_set = chosen;
      }
      return;
    }
    int64_t bound = val;
    for (uint32_t m = avail; m; m &= m - 1) bound += value[order[__builtin_ctz(m)]];
    if (bound <= best) return;
    int i = __builtin_ctz(avail);
    uint32_t rest = avail & ~(1u << i);
    self(self, rest & ~nbr[i], chosen | (1u << i), val + value[order[i]]);
    self(self, rest, chosen, val);
  };
  recurse(recurse, (1u << n) - 1, 0u, 0);

  SelectionResult res;
  res.selected.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    if (best_set >> i & 1u) res.selected[order[i]] = 1;
  }
  res.key = KeyOf(inst, res.selected);
  return res;
}

CertificateReport VerifyCertificates(const SelectionInstance& inst,
                                     const std::vector<uint8_t>& selected) {
  CertificateReport rep;
  const int n = inst.size();
  auto name = [&](int v) { return std::to_string(inst.vertices[v]); };
  for (int v = 0; v < n; ++v) {
    if (!selected[v]) continue;
    for (int u : inst.adjacency[v]) {
      if (u > v && selected[u]) {
        rep.independent = false;
        rep.failures.push_back("selected vertices " + name(v) + " and " + name(u) +
                               " are adjacent");
      }
    }
  }
  std::vector<int> left, right;
  for (int s : inst.protected_parts) {
    HallInstance h = BuildPartHall(inst, selected, s, &left, &right);
    HallOutcome out = SolveHall(h);
    if (!out.success || !IsValidHallSubgraph(h, out.chosen)) {
      rep.hall = false;
      rep.failures.push_back("Hall condition fails for part " + std::to_string(s));
    }
  }
  for (int x = 0; x < n; ++x) {
    if (selected[x]) continue;
    if (inst.role[x] == CandidateRole::kFocus &&
        ProtectedNeighbors(inst, selected, x) < inst.weight[x] + 1) {
      rep.protected_cover = false;
      rep.failures.push_back("focus vertex " + name(x) + " has too few protected neighbors in A");
    }
    if (!HasSelectedNeighbor(inst, selected, x)) {
      rep.dominating = false;
      rep.failures.push_back("vertex " + name(x) + " has no neighbor in A");
    }
  }
  return rep;
}

}  // namespace porient
