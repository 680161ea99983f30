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

#include "porient/hall.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "porient/error.h"

namespace porient {

namespace {

// Residual network with paired arcs; arc i ^ 1 is the reverse of arc i.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : head_(n, -1) {}

  int AddArc(int from, int to, int64_t cap) {
    int id = static_cast<int>(to_.size());
    Push(from, to, cap);
    Push(to, from, 0);
    return id;
  }

  int64_t MaxFlow(int s, int t) {
    int64_t total = 0;
    std::vector<int> via(head_.size());
    while (true) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> queue{s};
      via[s] = -2;
      while (!queue.empty() && via[t] == -1) {
        int x = queue.front();
        queue.pop_front();
        for (int a = head_[x]; a >= 0; a = next_[a]) {
          if (cap_[a] > 0 && via[to_[a]] == -1) {
            via[to_[a]] = a;
            queue.push_back(to_[a]);
          }
        }
      }
      if (via[t] == -1) return total;
      int64_t bottleneck = std::numeric_limits<int64_t>::max();
      for (int x = t; x != s; x = to_[via[x] ^ 1]) bottleneck = std::min(bottleneck, cap_[via[x]]);
      for (int x = t; x != s; x = to_[via[x] ^ 1]) {
        cap_[via[x]] -= bottleneck;
        cap_[via[x] ^ 1] += bottleneck;
      }
      total += bottleneck;
    }
  }

  std::vector<uint8_t> Reachable(int s) const {
    std::vector<uint8_t> seen(head_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int a = head_[x]; a >= 0; a = next_[a]) {
        if (cap_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = 1;
          stack.push_back(to_[a]);
        }
      }
    }
    return seen;
  }

  int64_t Flow(int arc) const { return cap_[arc ^ 1]; }

 private:
  void Push(int from, int to, int64_t cap) {
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[from]);
    head_[from] = static_cast<int>(to_.size()) - 1;
  }

  std::vector<int> head_;
  std::vector<int> to_;
  std::vector<int64_t> cap_;
  std::vector<int> next_;
};

}  // namespace

HallOutcome SolveHall(const HallInstance& inst) {
  const int nl = static_cast<int>(inst.left_weight.size());
  const int nr = static_cast<int>(inst.right_weight.size());
  int64_t demand = 0;
  for (int64_t w : inst.left_weight) {
    if (w < 0) throw PreconditionError("negative Hall weight");
    demand += w;
  }
  for (int64_t w : inst.right_weight) {
    if (w < 0) throw PreconditionError("negative Hall weight");
  }
  for (const auto& [a, b] : inst.edges) {
    if (a < 0 || a >= nl || b < 0 || b >= nr) throw PreconditionError("Hall edge out of range");
    if (inst.left_weight[a] != 1 && inst.right_weight[b] != 1) {
      throw PreconditionError("Hall side condition violated on edge (" + std::to_string(a) + ", " +
                              std::to_string(b) + "): neither endpoint has weight 1");
    }
  }
  // Node layout: source, left, right, sink. Middle arcs are uncapacitated;
  // the side condition already limits each of them to one unit, and an
  // infinite middle makes the min cut's left part a Hall witness.
  const int s = 0, t = nl + nr + 1;
  FlowNetwork net(nl + nr + 2);
  const int64_t inf = demand + 1;
  for (int a = 0; a < nl; ++a) net.AddArc(s, 1 + a, inst.left_weight[a]);
  std::vector<int> mid(inst.edges.size());
  for (size_t i = 0; i < inst.edges.size(); ++i) {
    mid[i] = net.AddArc(1 + inst.edges[i].first, 1 + nl + inst.edges[i].second, inf);
  }
  for (int b = 0; b < nr; ++b) net.AddArc(1 + nl + b, t, inst.right_weight[b]);

  HallOutcome out;
  if (net.MaxFlow(s, t) == demand) {
    out.success = true;
    for (size_t i = 0; i < inst.edges.size(); ++i) {
      int64_t f = net.Flow(mid[i]);
      if (f > 1) throw InvariantError("Hall subgraph uses an edge twice");
      if (f == 1) out.chosen.push_back(static_cast<int>(i));
    }
    return out;
  }
  std::vector<uint8_t> reach = net.Reachable(s);
  for (int a = 0; a < nl; ++a) {
    if (reach[1 + a]) out.witness.push_back(a);
  }
  return out;
}

bool IsValidHallSubgraph(const HallInstance& inst, const std::vector<int>& chosen) {
  std::vector<int64_t> dl(inst.left_weight.size(), 0), dr(inst.right_weight.size(), 0);
  std::vector<uint8_t> used(inst.edges.size(), 0);
  for (int i : chosen) {
    if (i < 0 || i >= static_cast<int>(inst.edges.size()) || used[i]) return false;
    used[i] = 1;
    ++dl[inst.edges[i].first];
    ++dr[inst.edges[i].second];
  }
  for (size_t a = 0; a < dl.size(); ++a) {
    if (dl[a] != inst.left_weight[a]) return false;
  }
  for (size_t b = 0; b < dr.size(); ++b) {
    if (dr[b] > inst.right_weight[b]) return false;
  }
  return true;
}

bool IsHallViolation(const HallInstance& inst, const std::vector<int>& witness) {
  std::vector<uint8_t> in_s(inst.left_weight.size(), 0), in_n(inst.right_weight.size(), 0);
  int64_t ws = 0, wn = 0;
  for (int a : witness) {
    if (!in_s[a]) ws += inst.left_weight[a];
    in_s[a] = 1;
  }
  for (const auto& [a, b] : inst.edges) {
    if (in_s[a]) in_n[b] = 1;
  }
  for (size_t b = 0; b < in_n.size(); ++b) {
    if (in_n[b]) wn += inst.right_weight[b];
  }
  return ws > wn;
}

}  // namespace porient
