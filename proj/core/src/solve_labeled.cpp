// Copyright 2026 The sqroot Authors
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

// Exact search for a solution of a labeled instance.
//
// A spanning subgraph H of G has H^2 = G iff
//   (a) two H-edges xy, yz never have xz missing from G, and
//   (b) every G-edge uv is an H-edge or has some w with uw, wv in H.
// The search decides every G-edge IN or OUT. Taking an edge forces out all
// edges that would break (a); each G-edge gives a constraint (b) whose
// options are the direct edge or a two-edge detour. Constraints with a single
// live option are propagated; otherwise we branch on the tightest one.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "sqroot/minroot.hpp"

namespace sqroot {
namespace {

enum class State : std::uint8_t { kUndecided, kIn, kOut };

struct Option {
  int a;
  int b;  // -1 for the direct edge
};

class LabeledSearch {
 public:
  explicit LabeledSearch(const LabeledInstance& inst)
      : inst_(inst), edges_(inst.graph.edges()) {
    const Graph& g = inst.graph;
    conflicts_.resize(edges_.size());
    constraints_.resize(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Vertex u = edges_[i].u();
      const Vertex v = edges_[i].v();
      for (const auto& [y, x] : {std::pair{u, v}, std::pair{v, u}}) {
        for (Vertex z : g.neighbors(y)) {
          if (z != x && !g.has_edge(x, z)) conflicts_[i].push_back(index(y, z));
        }
      }
      constraints_[i].push_back({static_cast<int>(i), -1});
      for (Vertex w : g.neighbors(u)) {
        if (g.has_edge(w, v)) constraints_[i].push_back({index(u, w), index(w, v)});
      }
    }
    const std::size_t n = g.vertex_count();
    budget_ = n == 0 ? 0 : n - 1 + static_cast<std::size_t>(std::max(inst.k, 0));
  }

  std::optional<Graph> run() {
    std::vector<State> st(edges_.size(), State::kUndecided);
    for (const Edge& e : inst_.blocked) {
      if (inst_.graph.has_edge(e.u(), e.v())) st[index(e.u(), e.v())] = State::kOut;
    }
    for (const auto& [e, _] : inst_.required) {
      if (!inst_.graph.has_edge(e.u(), e.v())) return std::nullopt;
      if (!take(st, index(e.u(), e.v()))) return std::nullopt;
    }
    if (!search(st)) return std::nullopt;
    std::vector<Edge> chosen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (st[i] == State::kIn) chosen.push_back(edges_[i]);
    }
    return Graph::spanning(inst_.graph, chosen);
  }

 private:
  int index(Vertex a, Vertex b) const {
    const Edge e(a, b);
    return static_cast<int>(std::lower_bound(edges_.begin(), edges_.end(), e) -
                            edges_.begin());
  }

  bool take(std::vector<State>& st, int i) const {
    if (st[i] == State::kIn) return true;
    if (st[i] == State::kOut) return false;
    st[i] = State::kIn;
    for (int j : conflicts_[i]) {
      if (st[j] == State::kIn) return false;
      st[j] = State::kOut;
    }
    return true;
  }

  bool alive(const std::vector<State>& st, const Option& o) const {
    return st[o.a] != State::kOut && (o.b < 0 || st[o.b] != State::kOut);
  }
  bool met(const std::vector<State>& st, const Option& o) const {
    return st[o.a] == State::kIn && (o.b < 0 || st[o.b] == State::kIn);
  }
  bool take(std::vector<State>& st, const Option& o) const {
    return take(st, o.a) && (o.b < 0 || take(st, o.b));
  }

  // Unit propagation to a fixpoint. Returns the tightest open constraint
  // through `pick` (or -1 when all are met).
  bool propagate(std::vector<State>& st, int& pick) const {
    for (bool changed = true; changed;) {
      changed = false;
      pick = -1;
      std::size_t best = SIZE_MAX;
      for (std::size_t c = 0; c < constraints_.size(); ++c) {
        std::size_t live = 0;
        const Option* last = nullptr;
        bool satisfied = false;
        for (const Option& o : constraints_[c]) {
          if (met(st, o)) {
            satisfied = true;
            break;
          }
          if (alive(st, o)) {
            ++live;
            last = &o;
          }
        }
        if (satisfied) continue;
        if (live == 0) return false;
        if (live == 1) {
          if (!take(st, *last)) return false;
          changed = true;
          continue;
        }
        if (live < best) {
          best = live;
          pick = static_cast<int>(c);
        }
      }
    }
    return within_budget(st);
  }

  // Edges taken plus the edges still needed to join the components.
  bool within_budget(const std::vector<State>& st) const {
    std::vector<int> parent(inst_.graph.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    const std::vector<Vertex> vs = inst_.graph.vertices();
    auto pos = [&](Vertex v) {
      return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    std::size_t taken = 0;
    std::size_t comps = vs.size();
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (st[i] != State::kIn) continue;
      ++taken;
      const int a = find(pos(edges_[i].u()));
      const int b = find(pos(edges_[i].v()));
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
    return comps == 0 || taken + comps - 1 <= budget_;
  }

  bool search(std::vector<State>& st) const {
    int pick = -1;
    if (!propagate(st, pick)) return false;
    if (pick < 0) return true;
    std::vector<State> base = st;
    for (const Option& o : constraints_[pick]) {
      if (!alive(base, o)) continue;
      std::vector<State> trial = base;
      if (take(trial, o) && search(trial)) {
        st = std::move(trial);
        return true;
      }
      // Later branches may assume the direct edge is absent.
      if (o.b < 0) base[o.a] = State::kOut;
    }
    return false;
  }

  const LabeledInstance& inst_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> conflicts_;
  std::vector<std::vector<Option>> constraints_;
  std::size_t budget_ = 0;
};

}  // namespace

std::optional<Graph> solve_labeled(const LabeledInstance& inst) {
  return LabeledSearch(inst).run();
}

}  // namespace sqroot
