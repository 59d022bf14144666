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

#include "sqroot/maxroot.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sqroot/errors.hpp"

namespace sqroot {

std::size_t AuxGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adjacency) twice += nbrs.size();
  return twice / 2;
}

bool AuxGraph::adjacent(int a, int b) const {
  const auto& nbrs = adjacency.at(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

int AuxGraph::index_of(const Edge& e) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) {
    throw InputError("edge is not a vertex of the auxiliary graph");
  }
  return static_cast<int>(it - edges.begin());
}

AuxGraph build_aux_graph(const Graph& g) {
  AuxGraph p;
  p.edges = g.edges();
  p.adjacency.resize(p.edges.size());
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const Edge& e = p.edges[i];
    for (const auto& [y, x] : {std::pair{e.u(), e.v()}, std::pair{e.v(), e.u()}}) {
      for (Vertex z : g.neighbors(y)) {
        if (z != x && !g.has_edge(x, z)) {
          p.adjacency[i].push_back(p.index_of(Edge(y, z)));
        }
      }
    }
    std::sort(p.adjacency[i].begin(), p.adjacency[i].end());
  }
  return p;
}

bool check_root_charact(const Graph& h, const Graph& g, const AuxGraph& p) {
  if (!h.same_vertices(g)) {
    throw InputError("check_root_charact: vertex sets differ");
  }
  if (p.vertex_count() != g.edge_count()) {
    throw InputError("check_root_charact: auxiliary graph does not match");
  }
  std::vector<char> in_h(p.vertex_count(), 0);
  for (const Edge& e : h.edges()) {
    if (!g.has_edge(e)) {
      throw InputError("check_root_charact: h is not a subgraph of g");
    }
    in_h[p.index_of(e)] = 1;
  }
  for (std::size_t i = 0; i < p.vertex_count(); ++i) {
    if (!in_h[i]) continue;
    for (int j : p.adjacency[i]) {
      if (in_h[j]) return false;
    }
  }
  for (const Edge& e : p.edges) {
    if (h.has_edge(e)) continue;
    const VertexSet& nu = h.neighbors(e.u());
    const VertexSet& nv = h.neighbors(e.v());
    if (std::none_of(nu.begin(), nu.end(),
                     [&](Vertex w) { return nv.contains(w); })) {
      return false;
    }
  }
  return true;
}

Prefilter aingworth_prefilter(const Graph& g, int k) {
  const auto comps = connected_components(g);
  if (comps.size() > 1) throw DisconnectedInputError(comps.size());
  if (g.is_complete()) return Prefilter::kTrivialYes;
  const auto n = static_cast<long long>(g.vertex_count());
  return k < n - 2 ? Prefilter::kReject : Prefilter::kPass;
}

namespace {

// Bron-Kerbosch with pivoting, run on the complement of p.
class MisEnumerator {
 public:
  MisEnumerator(const AuxGraph& p,
                const std::function<void(const std::vector<int>&)>& visit)
      : p_(p), visit_(visit), matrix_(p.vertex_count(),
                                      std::vector<char>(p.vertex_count(), 0)) {
    for (std::size_t i = 0; i < p.vertex_count(); ++i) {
      for (int j : p.adjacency[i]) matrix_[i][j] = 1;
    }
  }

  std::uint64_t run() {
    std::vector<int> all(p_.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> chosen;
    expand(chosen, std::move(all), {});
    return count_;
  }

 private:
  // Whether b is outside the independent-set neighbourhood of a.
  bool blocks(int a, int b) const { return a == b || matrix_[a][b]; }

  void expand(std::vector<int>& chosen, std::vector<int> cand,
              std::vector<int> done) {
    if (cand.empty()) {
      if (done.empty()) {
        std::vector<int> out = chosen;
        std::sort(out.begin(), out.end());
        ++count_;
        visit_(out);
      }
      return;
    }
    int pivot = -1;
    std::size_t best = SIZE_MAX;
    for (const auto* pool : {&cand, &done}) {
      for (int u : *pool) {
        const auto hits = static_cast<std::size_t>(std::count_if(
            cand.begin(), cand.end(), [&](int v) { return blocks(u, v); }));
        if (hits < best) {
          best = hits;
          pivot = u;
        }
      }
    }
    std::vector<int> branch;
    for (int v : cand) {
      if (blocks(pivot, v)) branch.push_back(v);
    }
    for (int v : branch) {
      std::vector<int> next_cand;
      std::vector<int> next_done;
      for (int w : cand) {
        if (!blocks(v, w)) next_cand.push_back(w);
      }
      for (int w : done) {
        if (!blocks(v, w)) next_done.push_back(w);
      }
      chosen.push_back(v);
      expand(chosen, std::move(next_cand), std::move(next_done));
      chosen.pop_back();
      cand.erase(std::find(cand.begin(), cand.end(), v));
      done.insert(std::upper_bound(done.begin(), done.end(), v), v);
    }
  }

  const AuxGraph& p_;
  const std::function<void(const std::vector<int>&)>& visit_;
  std::vector<std::vector<char>> matrix_;
  std::uint64_t count_ = 0;
};

struct Best {
  std::optional<std::vector<Edge>> edges;

  // Prefers more edges, then the lexicographically smaller edge list.
  void offer(std::vector<Edge> cand) {
    if (!edges || cand.size() > edges->size() ||
        (cand.size() == edges->size() && cand < *edges)) {
      edges = std::move(cand);
    }
  }
};

class CoverBranching {
 public:
  CoverBranching(const Graph& comp, int k, MaxRootStats& stats)
      : g_(comp), p_(build_aux_graph(comp)), k_(k), stats_(stats),
        chosen_(p_.vertex_count(), 0) {}

  std::optional<std::vector<Edge>> run() {
    std::uint64_t leaves = 0;
    branch(0, leaves);
    stats_.leaves = std::max(stats_.leaves, leaves);
    return best_.edges;
  }

 private:
  // Lexicographically smallest P-edge with neither end chosen.
  std::optional<std::pair<int, int>> uncovered() const {
    for (std::size_t i = 0; i < p_.vertex_count(); ++i) {
      if (chosen_[i]) continue;
      for (int j : p_.adjacency[i]) {
        if (j > static_cast<int>(i) && !chosen_[j]) {
          return std::pair{static_cast<int>(i), j};
        }
      }
    }
    return std::nullopt;
  }

  void branch(int depth, std::uint64_t& leaves) {
    ++stats_.nodes;
    if (best_.edges &&
        p_.vertex_count() - static_cast<std::size_t>(depth) < best_.edges->size()) {
      ++leaves;
      return;
    }
    const auto edge = uncovered();
    if (!edge) {
      ++leaves;
      std::vector<Edge> kept;
      for (std::size_t i = 0; i < p_.vertex_count(); ++i) {
        if (!chosen_[i]) kept.push_back(p_.edges[i]);
      }
      if (check_root_charact(Graph::spanning(g_, kept), g_, p_)) {
        best_.offer(std::move(kept));
      }
      return;
    }
    if (depth == k_) {
      ++leaves;
      return;
    }
    for (int pick : {edge->first, edge->second}) {
      chosen_[pick] = 1;
      branch(depth + 1, leaves);
      chosen_[pick] = 0;
    }
  }

  const Graph& g_;
  AuxGraph p_;
  int k_;
  MaxRootStats& stats_;
  std::vector<char> chosen_;
  Best best_;
};

std::optional<std::vector<Edge>> exact_component(const Graph& comp,
                                                 MaxRootStats& stats) {
  const AuxGraph p = build_aux_graph(comp);
  Best best;
  stats.independent_sets += enumerate_maximal_independent_sets(
      p, [&](const std::vector<int>& set) {
        if (best.edges && set.size() < best.edges->size()) return;
        std::vector<Edge> kept;
        kept.reserve(set.size());
        for (int i : set) kept.push_back(p.edges[i]);
        if (check_root_charact(Graph::spanning(comp, kept), comp, p)) {
          best.offer(std::move(kept));
        }
      });
  return best.edges;
}

RootSolution assemble(const Graph& g, const std::vector<Edge>& kept) {
  Graph root = Graph::spanning(g, kept);
  if (!is_square_root(root, g)) {
    throw InvariantError("maxroot: produced root failed verification");
  }
  const std::size_t m = root.edge_count();
  return RootSolution{std::move(root), m, g.edge_count() - m, std::nullopt};
}

}  // namespace

std::uint64_t enumerate_maximal_independent_sets(
    const AuxGraph& p, const std::function<void(const std::vector<int>&)>& visit) {
  return MisEnumerator(p, visit).run();
}

std::optional<RootSolution> max_root_fpt(const Graph& g, int k,
                                         MaxRootStats* stats) {
  if (k < 0) throw InputError("k must be non-negative");
  MaxRootStats local;
  MaxRootStats& st = stats ? *stats : local;
  st = {};

  std::vector<Edge> kept;
  std::size_t deletions = 0;
  for (const VertexSet& vs : connected_components(g)) {
    const Graph comp = g.induced(vs);
    const std::vector<Edge> comp_edges = comp.edges();
    switch (aingworth_prefilter(comp, k)) {
      case Prefilter::kTrivialYes:
        kept.insert(kept.end(), comp_edges.begin(), comp_edges.end());
        continue;
      case Prefilter::kReject:
        return std::nullopt;
      case Prefilter::kPass:
        break;
    }
    auto found = CoverBranching(comp, k, st).run();
    if (!found) return std::nullopt;
    deletions += comp_edges.size() - found->size();
    if (deletions > static_cast<std::size_t>(k)) return std::nullopt;
    kept.insert(kept.end(), found->begin(), found->end());
  }
  std::sort(kept.begin(), kept.end());
  return assemble(g, kept);
}

std::optional<RootSolution> max_root_exact(const Graph& g, MaxRootStats* stats) {
  MaxRootStats local;
  MaxRootStats& st = stats ? *stats : local;
  st = {};

  std::vector<Edge> kept;
  for (const VertexSet& vs : connected_components(g)) {
    const Graph comp = g.induced(vs);
    if (comp.is_complete()) {
      const auto e = comp.edges();
      kept.insert(kept.end(), e.begin(), e.end());
      continue;
    }
    auto found = exact_component(comp, st);
    if (!found) return std::nullopt;
    kept.insert(kept.end(), found->begin(), found->end());
  }
  std::sort(kept.begin(), kept.end());
  return assemble(g, kept);
}

}  // namespace sqroot
