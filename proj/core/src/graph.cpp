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

#include "sqroot/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "sqroot/errors.hpp"

namespace sqroot {

Edge::Edge(Vertex a, Vertex b) : u_(std::min(a, b)), v_(std::max(a, b)) {
  if (a == b) {
    throw InputError("self-loop on vertex " + std::to_string(a));
  }
}

Vertex Edge::other(Vertex x) const {
  if (x == u_) return v_;
  if (x == v_) return u_;
  throw InputError("vertex " + std::to_string(x) + " is not an endpoint");
}

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << e.u() << '-' << e.v();
}

Graph::Graph(std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    adjacency_.emplace_hint(adjacency_.end(), static_cast<Vertex>(i),
                            VertexSet{});
  }
}

Graph::Graph(std::size_t n,
             std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n) {
  for (const auto& [a, b] : edges) add_edge(a, b);
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e);
  return g;
}

Graph Graph::spanning(const Graph& like, std::span<const Edge> edges) {
  Graph g;
  for (const auto& [v, _] : like.adjacency_) {
    g.adjacency_.emplace_hint(g.adjacency_.end(), v, VertexSet{});
  }
  for (const Edge& e : edges) g.add_edge(e);
  return g;
}

void Graph::add_vertex(Vertex v) {
  if (!adjacency_.emplace(v, VertexSet{}).second) {
    throw InputError("duplicate vertex " + std::to_string(v));
  }
}

void Graph::remove_vertex(Vertex v) {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) {
    throw InputError("unknown vertex " + std::to_string(v));
  }
  for (Vertex w : it->second) adjacency_.at(w).erase(v);
  edge_count_ -= it->second.size();
  adjacency_.erase(it);
}

VertexSet& Graph::mutable_neighbors(Vertex v) {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) {
    throw InputError("unknown vertex " + std::to_string(v));
  }
  return it->second;
}

bool Graph::add_edge(Vertex a, Vertex b) {
  if (a == b) throw InputError("self-loop on vertex " + std::to_string(a));
  VertexSet& na = mutable_neighbors(a);
  VertexSet& nb = mutable_neighbors(b);
  if (!na.insert(b).second) return false;
  nb.insert(a);
  ++edge_count_;
  return true;
}

bool Graph::remove_edge(Vertex a, Vertex b) {
  if (!has_edge(a, b)) return false;
  adjacency_.at(a).erase(b);
  adjacency_.at(b).erase(a);
  --edge_count_;
  return true;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  auto it = adjacency_.find(a);
  return it != adjacency_.end() && it->second.contains(b);
}

const VertexSet& Graph::neighbors(Vertex v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) {
    throw InputError("unknown vertex " + std::to_string(v));
  }
  return it->second;
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  VertexSet out = neighbors(v);
  out.insert(v);
  return out;
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(adjacency_.size());
  for (const auto& [v, _] : adjacency_) out.push_back(v);
  return out;
}

VertexSet Graph::vertex_set() const {
  VertexSet out;
  for (const auto& [v, _] : adjacency_) out.insert(out.end(), v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (const auto& [v, nbrs] : adjacency_) {
    for (auto it = nbrs.upper_bound(v); it != nbrs.end(); ++it) {
      out.emplace_back(v, *it);
    }
  }
  return out;
}

bool Graph::same_vertices(const Graph& other) const {
  return std::equal(adjacency_.begin(), adjacency_.end(),
                    other.adjacency_.begin(), other.adjacency_.end(),
                    [](const auto& a, const auto& b) {
                      return a.first == b.first;
                    });
}

bool Graph::is_clique(const VertexSet& vs) const {
  for (auto it = vs.begin(); it != vs.end(); ++it) {
    const VertexSet& nbrs = neighbors(*it);
    for (auto jt = std::next(it); jt != vs.end(); ++jt) {
      if (!nbrs.contains(*jt)) return false;
    }
  }
  return true;
}

bool Graph::is_complete() const {
  const std::size_t n = vertex_count();
  return edge_count_ == n * (n - (n > 0 ? 1 : 0)) / 2;
}

Graph Graph::induced(const VertexSet& keep) const {
  Graph g;
  for (Vertex v : keep) {
    if (!has_vertex(v)) {
      throw InputError("unknown vertex " + std::to_string(v));
    }
    g.adjacency_.emplace_hint(g.adjacency_.end(), v, VertexSet{});
  }
  for (Vertex v : keep) {
    for (Vertex w : neighbors(v)) {
      if (v < w && keep.contains(w)) g.add_edge(v, w);
    }
  }
  return g;
}

Graph Graph::without(const VertexSet& drop) const {
  Graph g = *this;
  for (Vertex v : drop) g.remove_vertex(v);
  return g;
}

std::ostream& operator<<(std::ostream& os, const Graph& g) {
  os << "Graph(n=" << g.vertex_count() << ", E={";
  bool first = true;
  for (const Edge& e : g.edges()) {
    os << (first ? "" : ", ") << e;
    first = false;
  }
  return os << "})";
}

Graph compute_square(const Graph& g) {
  Graph sq = g;
  for (const auto& [v, nbrs] : g.adjacency()) {
    for (Vertex w : nbrs) {
      for (Vertex x : g.neighbors(w)) {
        if (x > v) sq.add_edge(v, x);
      }
    }
  }
  return sq;
}

bool is_square_root(const Graph& h, const Graph& g) {
  if (!h.same_vertices(g)) {
    throw InputError("is_square_root: vertex sets differ");
  }
  if (h.edge_count() > g.edge_count()) return false;
  return compute_square(h) == g;
}

std::map<Vertex, std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::map<Vertex, std::size_t> dist{{source, 0}};
  std::deque<Vertex> queue{source};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist.emplace(w, dist[v] + 1).second) queue.push_back(w);
    }
  }
  return dist;
}

namespace {

// Components of g restricted to vertices outside `removed`.
std::vector<VertexSet> components_avoiding(const Graph& g,
                                           const VertexSet& removed) {
  std::vector<VertexSet> comps;
  VertexSet seen = removed;
  for (const auto& [start, _] : g.adjacency()) {
    if (seen.contains(start)) continue;
    VertexSet comp{start};
    seen.insert(start);
    std::deque<Vertex> queue{start};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (seen.insert(w).second) {
          comp.insert(w);
          queue.push_back(w);
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

std::vector<VertexSet> connected_components(const Graph& g) {
  return components_avoiding(g, {});
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

ConnectivityProfile connectivity_profile(const Graph& g) {
  ConnectivityProfile profile;
  profile.components = connected_components(g);
  profile.is_connected = profile.components.size() <= 1;
  if (profile.is_connected && g.vertex_count() >= 3) {
    profile.is_two_connected = true;
    for (Vertex v : g.vertices()) {
      if (components_avoiding(g, {v}).size() > 1) {
        profile.is_two_connected = false;
        break;
      }
    }
  }
  return profile;
}

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out;
  for (const auto& [v, nbrs] : g.adjacency()) {
    if (g.is_clique(nbrs)) out.insert(out.end(), v);
  }
  return out;
}

std::vector<VertexSet> true_twin_partition(const Graph& g,
                                           const VertexSet& s) {
  // Closed neighbourhoods are compared as sets, so grouping by them is an
  // exact equivalence; std::map keeps the grouping deterministic.
  std::map<VertexSet, VertexSet> classes;
  for (Vertex v : s) classes[g.closed_neighborhood(v)].insert(v);
  std::vector<VertexSet> out;
  out.reserve(classes.size());
  for (auto& [_, members] : classes) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return *a.begin() < *b.begin();
  });
  return out;
}

bool separates(const Graph& g, const VertexSet& sep, const VertexSet& from,
               const VertexSet& to) {
  VertexSet seen = sep;
  std::deque<Vertex> queue;
  for (Vertex v : from) {
    if (sep.contains(v)) continue;
    if (seen.insert(v).second) queue.push_back(v);
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    if (to.contains(v)) return false;
    for (Vertex w : g.neighbors(v)) {
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return true;
}

bool is_minimal_separator(const Graph& g, const VertexSet& sep,
                          const VertexSet& from, const VertexSet& to) {
  if (!separates(g, sep, from, to)) return false;
  for (Vertex s : sep) {
    VertexSet smaller = sep;
    smaller.erase(s);
    if (separates(g, smaller, from, to)) return false;
  }
  return true;
}

}  // namespace sqroot
