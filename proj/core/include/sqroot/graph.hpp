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

// Undirected simple graphs with stable vertex labels, plus the structural
// primitives the solvers are built from: squares, connectivity, simplicial
// vertices and twin classes.

#ifndef SQROOT_GRAPH_HPP_
#define SQROOT_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <vector>

namespace sqroot {

using Vertex = std::int32_t;
using VertexSet = std::set<Vertex>;

// Unordered pair of distinct vertices, stored smaller label first so that
// two edges compare equal iff they have the same endpoints.
class Edge {
 public:
  Edge(Vertex a, Vertex b);

  Vertex u() const { return u_; }
  Vertex v() const { return v_; }

  bool has_endpoint(Vertex x) const { return x == u_ || x == v_; }
  // The endpoint that is not `x`; `x` must be an endpoint.
  Vertex other(Vertex x) const;

  auto operator<=>(const Edge&) const = default;

 private:
  Vertex u_;
  Vertex v_;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

using EdgeSet = std::set<Edge>;

class Graph {
 public:
  Graph() = default;
  // Vertices 0..n-1, no edges.
  explicit Graph(std::size_t n);
  // Vertices 0..n-1 and the given edges.
  Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  // Same vertex labels as `like`, with the given edges only.
  static Graph spanning(const Graph& like, std::span<const Edge> edges);

  void add_vertex(Vertex v);
  // Removes `v` and its incident edges. Other labels are untouched.
  void remove_vertex(Vertex v);
  // Returns false if the edge was already present.
  bool add_edge(Vertex a, Vertex b);
  bool add_edge(const Edge& e) { return add_edge(e.u(), e.v()); }
  bool remove_edge(Vertex a, Vertex b);
  bool remove_edge(const Edge& e) { return remove_edge(e.u(), e.v()); }

  bool has_vertex(Vertex v) const { return adjacency_.contains(v); }
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u(), e.v()); }

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return adjacency_.empty(); }

  const VertexSet& neighbors(Vertex v) const;
  VertexSet closed_neighborhood(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  // Ascending labels.
  std::vector<Vertex> vertices() const;
  VertexSet vertex_set() const;
  // Canonical edges in lexicographic order.
  std::vector<Edge> edges() const;

  bool same_vertices(const Graph& other) const;
  bool is_clique(const VertexSet& vs) const;
  bool is_complete() const;

  Graph induced(const VertexSet& keep) const;
  Graph without(const VertexSet& drop) const;

  const std::map<Vertex, VertexSet>& adjacency() const { return adjacency_; }

  bool operator==(const Graph& other) const = default;

 private:
  VertexSet& mutable_neighbors(Vertex v);

  std::map<Vertex, VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Graph& g);

struct ConnectivityProfile {
  bool is_connected = false;
  bool is_two_connected = false;
  std::vector<VertexSet> components;  // ordered by smallest member
};

// u,v adjacent in the result iff 1 <= dist_g(u,v) <= 2.
Graph compute_square(const Graph& g);

// Throws InputError if the vertex sets differ.
bool is_square_root(const Graph& h, const Graph& g);

ConnectivityProfile connectivity_profile(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Single-source BFS distances; unreachable vertices are absent.
std::map<Vertex, std::size_t> bfs_distances(const Graph& g, Vertex source);

// Vertices whose open neighbourhood is a clique.
VertexSet simplicial_vertices(const Graph& g);

// Partition of `s` into classes of true twins (equal closed neighbourhoods),
// ordered by smallest member.
std::vector<VertexSet> true_twin_partition(const Graph& g, const VertexSet& s);

// True iff no path of g - sep joins `from` and `to`.
bool separates(const Graph& g, const VertexSet& sep, const VertexSet& from,
               const VertexSet& to);
// Separator that stops separating when any single vertex is dropped.
bool is_minimal_separator(const Graph& g, const VertexSet& sep,
                          const VertexSet& from, const VertexSet& to);

}  // namespace sqroot

#endif  // SQROOT_GRAPH_HPP_
