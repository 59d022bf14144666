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

// Tree square roots.
//
// Let T be a tree with T^2 = G, n >= 3 and G not complete (so T is not a
// star). Every internal vertex of T then has an internal neighbour and is
// therefore not simplicial in G, while leaves are; so the simplicial vertices
// of G are exactly the leaves of T.
//
// For a tree edge ux the common G-neighbours of u and x (other than u, x)
// split as N_T(u) - x plus N_T(x) - u. Knowing N_T[u] thus gives
//   N_T(x) = {u} + (N_G(u) & N_G(x)) - N_T[u],
// and one known closed neighbourhood determines the whole tree by BFS. A leaf
// l has N_T[l] = {l, w}; we fix l as the smallest simplicial vertex and try
// each candidate w. Every candidate is verified, so a returned tree is always
// a root, and the true T is rebuilt for the right w.

#include <deque>
#include <iterator>
#include <optional>

#include "sqroot/errors.hpp"
#include "sqroot/minroot.hpp"

namespace sqroot {
namespace {

std::optional<Graph> grow_tree(const Graph& g, Vertex leaf, Vertex anchor) {
  std::map<Vertex, VertexSet> tree_nbrs{{leaf, {anchor}}};
  VertexSet reached{leaf, anchor};
  Graph tree = Graph::spanning(g, {});
  tree.add_edge(leaf, anchor);

  std::deque<std::pair<Vertex, Vertex>> frontier{{leaf, anchor}};
  while (!frontier.empty()) {
    const auto [parent, x] = frontier.front();
    frontier.pop_front();

    VertexSet parent_closed = tree_nbrs.at(parent);
    parent_closed.insert(parent);
    VertexSet nx{parent};
    const VertexSet& gx = g.neighbors(x);
    for (Vertex w : g.neighbors(parent)) {
      if (w != x && gx.contains(w) && !parent_closed.contains(w)) {
        nx.insert(w);
      }
    }
    for (Vertex y : nx) {
      if (y == parent) continue;
      if (!reached.insert(y).second) return std::nullopt;
      tree.add_edge(x, y);
      frontier.emplace_back(x, y);
    }
    tree_nbrs.emplace(x, std::move(nx));
  }

  if (reached.size() != g.vertex_count() ||
      tree.edge_count() + 1 != g.vertex_count()) {
    return std::nullopt;
  }
  if (compute_square(tree) != g) return std::nullopt;
  return tree;
}

}  // namespace

std::optional<Graph> has_tree_square_root(const Graph& g) {
  const auto comps = connected_components(g);
  if (comps.size() > 1) throw DisconnectedInputError(comps.size());

  if (g.vertex_count() <= 2) return g;
  if (g.is_complete()) {
    Graph star = Graph::spanning(g, {});
    const auto vs = g.vertices();
    for (auto it = std::next(vs.begin()); it != vs.end(); ++it) {
      star.add_edge(vs.front(), *it);
    }
    return star;
  }

  const VertexSet simplicial = simplicial_vertices(g);
  if (simplicial.empty()) return std::nullopt;
  const Vertex leaf = *simplicial.begin();
  for (Vertex anchor : g.neighbors(leaf)) {
    if (auto tree = grow_tree(g, leaf, anchor)) return tree;
  }
  return std::nullopt;
}

}  // namespace sqroot
