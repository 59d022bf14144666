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

// Maximum square roots: keep as many edges of G as possible.
//
// Everything here goes through the auxiliary graph P(G). Its vertices are
// the edges of G; xy and yz are adjacent when xz is not an edge of G. A
// spanning subgraph H of G is a root iff E_H is independent in P(G) and all
// G-adjacent pairs are within distance 2 in H. Deleting edges from G is
// therefore vertex cover on P(G) plus a distance check.

#ifndef SQROOT_MAXROOT_HPP_
#define SQROOT_MAXROOT_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sqroot/graph.hpp"
#include "sqroot/solution.hpp"

namespace sqroot {

struct AuxGraph {
  // Vertex i of P(G) is edges[i]; lexicographic order.
  std::vector<Edge> edges;
  // Sorted neighbour indices.
  std::vector<std::vector<int>> adjacency;

  std::size_t vertex_count() const { return edges.size(); }
  std::size_t edge_count() const;
  bool adjacent(int a, int b) const;
  // Throws InputError if `e` is not an edge of the base graph.
  int index_of(const Edge& e) const;
};

AuxGraph build_aux_graph(const Graph& g);

// Throws InputError unless h is a spanning subgraph of g and p matches g.
bool check_root_charact(const Graph& h, const Graph& g, const AuxGraph& p);

enum class Prefilter : std::uint8_t { kReject, kPass, kTrivialYes };

// A non-complete connected graph loses at least n-2 edges in any root.
// Throws DisconnectedInputError.
Prefilter aingworth_prefilter(const Graph& g, int k);

struct MaxRootStats {
  std::uint64_t nodes = 0;
  // Leaves of the largest per-component branching tree.
  std::uint64_t leaves = 0;
  // Maximal independent sets visited, summed over components.
  std::uint64_t independent_sets = 0;
};

// Root with at most k deletions and as few as possible; ties go to the
// lexicographically smallest edge set. Components are solved separately.
std::optional<RootSolution> max_root_fpt(const Graph& g, int k,
                                         MaxRootStats* stats = nullptr);

// Root with the most edges, or nullopt if g has no root at all.
std::optional<RootSolution> max_root_exact(const Graph& g,
                                           MaxRootStats* stats = nullptr);

// Calls `visit` once per maximal independent set (ascending indices) in a
// fixed order. Returns the number of sets.
std::uint64_t enumerate_maximal_independent_sets(
    const AuxGraph& p, const std::function<void(const std::vector<int>&)>& visit);

}  // namespace sqroot

#endif  // SQROOT_MAXROOT_HPP_
