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

#include <gtest/gtest.h>

#include "sqroot/errors.hpp"
#include "sqroot/graph.hpp"
#include "test_support.hpp"

namespace sqroot {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::edge_graph;
using testing::path_graph;
using testing::star_graph;

TEST(Edge, CanonicalOrder) {
  const Edge e(5, 2);
  EXPECT_EQ(e.u(), 2);
  EXPECT_EQ(e.v(), 5);
  EXPECT_EQ(e, Edge(2, 5));
  EXPECT_EQ(e.other(2), 5);
  EXPECT_THROW(Edge(3, 3), InputError);
  EXPECT_THROW((void)e.other(7), InputError);
}

TEST(Graph, BasicMutationAndInvariants) {
  Graph g(4);
  EXPECT_TRUE(g.add_edge(0, 1));
  EXPECT_FALSE(g.add_edge(1, 0));
  EXPECT_THROW(g.add_edge(2, 2), InputError);
  EXPECT_THROW(g.add_edge(0, 9), InputError);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  EXPECT_EQ(g.edge_count(), 3U);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_TRUE(g.neighbors(1).contains(0));
  EXPECT_TRUE(g.neighbors(0).contains(1));

  std::size_t degree_sum = 0;
  for (Vertex v : g.vertices()) degree_sum += g.degree(v);
  EXPECT_EQ(degree_sum, 2 * g.edge_count());
}

TEST(Graph, LabelsAreStableAcrossDeletion) {
  Graph g = path_graph(5);
  g.remove_vertex(2);
  EXPECT_EQ(g.vertices(), (std::vector<Vertex>{0, 1, 3, 4}));
  EXPECT_TRUE(g.has_edge(3, 4));
  EXPECT_EQ(g.edge_count(), 2U);
  EXPECT_THROW(g.add_vertex(3), InputError);
  g.add_vertex(2);
  EXPECT_EQ(g.degree(2), 0U);
}

TEST(ComputeSquare, PathOnFourVertices) {
  const Graph sq = compute_square(path_graph(4));
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
  EXPECT_EQ(sq.edges(), expected);
}

TEST(ComputeSquare, StarBecomesComplete) {
  EXPECT_EQ(compute_square(star_graph(3)), complete_graph(4));
}

TEST(ComputeSquare, SevenCycleIsFourRegularWithFourteenEdges) {
  const Graph c7 = cycle_graph(7);
  const Graph sq = compute_square(c7);
  EXPECT_EQ(sq.edge_count(), 14U);
  for (Vertex v : sq.vertices()) EXPECT_EQ(sq.degree(v), 4U);
  EXPECT_EQ(sq, testing::bfs_square(c7));
}

TEST(ComputeSquare, TinyGraphsAndPurity) {
  EXPECT_EQ(compute_square(Graph()), Graph());
  EXPECT_EQ(compute_square(Graph(1)), Graph(1));
  const Graph p = path_graph(3);
  const Graph copy = p;
  (void)compute_square(p);
  EXPECT_EQ(p, copy);
}

TEST(IsSquareRoot, Examples) {
  EXPECT_TRUE(is_square_root(path_graph(3), complete_graph(3)));
  EXPECT_FALSE(is_square_root(path_graph(3), path_graph(3)));
  const Graph c7 = cycle_graph(7);
  EXPECT_TRUE(is_square_root(c7, compute_square(c7)));
  EXPECT_THROW((void)is_square_root(path_graph(3), complete_graph(4)), InputError);
}

TEST(Connectivity, Examples) {
  const auto c5 = connectivity_profile(cycle_graph(5));
  EXPECT_TRUE(c5.is_connected);
  EXPECT_TRUE(c5.is_two_connected);
  EXPECT_EQ(c5.components.size(), 1U);

  const auto p3 = connectivity_profile(path_graph(3));
  EXPECT_TRUE(p3.is_connected);
  EXPECT_FALSE(p3.is_two_connected);

  const auto two = connectivity_profile(edge_graph(4, {{0, 1}, {2, 3}}));
  EXPECT_FALSE(two.is_connected);
  EXPECT_FALSE(two.is_two_connected);
  EXPECT_EQ(two.components, (std::vector<VertexSet>{{0, 1}, {2, 3}}));

  EXPECT_FALSE(connectivity_profile(complete_graph(2)).is_two_connected);
}

TEST(Simplicial, Examples) {
  EXPECT_EQ(simplicial_vertices(complete_graph(4)), (VertexSet{0, 1, 2, 3}));
  EXPECT_TRUE(simplicial_vertices(cycle_graph(5)).empty());
  EXPECT_EQ(simplicial_vertices(path_graph(4)), (VertexSet{0, 3}));
  Graph isolated(2);
  EXPECT_EQ(simplicial_vertices(isolated), (VertexSet{0, 1}));
}

TEST(TwinPartition, Examples) {
  const Graph k4 = complete_graph(4);
  EXPECT_EQ(true_twin_partition(k4, k4.vertex_set()),
            (std::vector<VertexSet>{{0, 1, 2, 3}}));
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(true_twin_partition(c5, c5.vertex_set()).size(), 5U);

  Graph diamond = complete_graph(4);
  diamond.remove_edge(0, 1);
  EXPECT_EQ(true_twin_partition(diamond, diamond.vertex_set()),
            (std::vector<VertexSet>{{0}, {1}, {2, 3}}));
}

TEST(Separators, MinimalSeparatorOnPath) {
  const Graph p = path_graph(5);
  EXPECT_TRUE(separates(p, {2}, {0}, {4}));
  EXPECT_TRUE(is_minimal_separator(p, {2}, {0}, {4}));
  EXPECT_TRUE(separates(p, {1, 2}, {0}, {4}));
  EXPECT_FALSE(is_minimal_separator(p, {1, 2}, {0}, {4}));
  EXPECT_FALSE(separates(cycle_graph(5), {2}, {0}, {3}));
}

// Properties on random graphs.

class RandomGraphs : public ::testing::TestWithParam<int> {};

TEST_P(RandomGraphs, SquareIsEdgeMonotoneAndKeepsComponents) {
  for (int s = 0; s < 40; ++s) {
    const Graph g = testing::random_graph(GetParam(), 0.25, 1000 * GetParam() + s);
    const Graph sq = compute_square(g);
    for (const Edge& e : g.edges()) EXPECT_TRUE(sq.has_edge(e));
    EXPECT_EQ(connected_components(g), connected_components(sq));
  }
}

TEST_P(RandomGraphs, SquareMatchesBfsReference) {
  for (int s = 0; s < 40; ++s) {
    const Graph g = testing::random_graph(GetParam(), 0.3, 7000 + 100 * GetParam() + s);
    const Graph ref = testing::bfs_square(g);
    EXPECT_EQ(compute_square(g), ref);
    const Graph h = testing::random_spanning_subgraph(ref, 0.6, s);
    EXPECT_EQ(is_square_root(h, ref), testing::bfs_square(h) == ref);
    EXPECT_TRUE(is_square_root(g, ref));
  }
}

TEST_P(RandomGraphs, SimplicialMatchesNaiveCheck) {
  for (int s = 0; s < 40; ++s) {
    const Graph g = testing::random_graph(GetParam(), 0.5, 300 + s);
    const VertexSet simp = simplicial_vertices(g);
    for (Vertex v : g.vertices()) {
      EXPECT_EQ(simp.contains(v), testing::naive_is_simplicial(g, v));
    }
  }
}

TEST_P(RandomGraphs, TwinClassesAreEquivalenceClasses) {
  for (int s = 0; s < 40; ++s) {
    const Graph g = compute_square(testing::random_graph(GetParam(), 0.2, 900 + s));
    const auto classes = true_twin_partition(g, g.vertex_set());
    std::map<Vertex, std::size_t> cls;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (i > 0) { EXPECT_LT(*classes[i - 1].begin(), *classes[i].begin()); }
      for (Vertex v : classes[i]) EXPECT_TRUE(cls.emplace(v, i).second);
    }
    EXPECT_EQ(cls.size(), g.vertex_count());
    for (Vertex u : g.vertices()) {
      for (Vertex v : g.vertices()) {
        const bool twins = g.closed_neighborhood(u) == g.closed_neighborhood(v);
        EXPECT_EQ(twins, cls[u] == cls[v]);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, RandomGraphs, ::testing::Values(1, 2, 5, 8, 12));

TEST(Catalog, CountsMatchKnownSequence) {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(testing::connected_catalog(n).size(), expected[n - 1]) << "n=" << n;
    for (const Graph& g : testing::connected_catalog(n)) {
      EXPECT_TRUE(is_connected(g));
    }
  }
}

}  // namespace
}  // namespace sqroot
