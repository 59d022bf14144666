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

#include <algorithm>
#include <cmath>
#include <set>

#include "sqroot/errors.hpp"
#include "sqroot/gen.hpp"
#include "sqroot/maxroot.hpp"
#include "sqroot/oracle.hpp"
#include "test_support.hpp"

namespace sqroot {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::edge_graph;
using testing::path_graph;

// Maximal independent sets of p by trying every subset.
std::set<std::vector<int>> brute_force_mis(const AuxGraph& p) {
  const int m = static_cast<int>(p.vertex_count());
  std::set<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    bool independent = true;
    for (int i = 0; i < m && independent; ++i) {
      if (!((mask >> i) & 1U)) continue;
      for (int j : p.adjacency[i]) {
        if ((mask >> j) & 1U) independent = false;
      }
    }
    if (!independent) continue;
    bool maximal = true;
    for (int i = 0; i < m && maximal; ++i) {
      if ((mask >> i) & 1U) continue;
      bool free = true;
      for (int j : p.adjacency[i]) {
        if ((mask >> j) & 1U) free = false;
      }
      if (free) maximal = false;
    }
    if (!maximal) continue;
    std::vector<int> set;
    for (int i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) set.push_back(i);
    }
    out.insert(set);
  }
  return out;
}

AuxGraph path_aux(int vertices) {
  AuxGraph p;
  for (int i = 0; i < vertices; ++i) p.edges.emplace_back(0, i + 1);
  p.adjacency.resize(vertices);
  for (int i = 0; i + 1 < vertices; ++i) {
    p.adjacency[i].push_back(i + 1);
    p.adjacency[i + 1].push_back(i);
  }
  for (auto& nbrs : p.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return p;
}

// -------------------------------------------------------- auxiliary graph

TEST(AuxGraph, Examples) {
  const AuxGraph tri = build_aux_graph(complete_graph(3));
  EXPECT_EQ(tri.vertex_count(), 3U);
  EXPECT_EQ(tri.edge_count(), 0U);

  const AuxGraph p3 = build_aux_graph(path_graph(3));
  EXPECT_EQ(p3.vertex_count(), 2U);
  EXPECT_EQ(p3.edge_count(), 1U);

  const AuxGraph p4 = build_aux_graph(path_graph(4));
  ASSERT_EQ(p4.vertex_count(), 3U);
  EXPECT_EQ(p4.edge_count(), 2U);
  EXPECT_TRUE(p4.adjacent(p4.index_of({0, 1}), p4.index_of({1, 2})));
  EXPECT_TRUE(p4.adjacent(p4.index_of({1, 2}), p4.index_of({2, 3})));
  EXPECT_FALSE(p4.adjacent(p4.index_of({0, 1}), p4.index_of({2, 3})));
}

TEST(AuxGraph, AdjacencyDefinitionOnRandomGraphs) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph g = testing::random_graph(8, 0.45, s);
    const AuxGraph p = build_aux_graph(g);
    EXPECT_EQ(p.vertex_count(), g.edge_count());
    for (std::size_t i = 0; i < p.vertex_count(); ++i) {
      for (std::size_t j = i + 1; j < p.vertex_count(); ++j) {
        const Edge& a = p.edges[i];
        const Edge& b = p.edges[j];
        bool expect = false;
        for (Vertex y : {a.u(), a.v()}) {
          if (b.has_endpoint(y)) {
            expect = !g.has_edge(a.other(y), b.other(y));
          }
        }
        EXPECT_EQ(p.adjacent(static_cast<int>(i), static_cast<int>(j)), expect);
        EXPECT_EQ(p.adjacent(static_cast<int>(j), static_cast<int>(i)), expect);
      }
    }
  }
}

// ----------------------------------------------------------- charact

TEST(Charact, Examples) {
  const Graph k3 = complete_graph(3);
  EXPECT_TRUE(check_root_charact(path_graph(3), k3, build_aux_graph(k3)));
  const Graph p3 = path_graph(3);
  const Graph single = edge_graph(3, {{0, 1}});
  EXPECT_FALSE(check_root_charact(single, p3, build_aux_graph(p3)));
}

TEST(Charact, RejectsNonSubgraphs) {
  const Graph p3 = path_graph(3);
  EXPECT_THROW((void)check_root_charact(complete_graph(3), p3, build_aux_graph(p3)),
               InputError);
  EXPECT_THROW((void)check_root_charact(path_graph(4), p3, build_aux_graph(p3)),
               InputError);
}

TEST(Charact, EquivalentToSquaringOnSmallCatalog) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : testing::connected_catalog(n)) {
      const AuxGraph p = build_aux_graph(g);
      const auto edges = g.edges();
      for (std::uint32_t mask = 0; mask < (1U << edges.size()); ++mask) {
        std::vector<Edge> kept;
        for (std::size_t i = 0; i < edges.size(); ++i) {
          if ((mask >> i) & 1U) kept.push_back(edges[i]);
        }
        const Graph h = Graph::spanning(g, kept);
        EXPECT_EQ(check_root_charact(h, g, p), is_square_root(h, g));
      }
    }
  }
}

TEST(Charact, EquivalentOnRandomPairs) {
  for (std::uint64_t s = 0; s < 2000; ++s) {
    const int n = 2 + static_cast<int>(s % 9);
    const Graph base = testing::random_graph(n, 0.35, s);
    // Half of the time g is a genuine square so that roots actually occur.
    const Graph g = s % 2 ? compute_square(base) : base;
    const Graph h = testing::random_spanning_subgraph(g, 0.7, s + 1);
    EXPECT_EQ(check_root_charact(h, g, build_aux_graph(g)), is_square_root(h, g));
  }
}

// Root extension: adding P(G)-independent edges to a root keeps it a root.
TEST(Charact, RootExtensionMonotonicity) {
  int extended = 0;
  for (std::uint64_t s = 0; s < 300; ++s) {
    const auto inst = gen_tree_plus_k(6 + static_cast<int>(s % 5), static_cast<int>(s % 3), s);
    const Graph& g = inst.square;
    const AuxGraph p = build_aux_graph(g);
    std::vector<char> in(p.vertex_count(), 0);
    for (const Edge& e : inst.planted_root.edges()) in[p.index_of(e)] = 1;
    Rng rng(s);
    for (std::size_t i = 0; i < p.vertex_count(); ++i) {
      const auto j = rng.below(p.vertex_count());
      if (in[j]) continue;
      bool free = true;
      for (int nb : p.adjacency[j]) {
        if (in[nb]) free = false;
      }
      if (!free) continue;
      in[j] = 1;
      std::vector<Edge> kept;
      for (std::size_t x = 0; x < p.vertex_count(); ++x) {
        if (in[x]) kept.push_back(p.edges[x]);
      }
      EXPECT_TRUE(is_square_root(Graph::spanning(g, kept), g));
      ++extended;
    }
  }
  EXPECT_GT(extended, 0);
}

// ---------------------------------------------------------- prefilter

TEST(Aingworth, Examples) {
  const Graph c7sq = compute_square(cycle_graph(7));
  EXPECT_EQ(aingworth_prefilter(complete_graph(5), 0), Prefilter::kTrivialYes);
  EXPECT_EQ(aingworth_prefilter(c7sq, 4), Prefilter::kReject);
  EXPECT_EQ(aingworth_prefilter(c7sq, 5), Prefilter::kPass);
  EXPECT_THROW((void)aingworth_prefilter(edge_graph(4, {{0, 1}, {2, 3}}), 9),
               DisconnectedInputError);
}

// ------------------------------------------------------------------ fpt

TEST(MaxRootFpt, Examples) {
  const auto k3 = max_root_fpt(complete_graph(3), 0);
  ASSERT_TRUE(k3);
  EXPECT_EQ(k3->root, complete_graph(3));
  EXPECT_EQ(k3->deletions, 0U);

  for (int k = 0; k <= 4; ++k) EXPECT_FALSE(max_root_fpt(path_graph(3), k));

  MaxRootStats stats;
  const auto c7 = max_root_fpt(compute_square(cycle_graph(7)), 7, &stats);
  ASSERT_TRUE(c7);
  EXPECT_EQ(c7->edge_count, 7U);
  EXPECT_EQ(c7->deletions, 7U);
  EXPECT_LE(stats.leaves, 1U << 8);
}

TEST(MaxRootFpt, DisconnectedInputSolvedPerComponent) {
  // K3 plus a disjoint K4 minus nothing: both complete.
  Graph g = complete_graph(3);
  for (Vertex v = 3; v < 7; ++v) g.add_vertex(v);
  for (Vertex a = 3; a < 7; ++a) {
    for (Vertex b = a + 1; b < 7; ++b) g.add_edge(a, b);
  }
  const auto sol = max_root_fpt(g, 0);
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->root, g);
  EXPECT_FALSE(max_root_fpt(path_graph(3), 3));
}

TEST(MaxRootFpt, MatchesOracleOnSmallCatalog) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : testing::connected_catalog(n)) {
      const auto best = oracle_max_root(g);
      for (int k = 0; k <= 6; ++k) {
        MaxRootStats stats;
        const auto got = max_root_fpt(g, k, &stats);
        const bool expect = best && g.edge_count() - best->edge_count() <= static_cast<std::size_t>(k);
        ASSERT_EQ(got.has_value(), expect) << g << " k=" << k;
        if (got) {
          EXPECT_EQ(got->root.edge_count(), best->edge_count());
          EXPECT_EQ(got->root, *best) << "tie-break differs";
        }
        EXPECT_LE(stats.leaves, std::uint64_t{1} << (k + 1));
      }
    }
  }
}

// ---------------------------------------------------------------- exact

TEST(MaxRootExact, Examples) {
  const auto k4 = max_root_exact(complete_graph(4));
  ASSERT_TRUE(k4);
  EXPECT_EQ(k4->root, complete_graph(4));
  EXPECT_FALSE(max_root_exact(path_graph(4)));
  EXPECT_FALSE(max_root_exact(cycle_graph(5)));
}

TEST(MaxRootExact, MatchesOracleOnSmallCatalog) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : testing::connected_catalog(n)) {
      const auto best = oracle_max_root(g);
      const auto got = max_root_exact(g);
      ASSERT_EQ(got.has_value(), best.has_value()) << g;
      if (got) { EXPECT_EQ(got->root, *best); }
    }
  }
}

// ------------------------------------------------------------ MIS

TEST(Mis, Examples) {
  AuxGraph edgeless;
  for (int i = 0; i < 4; ++i) edgeless.edges.emplace_back(0, i + 1);
  edgeless.adjacency.resize(4);
  std::vector<std::vector<int>> seen;
  EXPECT_EQ(enumerate_maximal_independent_sets(
                edgeless, [&](const std::vector<int>& s) { seen.push_back(s); }),
            1U);
  EXPECT_EQ(seen, (std::vector<std::vector<int>>{{0, 1, 2, 3}}));

  seen.clear();
  EXPECT_EQ(enumerate_maximal_independent_sets(
                path_aux(3), [&](const std::vector<int>& s) { seen.push_back(s); }),
            2U);
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(seen, (std::vector<std::vector<int>>{{0, 2}, {1}}));
}

TEST(Mis, MatchesBruteForceAndBound) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const int n = 3 + static_cast<int>(s % 6);
    const Graph g = testing::random_graph(n, 0.5, 40 + s);
    const AuxGraph p = build_aux_graph(g);
    if (p.vertex_count() > 20) continue;
    std::vector<std::vector<int>> seen;
    const auto count = enumerate_maximal_independent_sets(
        p, [&](const std::vector<int>& set) { seen.push_back(set); });
    const std::set<std::vector<int>> unique(seen.begin(), seen.end());
    EXPECT_EQ(unique.size(), seen.size()) << "duplicate set";
    EXPECT_EQ(unique, brute_force_mis(p));
    const double bound = std::pow(3.0, std::ceil(p.vertex_count() / 3.0));
    EXPECT_LE(static_cast<double>(count), bound);

    std::vector<std::vector<int>> again;
    enumerate_maximal_independent_sets(
        p, [&](const std::vector<int>& set) { again.push_back(set); });
    EXPECT_EQ(seen, again);
  }
}

}  // namespace
}  // namespace sqroot
