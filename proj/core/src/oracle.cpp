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

#include "sqroot/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

namespace sqroot {

OracleCapError::OracleCapError(std::size_t edges)
    : InputError("oracle: " + std::to_string(edges) +
                 " edges exceed the cap of " +
                 std::to_string(kOracleEdgeCap)) {}

namespace {

using Row = std::vector<std::uint64_t>;

// Dense view of a graph on positions 0..n-1.
class Dense {
 public:
  explicit Dense(const Graph& g) : labels_(g.vertices()) {
    words_ = (labels_.size() + 63) / 64;
    for (const Edge& e : g.edges()) ends_.emplace_back(pos(e.u()), pos(e.v()));
    target_.assign(labels_.size(), Row(words_, 0));
    for (const auto& [a, b] : ends_) {
      set(target_[a], b);
      set(target_[b], a);
    }
  }

  std::size_t pos(Vertex v) const {
    return static_cast<std::size_t>(
        std::lower_bound(labels_.begin(), labels_.end(), v) - labels_.begin());
  }
  const std::vector<std::pair<std::size_t, std::size_t>>& ends() const {
    return ends_;
  }

  bool small() const { return words_ <= 1; }

  // Whether the edges with indices in `picked` square to the target.
  bool squares_to_target(const std::vector<int>& picked) const {
    return squares_wide(picked);
  }

  // Small graphs only: forced edges plus the free edges selected by `mask`.
  bool squares_to_target(const std::vector<int>& forced, const std::vector<int>& free,
                         std::uint64_t mask) const {
    const std::size_t n = labels_.size();
    std::uint64_t adj[64];
    std::fill_n(adj, n, 0);
    auto add = [&](int i) {
      adj[ends_[i].first] |= std::uint64_t{1} << ends_[i].second;
      adj[ends_[i].second] |= std::uint64_t{1} << ends_[i].first;
    };
    for (int i : forced) add(i);
    for (; mask != 0; mask &= mask - 1) add(free[std::countr_zero(mask)]);
    return square_matches(adj);
  }

 private:
  static void set(Row& r, std::size_t i) { r[i / 64] |= std::uint64_t{1} << (i % 64); }
  static bool test(const Row& r, std::size_t i) { return (r[i / 64] >> (i % 64)) & 1U; }

  // At most 64 vertices: one word per row.
  bool square_matches(const std::uint64_t* adj) const {
    const std::size_t n = labels_.size();
    for (std::size_t v = 0; v < n; ++v) {
      std::uint64_t sq = adj[v];
      for (std::uint64_t rest = adj[v]; rest != 0; rest &= rest - 1) {
        sq |= adj[std::countr_zero(rest)];
      }
      sq &= ~(std::uint64_t{1} << v);
      if (sq != target_[v][0]) return false;
    }
    return true;
  }

  bool squares_wide(const std::vector<int>& picked) const {
    const std::size_t n = labels_.size();
    std::vector<Row> adj(n, Row(words_, 0));
    for (int i : picked) {
      set(adj[ends_[i].first], ends_[i].second);
      set(adj[ends_[i].second], ends_[i].first);
    }
    for (std::size_t v = 0; v < n; ++v) {
      Row sq = adj[v];
      for (std::size_t w = 0; w < n; ++w) {
        if (!test(adj[v], w)) continue;
        for (std::size_t x = 0; x < words_; ++x) sq[x] |= adj[w][x];
      }
      sq[v / 64] &= ~(std::uint64_t{1} << (v % 64));
      if (sq != target_[v]) return false;
    }
    return true;
  }

  std::vector<Vertex> labels_;
  std::size_t words_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
  std::vector<Row> target_;
};

}  // namespace

namespace {

enum class Keep : std::uint8_t { kAll, kFewest, kMost };

// Sorted edge lists of the roots allowed by `q`. With kFewest / kMost only
// roots of the extreme size survive; worse subsets skip the square check.
std::vector<std::vector<Edge>> scan(const OracleQuery& q, const OracleOptions& opts,
                                    Keep keep) {
  if (q.min_edges > q.max_edges) {
    throw InputError("oracle: min_edges exceeds max_edges");
  }
  const std::vector<Edge> all = q.graph.edges();
  std::vector<int> forced;
  std::vector<int> free;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const bool req = q.required.contains(all[i]);
    const bool blk = q.blocked.contains(all[i]);
    if (req && blk) throw InputError("oracle: required and blocked overlap");
    if (req) {
      forced.push_back(static_cast<int>(i));
    } else if (!blk) {
      free.push_back(static_cast<int>(i));
    }
  }
  for (const EdgeSet* s : {&q.required, &q.blocked}) {
    for (const Edge& e : *s) {
      if (!q.graph.has_edge(e)) throw InputError("oracle: label on a non-edge");
    }
  }
  if (all.size() > kOracleEdgeCap) throw OracleCapError(all.size());

  const Dense dense(q.graph);
  const std::uint64_t total = std::uint64_t{1} << free.size();
  const unsigned jobs = std::max(1U, opts.jobs);

  std::vector<std::vector<std::uint64_t>> hits(jobs);
  auto worker = [&](unsigned id) {
    const std::uint64_t lo = total * id / jobs;
    const std::uint64_t hi = total * (id + 1) / jobs;
    std::vector<int> picked;
    std::size_t best = keep == Keep::kFewest ? SIZE_MAX : 0;
    auto& mine = hits[id];
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      const std::size_t size = forced.size() + std::popcount(mask);
      if (size < q.min_edges || size > q.max_edges) continue;
      if ((keep == Keep::kFewest && size > best) || (keep == Keep::kMost && size < best)) {
        continue;
      }
      bool ok;
      if (dense.small()) {
        ok = dense.squares_to_target(forced, free, mask);
      } else {
        picked = forced;
        for (std::size_t b = 0; b < free.size(); ++b) {
          if ((mask >> b) & 1U) picked.push_back(free[b]);
        }
        ok = dense.squares_to_target(picked);
      }
      if (!ok) continue;
      if (keep != Keep::kAll && size != best) {
        mine.clear();
        best = size;
      }
      mine.push_back(mask);
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }
  if (opts.iterations) *opts.iterations = total;

  std::vector<std::vector<Edge>> roots;
  for (const auto& chunk : hits) {
    for (std::uint64_t mask : chunk) {
      std::vector<Edge> edges;
      for (int i : forced) edges.push_back(all[i]);
      for (std::size_t b = 0; b < free.size(); ++b) {
        if ((mask >> b) & 1U) edges.push_back(all[free[b]]);
      }
      std::sort(edges.begin(), edges.end());
      roots.push_back(std::move(edges));
    }
  }
  if (keep != Keep::kAll && !roots.empty()) {
    // Workers may disagree on the extreme size.
    std::size_t target = roots.front().size();
    for (const auto& r : roots) {
      target = keep == Keep::kFewest ? std::min(target, r.size()) : std::max(target, r.size());
    }
    std::erase_if(roots, [&](const std::vector<Edge>& r) { return r.size() != target; });
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Graph checked(const OracleQuery& q, const std::vector<Edge>& edges) {
  Graph h = Graph::spanning(q.graph, edges);
  if (!is_square_root(h, q.graph)) {
    throw InvariantError("oracle: bitmask square disagrees with compute_square");
  }
  return h;
}

std::optional<Graph> extreme(const OracleQuery& q, const OracleOptions& opts, Keep keep) {
  const auto roots = scan(q, opts, keep);
  if (roots.empty()) return std::nullopt;
  return checked(q, roots.front());
}

}  // namespace

std::vector<Graph> oracle_enumerate_roots(const OracleQuery& q,
                                          OracleOptions opts) {
  const auto roots = scan(q, opts, Keep::kAll);
  std::vector<Graph> out;
  out.reserve(roots.size());
  for (const auto& edges : roots) out.push_back(checked(q, edges));
  return out;
}

std::optional<Graph> oracle_min_root(const Graph& g, int k, OracleOptions opts) {
  if (k < 0) throw InputError("k must be non-negative");
  const auto comps = connected_components(g);
  if (comps.size() > 1) throw DisconnectedInputError(comps.size());
  const std::size_t n = g.vertex_count();
  OracleQuery q{g, 0, n == 0 ? 0 : n - 1 + static_cast<std::size_t>(k), {}, {}};
  return extreme(q, opts, Keep::kFewest);
}

std::optional<Graph> oracle_max_root(const Graph& g, OracleOptions opts) {
  OracleQuery q{g, 0, g.edge_count(), {}, {}};
  return extreme(q, opts, Keep::kMost);
}

}  // namespace sqroot
