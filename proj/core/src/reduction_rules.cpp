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

// The three reduction rules of the minimum-root kernelization. Each rule
// takes an instance by const reference and returns a fresh instance, so a
// trace record always describes the state before the rule fired.

#include <algorithm>
#include <iterator>
#include <string>

#include "sqroot/errors.hpp"
#include "sqroot/minroot.hpp"

namespace sqroot {

EdgeSet LabeledInstance::required_edges() const {
  EdgeSet out;
  for (const auto& [e, _] : required) out.insert(out.end(), e);
  return out;
}

void LabeledInstance::remove_vertex(Vertex v) {
  std::erase_if(required, [v](const auto& kv) {
    return kv.first.has_endpoint(v);
  });
  std::erase_if(blocked, [v](const Edge& e) { return e.has_endpoint(v); });
  graph.remove_vertex(v);
}

std::size_t SimplicialRecord::deleted_count() const {
  std::size_t total = 0;
  for (const auto& c : classes) {
    total += c.dropped_anchored.size() + c.dropped_twins.size();
  }
  return total;
}

std::size_t ReductionTrace::trim_count() const {
  return std::count_if(records.begin(), records.end(), [](const auto& r) {
    return std::holds_alternative<TrimRecord>(r);
  });
}

std::size_t ReductionTrace::path_count() const {
  return std::count_if(records.begin(), records.end(), [](const auto& r) {
    return std::holds_alternative<PathRecord>(r);
  });
}

std::size_t ReductionTrace::simplicial_count() const {
  return std::count_if(records.begin(), records.end(), [](const auto& r) {
    return std::holds_alternative<SimplicialRecord>(r);
  });
}

int core_vertex_bound(int k) {
  if (k < 1) throw InputError("core_vertex_bound: k must be >= 1");
  // For k = 1 the non-pendant part of a solution is a single cycle, which
  // path reduction only shortens to length 6.
  return k == 1 ? 6 : 15 * k - 14;
}

std::size_t kernel_vertex_bound(int k) {
  const auto c = static_cast<std::size_t>(core_vertex_bound(k));
  return c * (c + 2);
}

namespace {

bool intersects(const EdgeSet& a, const EdgeSet& b) {
  const EdgeSet& small = a.size() <= b.size() ? a : b;
  const EdgeSet& large = a.size() <= b.size() ? b : a;
  return std::any_of(small.begin(), small.end(),
                     [&](const Edge& e) { return large.contains(e); });
}

bool intersects(const std::map<Edge, EdgeOrigin>& required,
                const EdgeSet& edges) {
  return std::any_of(edges.begin(), edges.end(),
                     [&](const Edge& e) { return required.contains(e); });
}

VertexSet closed_difference(const Graph& g, Vertex a, Vertex b) {
  const VertexSet na = g.closed_neighborhood(a);
  const VertexSet nb = g.closed_neighborhood(b);
  VertexSet out;
  std::set_difference(na.begin(), na.end(), nb.begin(), nb.end(),
                      std::inserter(out, out.end()));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Trimming

std::optional<TrimSite> find_trim_site(const Graph& g) {
  for (const Edge& s : g.edges()) {
    const Graph rest = g.without({s.u(), s.v()});
    for (VertexSet& comp : connected_components(rest)) {
      VertexSet clique = comp;
      clique.insert(s.u());
      clique.insert(s.v());
      if (g.is_clique(clique)) {
        return TrimSite{s.u(), s.v(), std::move(comp)};
      }
    }
  }
  return std::nullopt;
}

RuleOutcome apply_trimming_rule(const LabeledInstance& inst) {
  const auto site = find_trim_site(inst.graph);
  if (!site) return NotApplicable{};
  const Graph& g = inst.graph;
  Vertex u1 = site->u1;
  Vertex u2 = site->u2;

  const VertexSet only1 = closed_difference(g, u1, u2);
  const VertexSet only2 = closed_difference(g, u2, u1);
  if (only1.empty() && only2.empty()) {
    return NoAnswer{"trimming: N[u1] = N[u2]"};
  }
  if (!only1.empty() && !only2.empty()) {
    return NoAnswer{"trimming: closed neighbourhoods are incomparable"};
  }
  if (!only1.empty()) std::swap(u1, u2);

  VertexSet others = site->component;  // u2..ur
  others.insert(u2);
  EdgeSet new_required;
  EdgeSet new_blocked;
  for (Vertex w : others) new_required.emplace(u1, w);
  for (auto it = others.begin(); it != others.end(); ++it) {
    for (auto jt = std::next(it); jt != others.end(); ++jt) {
      new_blocked.emplace(*it, *jt);
    }
  }
  for (Vertex x : g.neighbors(u1)) {
    if (!others.contains(x)) new_blocked.emplace(u1, x);
  }

  if (intersects(inst.required, new_blocked) ||
      intersects(new_required, inst.blocked)) {
    return NoAnswer{"trimming: required/blocked clash"};
  }

  LabeledInstance next = inst;
  for (const Edge& e : new_required) next.required.emplace(e, EdgeOrigin::kTrim);
  next.blocked.insert(new_blocked.begin(), new_blocked.end());
  for (Vertex v : site->component) next.remove_vertex(v);

  TrimRecord record{u1, u2,
                    {site->component.begin(), site->component.end()},
                    static_cast<int>(site->component.size() + 2)};
  return Reduced{std::move(next), std::move(record)};
}

// ---------------------------------------------------------------------------
// Path reduction

namespace {

std::optional<FTriple> check_f_triple(const Graph& g, Vertex u1, Vertex u2,
                                      Vertex u3) {
  if (!g.has_edge(u1, u3)) return std::nullopt;
  const VertexSet& n1 = g.neighbors(u1);
  const VertexSet& n3 = g.neighbors(u3);

  // iv) the common neighbours of the outer vertices are u2, u4..ur.
  FTriple t{u1, u2, u3, {}, {}, {}};
  VertexSet members{u1, u2, u3};
  for (Vertex w : n1) {
    if (w != u2 && n3.contains(w)) {
      t.tail.push_back(w);
      members.insert(w);
    }
  }
  // i) u1..ur is a clique.
  if (!g.is_clique(members)) return std::nullopt;

  // iii) + v): every other neighbour of u2 sees exactly one outer vertex.
  for (Vertex w : g.neighbors(u2)) {
    if (members.contains(w)) continue;
    if (n1.contains(w)) {
      t.x_set.push_back(w);
    } else if (n3.contains(w)) {
      t.y_set.push_back(w);
    } else {
      return std::nullopt;
    }
  }
  if (t.x_set.empty() || t.y_set.empty()) return std::nullopt;

  // vi) no x-y edges.
  for (Vertex x : t.x_set) {
    const VertexSet& nx = g.neighbors(x);
    for (Vertex y : t.y_set) {
      if (nx.contains(y)) return std::nullopt;
    }
  }

  // ii) {u1,u2,u3} minimally separates u4..ur from the rest when r >= 4.
  if (!t.tail.empty()) {
    VertexSet rest = g.vertex_set();
    for (Vertex m : members) rest.erase(m);
    const VertexSet tail(t.tail.begin(), t.tail.end());
    if (!is_minimal_separator(g, {u1, u2, u3}, tail, rest)) {
      return std::nullopt;
    }
  }
  return t;
}

}  // namespace

std::optional<FTriple> find_f_triple(const Graph& g) {
  for (const auto& [u2, nbrs] : g.adjacency()) {
    for (auto it = nbrs.begin(); it != nbrs.end(); ++it) {
      for (auto jt = std::next(it); jt != nbrs.end(); ++jt) {
        if (auto t = check_f_triple(g, *it, u2, *jt)) return t;
      }
    }
  }
  return std::nullopt;
}

RuleOutcome apply_path_reduction_rule(const LabeledInstance& inst) {
  const auto t = find_f_triple(inst.graph);
  if (!t) return NotApplicable{};

  EdgeSet new_required{Edge(t->u2, t->u1), Edge(t->u2, t->u3)};
  EdgeSet new_blocked{Edge(t->u1, t->u3)};
  for (Vertex w : t->tail) {
    new_required.emplace(t->u2, w);
    new_blocked.emplace(t->u1, w);
    new_blocked.emplace(t->u3, w);
  }
  for (Vertex x : t->x_set) new_blocked.emplace(x, t->u2);
  for (Vertex y : t->y_set) new_blocked.emplace(y, t->u2);

  if (intersects(inst.required, new_blocked) ||
      intersects(new_required, inst.blocked)) {
    return NoAnswer{"path reduction: required/blocked clash"};
  }

  LabeledInstance next = inst;
  next.remove_vertex(t->u2);
  for (Vertex w : t->tail) next.remove_vertex(w);
  const Edge outer(t->u1, t->u3);
  next.blocked.erase(outer);
  next.required.emplace(outer, EdgeOrigin::kPath);
  for (Vertex x : t->x_set) {
    next.graph.add_edge(x, t->u3);
    next.blocked.emplace(x, t->u3);
  }
  for (Vertex y : t->y_set) {
    next.graph.add_edge(y, t->u1);
    next.blocked.emplace(y, t->u1);
  }

  PathRecord record{t->u1, t->u2, t->u3, {t->u2}, t->x_set, t->y_set};
  record.deleted.insert(record.deleted.end(), t->tail.begin(), t->tail.end());
  return Reduced{std::move(next), std::move(record)};
}

// ---------------------------------------------------------------------------
// Simplicial vertex reduction

namespace {

struct LabelsAt {
  std::size_t blocked = 0;
  std::size_t trim_required = 0;
  std::size_t path_required = 0;
  std::optional<Edge> trim_edge;
};

LabelsAt labels_at(const LabeledInstance& inst, Vertex v) {
  LabelsAt out;
  for (Vertex w : inst.graph.neighbors(v)) {
    const Edge e(v, w);
    if (inst.blocked.contains(e)) ++out.blocked;
    if (auto it = inst.required.find(e); it != inst.required.end()) {
      if (it->second == EdgeOrigin::kTrim) {
        ++out.trim_required;
        out.trim_edge = e;
      } else {
        ++out.path_required;
      }
    }
  }
  return out;
}

}  // namespace

RuleOutcome apply_simplicial_reduction(const LabeledInstance& inst) {
  const Graph& g = inst.graph;
  const auto bound = static_cast<std::size_t>(core_vertex_bound(inst.k));

  // Step 1.
  VertexSet s;
  for (Vertex v : simplicial_vertices(g)) {
    const LabelsAt at = labels_at(inst, v);
    if (at.path_required > 0) continue;
    if (at.trim_required > 0 && g.degree(v) - at.blocked != 1) continue;
    s.insert(v);
  }

  // Step 2.
  if (g.vertex_count() - s.size() > bound) {
    return NoAnswer{"simplicial: too many non-simplicial vertices"};
  }

  // Step 3.
  const std::vector<VertexSet> classes = true_twin_partition(g, s);
  std::vector<VertexSet> anchored(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (Vertex v : classes[i]) {
      if (labels_at(inst, v).trim_required > 0) anchored[i].insert(v);
    }
  }

  // Step 4.
  if (classes.size() > bound) {
    return NoAnswer{"simplicial: too many twin classes"};
  }

  // Step 5. Each anchored vertex has exactly one trim edge; its far ends
  // must coincide.
  std::vector<std::optional<Vertex>> anchor(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (Vertex v : anchored[i]) {
      const Vertex far = labels_at(inst, v).trim_edge->other(v);
      if (anchor[i] && *anchor[i] != far) {
        return NoAnswer{"simplicial: trim edges of a twin class diverge"};
      }
      anchor[i] = far;
    }
  }

  // Step 6.
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (!anchor[i]) continue;
    const std::size_t plain = classes[i].size() - anchored[i].size();
    if (plain < bound + 1) continue;
    for (Vertex x : classes[i]) {
      if (!anchored[i].contains(x) &&
          inst.blocked.contains(Edge(x, *anchor[i]))) {
        return NoAnswer{"simplicial: large twin class blocked from anchor"};
      }
    }
  }

  // Steps 7 and 8; the free choices drop the largest labels first.
  LabeledInstance next = inst;
  SimplicialRecord record;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    SimplicialClassRecord rec;
    rec.anchor = anchor[i];
    VertexSet members = classes[i];
    VertexSet anchored_left = anchored[i];
    while (anchored_left.size() > 1) {
      const Vertex v = *anchored_left.rbegin();
      anchored_left.erase(v);
      members.erase(v);
      rec.dropped_anchored.push_back(v);
      next.remove_vertex(v);
    }
    for (auto it = members.rbegin();
         members.size() - rec.dropped_twins.size() > bound + 1 &&
         it != members.rend();
         ++it) {
      if (anchored_left.contains(*it)) continue;
      rec.dropped_twins.push_back(*it);
      next.remove_vertex(*it);
    }
    for (Vertex v : rec.dropped_twins) members.erase(v);
    rec.survivors.assign(members.begin(), members.end());
    record.classes.push_back(std::move(rec));
  }
  return Reduced{std::move(next), std::move(record)};
}

}  // namespace sqroot
