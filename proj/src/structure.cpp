// Copyright 2026 The forcelab Authors
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

#include "forcelab/structure.hpp"

#include <algorithm>
#include <functional>

#include "forcelab/connectivity.hpp"
#include "forcelab/errors.hpp"
#include "forcelab/matching.hpp"

namespace forcelab {

std::optional<std::vector<std::vector<int>>> is_complete_multipartite(
    const Graph& g) {
  // Complete multipartite iff the complement is a disjoint union of cliques,
  // i.e. every complement component is independent in g.
  const Graph h = complement(g);
  std::vector<std::vector<int>> parts;
  for (VertexMask comp : connected_components(h, h.vertices())) {
    for (VertexMask r = comp; r; r &= r - 1) {
      if (g.row(lowest(r)) & comp) return std::nullopt;
    }
    parts.push_back(vertices_of(comp));
  }
  return parts;
}

std::optional<KnnPlus> is_knn_plus(const Graph& g) {
  if (g.order() % 2 != 0) throw DomainError("K_{n,n}^+ test needs even order");
  const int n = g.order() / 2;
  // A vertex of A is adjacent to exactly B, so A = V \ N(a) for any a in A.
  for (int a = 0; a < g.order(); ++a) {
    if (g.degree(a) != n) continue;
    const VertexMask side_b = g.row(a);
    const VertexMask side_a = g.vertices() & ~side_b;
    bool ok = true;
    for (VertexMask r = side_a; r && ok; r &= r - 1) {
      ok = g.row(lowest(r)) == side_b;
    }
    if (!ok) continue;
    KnnPlus out;
    out.a = vertices_of(side_a);
    out.b = vertices_of(side_b);
    for (const Edge& e : g.edges()) {
      if ((side_b & bit(e.u)) && (side_b & bit(e.v))) out.extra_edges.push_back(e);
    }
    return out;
  }
  if (n == 0) return KnnPlus{};
  return std::nullopt;
}

PairwiseResult pairwise_alternating_condition(const Graph& g,
                                              const PerfectMatching& m) {
  const auto edges = m.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [ui, vi] = edges[i];
      const auto [uj, vj] = edges[j];
      const bool parallel = g.adjacent(ui, uj) && g.adjacent(vi, vj);
      const bool cross = g.adjacent(ui, vj) && g.adjacent(vi, uj);
      if (!parallel && !cross) {
        return {false, PairFailure{edges[i], edges[j]}};
      }
    }
  }
  return {};
}

bool pairs_induce_exact_four_cycles(const Graph& g, const PerfectMatching& m) {
  if (!pairwise_alternating_condition(g, m).holds) return false;
  const auto edges = m.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const VertexMask four = edges[i].mask() | edges[j].mask();
      int twice = 0;
      for (VertexMask r = four; r; r &= r - 1) {
        twice += popcount(g.row(lowest(r)) & four);
      }
      if (twice != 8) return false;
    }
  }
  return true;
}

std::optional<PerfectMatching> has_max_forcing_n_minus_1(
    const Graph& g, std::size_t matching_cap) {
  for (auto& m : enumerate_perfect_matchings(g, matching_cap)) {
    if (pairwise_alternating_condition(g, m).holds) return std::move(m);
  }
  return std::nullopt;
}

bool is_minimal_max_forcing(const Graph& g, std::size_t matching_cap) {
  for (const auto& m : enumerate_perfect_matchings(g, matching_cap)) {
    if (pairs_induce_exact_four_cycles(g, m)) return true;
  }
  return false;
}

bool is_minimal_max_forcing_every(const Graph& g, std::size_t matching_cap) {
  bool any = false;
  for (const auto& m : enumerate_perfect_matchings(g, matching_cap)) {
    if (!pairwise_alternating_condition(g, m).holds) continue;
    any = true;
    if (!pairs_induce_exact_four_cycles(g, m)) return false;
  }
  return any;
}

std::string_view to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::kCompleteMultipartite:
      return "CompleteMultipartite";
    case ClassTag::kKnnPlus:
      return "KnnPlus";
    case ClassTag::kNeither:
      return "Neither";
  }
  return "Neither";
}

ClassificationResult classify_min_forcing(const Graph& g) {
  if (g.order() == 0 || g.order() % 2 != 0) {
    throw DomainError("classification needs positive even order");
  }
  if (!has_perfect_matching(g)) {
    throw DomainError("graph has no perfect matching");
  }
  const int n = g.order() / 2;
  ClassificationResult out;
  if (auto parts = is_complete_multipartite(g)) {
    const bool small = std::all_of(parts->begin(), parts->end(), [n](const auto& p) {
      return static_cast<int>(p.size()) <= n;
    });
    if (small && parts->size() >= 2) {
      out.tag = ClassTag::kCompleteMultipartite;
      out.partition = std::move(*parts);
    }
  }
  if (out.tag == ClassTag::kNeither) {
    if (auto knn = is_knn_plus(g)) {
      out.tag = ClassTag::kKnnPlus;
      out.side_a = std::move(knn->a);
      out.side_b = std::move(knn->b);
      out.extra_edges = std::move(knn->extra_edges);
    }
  }
  out.predicted_min_forcing_is_max = out.tag != ClassTag::kNeither;
  return out;
}

int max_independent_set_size(const Graph& g) {
  int best = 0;
  std::function<void(VertexMask, int)> rec = [&](VertexMask cand, int size) {
    if (cand == 0) {
      best = std::max(best, size);
      return;
    }
    if (size + popcount(cand) <= best) return;
    // Branch on a vertex of maximum degree within the candidates.
    int v = lowest(cand);
    int v_deg = -1;
    for (VertexMask r = cand; r; r &= r - 1) {
      const int w = lowest(r);
      const int d = popcount(g.row(w) & cand);
      if (d > v_deg) {
        v = w;
        v_deg = d;
      }
    }
    rec(cand & ~bit(v) & ~g.row(v), size + 1);
    if (v_deg > 0) rec(cand & ~bit(v), size);
  };
  rec(g.vertices(), 0);
  return best;
}

std::optional<Edge> has_fixed_double_bond(const Graph& g) {
  const auto mate = find_perfect_matching(g, g.vertices());
  if (!mate) throw DomainError("graph has no perfect matching");
  // Fixed edges lie in every perfect matching, so in this one.
  for (int u = 0; u < g.order(); ++u) {
    const int v = (*mate)[u];
    if (v < u) continue;
    Graph h = g;
    h.remove_edge(u, v);
    if (!has_perfect_matching(h)) return Edge(u, v);
  }
  return std::nullopt;
}

}  // namespace forcelab
