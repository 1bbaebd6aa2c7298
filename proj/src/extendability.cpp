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

#include "forcelab/extendability.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "forcelab/connectivity.hpp"
#include "forcelab/errors.hpp"
#include "forcelab/matching.hpp"
#include "forcelab/structure.hpp"

namespace forcelab {
namespace {

bool factor_critical_within(const Graph& g, VertexMask part) {
  if (popcount(part) % 2 == 0) return false;
  for (VertexMask r = part; r; r &= r - 1) {
    if (!has_perfect_matching(g, part & ~bit(lowest(r)))) return false;
  }
  return true;
}

// First `l` pairwise disjoint edges of g[within] in lexicographic order.
std::optional<std::vector<Edge>> independent_edges(const Graph& g,
                                                   VertexMask within, int l) {
  std::vector<Edge> pool;
  for (const Edge& e : g.edges()) {
    if ((e.mask() & within) == e.mask()) pool.push_back(e);
  }
  std::vector<Edge> chosen;
  std::function<bool(std::size_t, VertexMask)> rec = [&](std::size_t from,
                                                         VertexMask used) {
    if (static_cast<int>(chosen.size()) == l) return true;
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (pool[i].mask() & used) continue;
      chosen.push_back(pool[i]);
      if (rec(i + 1, used | pool[i].mask())) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(0, 0)) return std::nullopt;
  return chosen;
}

// Calls visit(s) for every l-subset of `edges` that is a matching; stops when
// visit returns false.
bool for_each_matching_of_size(const std::vector<Edge>& edges, int l,
                               const std::function<bool(VertexMask)>& visit) {
  std::function<bool(std::size_t, int, VertexMask)> rec =
      [&](std::size_t from, int left, VertexMask used) {
        if (left == 0) return visit(used);
        for (std::size_t i = from; i < edges.size(); ++i) {
          if (edges[i].mask() & used) continue;
          if (!rec(i + 1, left - 1, used | edges[i].mask())) return false;
        }
        return true;
      };
  return rec(0, l, 0);
}

// Vertex subsets of `universe` of size k in lexicographic order.
bool for_each_subset_of_size(int order, int k,
                             const std::function<bool(VertexMask)>& visit) {
  std::function<bool(int, int, VertexMask)> rec = [&](int from, int left,
                                                      VertexMask s) {
    if (left == 0) return visit(s);
    for (int v = from; v <= order - left; ++v) {
      if (!rec(v + 1, left - 1, s | bit(v))) return false;
    }
    return true;
  };
  return rec(0, k, 0);
}

bool induces_one_triangle_plus_isolated(const Graph& g, VertexMask side) {
  int twice = 0;
  int touched = 0;
  for (VertexMask r = side; r; r &= r - 1) {
    const int d = popcount(g.row(lowest(r)) & side);
    if (d != 0 && d != 2) return false;
    twice += d;
    if (d) ++touched;
  }
  return twice == 6 && touched == 3;
}

bool independent(const Graph& g, VertexMask side) {
  for (VertexMask r = side; r; r &= r - 1) {
    if (g.row(lowest(r)) & side) return false;
  }
  return true;
}

// Labels from an orientation mask: bit k set means edge k is (v, u) instead
// of (u, v) with u the smaller endpoint.
void orient(const PerfectMatching& m, unsigned orientation, std::vector<int>& u,
            std::vector<int>& v) {
  u.resize(m.size());
  v.resize(m.size());
  for (int k = 0; k < m.size(); ++k) {
    const Edge& e = m.edges()[k];
    const bool flip = (orientation >> k) & 1U;
    u[k] = flip ? e.v : e.u;
    v[k] = flip ? e.u : e.v;
  }
}

std::optional<Non2ExtStructure> match_triangle_case(const Graph& g,
                                                    const PerfectMatching& m) {
  const int n = m.size();
  if (n < 4) return std::nullopt;
  std::vector<int> u;
  std::vector<int> v;
  for (unsigned o = 0; o < (1U << n); ++o) {
    orient(m, o, u, v);
    VertexMask side_u = 0;
    VertexMask side_v = 0;
    for (int k = 0; k < n; ++k) {
      side_u |= bit(u[k]);
      side_v |= bit(v[k]);
    }
    if (!induces_one_triangle_plus_isolated(g, side_v)) continue;
    if (maximum_matching_size(g, side_u) < 2) continue;
    // Isolated pairs first, triangle pairs last.
    std::vector<int> order(n);
    for (int k = 0; k < n; ++k) order[k] = k;
    std::stable_partition(order.begin(), order.end(), [&](int k) {
      return (g.row(v[k]) & side_v) == 0;
    });
    Non2ExtStructure s;
    s.which = Non2ExtCase::kTriangle;
    s.matching = m;
    for (int k : order) {
      s.u.push_back(u[k]);
      s.v.push_back(v[k]);
    }
    return s;
  }
  return std::nullopt;
}

std::optional<Non2ExtStructure> match_special_pair_case(
    const Graph& g, const PerfectMatching& m) {
  const int n = m.size();
  std::vector<int> u;
  std::vector<int> v;
  for (int p = 0; p < n; ++p) {
    for (unsigned o = 0; o < (1U << n); ++o) {
      orient(m, o, u, v);
      VertexMask rest_v = 0;
      VertexMask side_u = 0;
      for (int k = 0; k < n; ++k) {
        side_u |= bit(u[k]);
        if (k != p) rest_v |= bit(v[k]);
      }
      if (!independent(g, rest_v)) continue;
      if (maximum_matching_size(g, side_u | bit(v[p])) < 2) continue;
      std::vector<int> order;
      for (int k = 0; k < n; ++k) {
        if (k != p) order.push_back(k);
      }
      order.push_back(p);
      int first_i = -1;
      int first_j = -1;
      for (int idx = 0; idx + 1 < n; ++idx) {
        const int k = order[idx];
        if (first_i < 0 && g.adjacent(v[k], v[p])) first_i = idx;
        if (first_j < 0 && g.adjacent(v[k], u[p])) first_j = idx;
      }
      if (first_i < 0 || first_j < 0) continue;
      Non2ExtStructure s;
      s.which = Non2ExtCase::kSpecialPair;
      s.matching = m;
      for (int k : order) {
        s.u.push_back(u[k]);
        s.v.push_back(v[k]);
      }
      s.i = first_i;
      s.j = first_j;
      return s;
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_factor_critical(const Graph& g) {
  if (g.order() % 2 == 0) return false;
  return factor_critical_within(g, g.vertices());
}

bool is_bicritical(const Graph& g) {
  if (g.edge_count() == 0 || g.order() % 2 != 0) return false;
  for (int a = 0; a < g.order(); ++a) {
    for (int b = a + 1; b < g.order(); ++b) {
      if (!has_perfect_matching(g, g.vertices() & ~bit(a) & ~bit(b))) {
        return false;
      }
    }
  }
  return true;
}

bool is_brick(const Graph& g) {
  return vertex_connectivity(g) >= 3 && is_bicritical(g);
}

bool is_l_extendable(const Graph& g, int l) {
  if (l < 0) throw DomainError("extendability level must be non-negative");
  if (g.order() < 2 * l + 2) {
    throw DomainError("l-extendability needs at least 2l + 2 vertices");
  }
  if (!is_connected(g)) throw DomainError("l-extendability needs a connected graph");
  if (!has_perfect_matching(g)) return false;
  const auto edges = g.edges();
  return for_each_matching_of_size(edges, l, [&](VertexMask used) {
    return has_perfect_matching(g, g.vertices() & ~used);
  });
}

std::optional<DeficiencyWitness> deficiency_witness(const Graph& g, int l) {
  if (l < 1) throw DomainError("deficiency witness needs l >= 1");
  if (g.order() < 2 * l + 2) {
    throw DomainError("deficiency witness needs at least 2l + 2 vertices");
  }
  if (!is_l_extendable(g, l - 1)) {
    throw DomainError("deficiency witness needs an (l-1)-extendable graph");
  }
  std::unordered_map<VertexMask, bool> critical_cache;
  auto critical = [&](VertexMask comp) {
    auto it = critical_cache.find(comp);
    if (it != critical_cache.end()) return it->second;
    const bool fc = factor_critical_within(g, comp);
    critical_cache.emplace(comp, fc);
    return fc;
  };

  std::optional<DeficiencyWitness> found;
  for (int size = 2 * l; size <= g.order() && !found; ++size) {
    for_each_subset_of_size(g.order(), size, [&](VertexMask s) {
      const auto comps = connected_components(g, g.vertices() & ~s);
      if (static_cast<int>(comps.size()) != size - 2 * l + 2) return true;
      for (VertexMask c : comps) {
        if (!critical(c)) return true;
      }
      auto edges = independent_edges(g, s, l);
      if (!edges) return true;
      DeficiencyWitness w;
      w.l = l;
      w.s = vertices_of(s);
      w.independent_edges = std::move(*edges);
      for (VertexMask c : comps) w.components.push_back({vertices_of(c), true});
      found = std::move(w);
      return false;
    });
  }
  return found;
}

bool is_valid_deficiency_witness(const Graph& g, const DeficiencyWitness& w) {
  const VertexMask s = mask_of(w.s);
  if (static_cast<int>(w.independent_edges.size()) != w.l) return false;
  VertexMask used = 0;
  for (const Edge& e : w.independent_edges) {
    if (!g.adjacent(e.u, e.v) || (e.mask() & ~s) || (e.mask() & used)) {
      return false;
    }
    used |= e.mask();
  }
  const auto comps = connected_components(g, g.vertices() & ~s);
  if (comps.size() != w.components.size()) return false;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (mask_of(w.components[i].vertices) != comps[i]) return false;
    if (!factor_critical_within(g, comps[i])) return false;
  }
  return odd_component_count(g, s) ==
         static_cast<int>(w.s.size()) - 2 * w.l + 2;
}

std::string_view to_string(Non2ExtCase c) {
  return c == Non2ExtCase::kTriangle ? "i" : "ii";
}

std::optional<Non2ExtStructure> non_2_extendable_structure(const Graph& g) {
  const int n = g.order() / 2;
  if (g.order() % 2 != 0 || n < 3) {
    throw DomainError("non-2-extendable structure needs even order >= 6");
  }
  if (!has_max_forcing_n_minus_1(g)) {
    throw DomainError("non-2-extendable structure needs F(G) = n - 1");
  }
  if (is_knn_plus(g)) {
    throw DomainError("non-2-extendable structure excludes K_{n,n}^+ graphs");
  }
  for (const auto& m : enumerate_perfect_matchings(g)) {
    if (!pairwise_alternating_condition(g, m).holds) continue;
    if (auto s = match_triangle_case(g, m)) return s;
    if (auto s = match_special_pair_case(g, m)) return s;
  }
  return std::nullopt;
}

bool satisfies_non2ext_conditions(const Graph& g, const Non2ExtStructure& s) {
  const int n = s.matching.size();
  if (static_cast<int>(s.u.size()) != n || static_cast<int>(s.v.size()) != n) {
    return false;
  }
  VertexMask side_u = 0;
  VertexMask side_v = 0;
  for (int k = 0; k < n; ++k) {
    if (!s.matching.contains(Edge(s.u[k], s.v[k]))) return false;
    side_u |= bit(s.u[k]);
    side_v |= bit(s.v[k]);
  }
  if (!pairwise_alternating_condition(g, s.matching).holds) return false;
  if (s.which == Non2ExtCase::kTriangle) {
    if (n < 4 || !induces_one_triangle_plus_isolated(g, side_v)) return false;
    for (int k = n - 3; k < n; ++k) {
      if (popcount(g.row(s.v[k]) & side_v) != 2) return false;
    }
    return maximum_matching_size(g, side_u) >= 2;
  }
  const int p = n - 1;
  if (!independent(g, side_v & ~bit(s.v[p]))) return false;
  if (maximum_matching_size(g, side_u | bit(s.v[p])) < 2) return false;
  if (s.i < 0 || s.j < 0 || s.i >= p || s.j >= p) return false;
  return g.adjacent(s.v[s.i], s.v[p]) && g.adjacent(s.v[s.j], s.u[p]);
}

}  // namespace forcelab
