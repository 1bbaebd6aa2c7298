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

#include "forcelab/graph.hpp"

#include <algorithm>
#include <string>

#include "forcelab/errors.hpp"

namespace forcelab {

VertexMask mask_of(std::span<const int> vertices) {
  VertexMask m = 0;
  for (int v : vertices) m |= bit(v);
  return m;
}

std::vector<int> vertices_of(VertexMask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  for (; m; m &= m - 1) out.push_back(lowest(m));
  return out;
}

std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Graph::Graph(int order) {
  if (order < 0 || order > kMaxOrder) {
    throw DomainError("graph order " + std::to_string(order) +
                      " outside [0, 64]");
  }
  rows_.assign(order, 0);
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw DomainError("vertex " + std::to_string(v) + " out of range for order " +
                      std::to_string(order()));
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexMask r : rows_) twice += popcount(r);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (VertexMask r = rows_[u] & ~low_mask(u + 1); r; r &= r - 1) {
      out.emplace_back(u, lowest(r));
    }
  }
  return out;
}

bool Graph::is_complete() const {
  for (int v = 0; v < order(); ++v) {
    if (rows_[v] != (vertices() & ~bit(v))) return false;
  }
  return true;
}

bool Graph::is_regular(int degree) const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [degree](VertexMask r) { return popcount(r) == degree; });
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) h.add_edge(u, v);
    }
  }
  return h;
}

Graph induced_subgraph(const Graph& g, std::span<const int> t) {
  VertexMask seen = 0;
  for (int v : t) {
    if (v < 0 || v >= g.order()) {
      throw DomainError("vertex " + std::to_string(v) + " out of range");
    }
    if (seen & bit(v)) {
      throw DomainError("vertex " + std::to_string(v) + " repeated");
    }
    seen |= bit(v);
  }
  Graph h(static_cast<int>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (g.adjacent(t[i], t[j])) {
        h.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return h;
}

Graph induced_subgraph(const Graph& g, VertexMask t) {
  if (t & ~g.vertices()) throw DomainError("vertex set out of range");
  const auto vs = vertices_of(t);
  return induced_subgraph(g, vs);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph h(a.order() + b.order());
  for (const Edge& e : a.edges()) h.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) {
    h.add_edge(e.u + a.order(), e.v + a.order());
  }
  return h;
}

bool is_perfect_matching(const Graph& g, std::span<const Edge> edges) {
  if (edges.size() * 2 != static_cast<std::size_t>(g.order())) return false;
  VertexMask covered = 0;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= g.order() || e.u == e.v) return false;
    if (!g.adjacent(e.u, e.v)) return false;
    if (covered & e.mask()) return false;
    covered |= e.mask();
  }
  return covered == g.vertices();
}

PerfectMatching::PerfectMatching(const Graph& g, std::vector<Edge> edges) {
  if (!is_perfect_matching(g, edges)) {
    throw ContractViolation("edge set is not a perfect matching of the graph");
  }
  std::sort(edges.begin(), edges.end());
  *this = from_sorted_unchecked(g.order(), std::move(edges));
}

PerfectMatching PerfectMatching::from_sorted_unchecked(
    int order, std::vector<Edge> edges) {
  PerfectMatching m;
  m.mate_.assign(order, -1);
  for (const Edge& e : edges) {
    m.mate_[e.u] = e.v;
    m.mate_[e.v] = e.u;
  }
  m.edges_ = std::move(edges);
  return m;
}

int PerfectMatching::edge_index_of(int v) const {
  const int low = std::min(v, mate_[v]);
  const auto it = std::lower_bound(
      edges_.begin(), edges_.end(), low,
      [](const Edge& e, int key) { return e.u < key; });
  return static_cast<int>(it - edges_.begin());
}

std::string to_string(const PerfectMatching& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.edges().size(); ++i) {
    if (i) out += ",";
    out += to_string(m.edges()[i]);
  }
  return out + "}";
}

VertexMask AlternatingCycle::mask() const {
  return mask_of(vertices);
}

std::vector<Edge> AlternatingCycle::edges() const {
  std::vector<Edge> out;
  const int k = length();
  for (int i = 0; i < k; ++i) {
    out.emplace_back(vertices[i], vertices[(i + 1) % k]);
  }
  return out;
}

bool is_alternating_cycle(const Graph& g, const PerfectMatching& m,
                          const AlternatingCycle& c) {
  const int k = c.length();
  if (k < 4 || k % 2 != 0 || m.order() != g.order()) return false;
  VertexMask seen = 0;
  for (int v : c.vertices) {
    if (v < 0 || v >= g.order() || (seen & bit(v))) return false;
    seen |= bit(v);
  }
  // Parity of the first pair decides which positions carry matching edges.
  const bool first_in_m = m.mate(c.vertices[0]) == c.vertices[1];
  for (int i = 0; i < k; ++i) {
    const int a = c.vertices[i];
    const int b = c.vertices[(i + 1) % k];
    if (!g.adjacent(a, b)) return false;
    const bool want_m = (i % 2 == 0) == first_in_m;
    if ((m.mate(a) == b) != want_m) return false;
  }
  return true;
}

}  // namespace forcelab
