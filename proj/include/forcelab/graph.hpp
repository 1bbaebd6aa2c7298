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

#ifndef FORCELAB_GRAPH_HPP_
#define FORCELAB_GRAPH_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace forcelab {

// Vertex subsets are 64-bit masks; bit v is vertex v.
using VertexMask = std::uint64_t;

inline constexpr int kMaxOrder = 64;

constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

constexpr VertexMask low_mask(int order) {
  return order >= 64 ? ~VertexMask{0} : (VertexMask{1} << order) - 1;
}

constexpr int popcount(VertexMask m) { return std::popcount(m); }

// Index of the lowest set bit; undefined for m == 0.
constexpr int lowest(VertexMask m) { return std::countr_zero(m); }

VertexMask mask_of(std::span<const int> vertices);
std::vector<int> vertices_of(VertexMask m);

// Undirected edge stored as (min, max).
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(int w) const { return u == w || v == w; }
  int other(int w) const { return w == u ? v : u; }
  VertexMask mask() const { return bit(u) | bit(v); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

// Simple undirected graph on at most 64 vertices, stored as one adjacency
// bit-row per vertex. Rows are kept symmetric with an empty diagonal.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  Graph(int order, std::span<const Edge> edges);

  int order() const { return static_cast<int>(rows_.size()); }
  VertexMask vertices() const { return low_mask(order()); }
  VertexMask row(int v) const { return rows_[v]; }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  int degree(int v) const { return popcount(rows_[v]); }
  int edge_count() const;

  // Throws DomainError on loops or out-of-range endpoints. Adding an existing
  // edge is a no-op.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  // Edges in ascending (u, v) order.
  std::vector<Edge> edges() const;

  bool is_complete() const;
  bool is_regular(int degree) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  std::vector<VertexMask> rows_;
};

Graph complement(const Graph& g);

// Vertices are relabeled 0..|t|-1 in the order given by `t`.
Graph induced_subgraph(const Graph& g, std::span<const int> t);
Graph induced_subgraph(const Graph& g, VertexMask t);

// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

// Perfect matching of a host graph. Edges are kept sorted by smaller
// endpoint, which is the canonical order used for keys and enumeration.
class PerfectMatching {
 public:
  PerfectMatching() = default;

  // Validates every invariant against `g`; throws ContractViolation.
  PerfectMatching(const Graph& g, std::vector<Edge> edges);

  // Trusted construction from an already-valid sorted edge list.
  static PerfectMatching from_sorted_unchecked(int order,
                                               std::vector<Edge> edges);

  std::span<const Edge> edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  int order() const { return static_cast<int>(mate_.size()); }
  int mate(int v) const { return mate_[v]; }
  const std::vector<int>& mates() const { return mate_; }

  // Position of the edge covering `v` in edges().
  int edge_index_of(int v) const;

  bool contains(const Edge& e) const {
    return e.u < order() && mate_[e.u] == e.v;
  }

  friend bool operator==(const PerfectMatching& a, const PerfectMatching& b) {
    return a.edges_ == b.edges_;
  }
  friend auto operator<=>(const PerfectMatching& a, const PerfectMatching& b) {
    return a.edges_ <=> b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<int> mate_;
};

// True iff `edges` is a perfect matching of `g`.
bool is_perfect_matching(const Graph& g, std::span<const Edge> edges);

std::string to_string(const PerfectMatching& m);

// Closed walk v0 v1 ... v_{k-1} v0. Valid against (g, m) when all vertices
// are distinct, k is even and >= 4, every consecutive pair is an edge of g,
// and the pairs alternate between m and E(g) \ m.
struct AlternatingCycle {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  VertexMask mask() const;
  std::vector<Edge> edges() const;

  friend bool operator==(const AlternatingCycle&,
                         const AlternatingCycle&) = default;
};

bool is_alternating_cycle(const Graph& g, const PerfectMatching& m,
                          const AlternatingCycle& c);

}  // namespace forcelab

#endif  // FORCELAB_GRAPH_HPP_
