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

#ifndef FORCELAB_GENERATORS_HPP_
#define FORCELAB_GENERATORS_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "forcelab/extendability.hpp"
#include "forcelab/graph.hpp"

namespace forcelab {

// Graph with a designated perfect matching m0 = {u[i] v[i]}.
struct LabeledGraph {
  Graph graph;
  PerfectMatching m0;
  std::vector<int> u_side;
  std::vector<int> v_side;
};

enum class PairChoice { kParallel, kCross };

// Choice of 4-cycle for every pair of matching edges {i, j}, 0-based. Pairs
// not set explicitly are kCross.
class PairSignature {
 public:
  explicit PairSignature(int n);

  int n() const { return n_; }
  PairChoice get(int i, int j) const;
  void set(int i, int j, PairChoice c);

 private:
  int n_;
  std::map<std::pair<int, int>, PairChoice> parallel_;
};

// Parts are consecutive vertex ranges in the given order.
Graph gen_complete_multipartite(const std::vector<int>& sizes);

// K_{n,n} on A = {0..n-1}, B = {n..2n-1} plus `extra` edges inside B.
Graph gen_knn_plus(int n, const std::vector<Edge>& extra);

// u_i = i, v_i = n + i. Edges u_i v_i, plus u_i u_j and v_i v_j for parallel
// pairs or u_i v_j and v_i u_j for cross pairs.
LabeledGraph gen_minimal_from_signature(const PairSignature& sig);

// H_k: pairs (2i, 2i+1) for i < k are parallel and every other pair is
// cross. With exactly k u-side edges and every pair inducing an exact
// 4-cycle, the cross choice is forced for the remaining pairs.
LabeledGraph gen_h_k(int n, int k);

struct Non2ExtOptions {
  // Extra edges among u-side labels 0..n-1 (label indices, not vertices).
  // Case (i) needs two independent ones; empty selects {u0 u1, u2 u3}.
  std::vector<std::pair<int, int>> u_edges;
  // Case (ii) indices among the first n-1 pairs for v_i v_n and v_j u_n.
  int i = 0;
  int j = 1;
};

// Non-2-extendable graphs with F = n - 1 built on a K_{n,n}-style base.
// Case kTriangle: triangle on the last three v's plus the u-side edges; needs
// n >= 4. Case kSpecialPair: pair (i, n) parallel so that v_i v_n is an edge,
// pair (j, n) crossing so that v_j u_n is an edge; needs n >= 3.
LabeledGraph gen_non_2_extendable(Non2ExtCase which, int n,
                                  const Non2ExtOptions& options = {});

inline constexpr int kMaxUnfilteredEnumerationOrder = 6;

// Every labeled graph on `order` vertices by ascending edge mask, where bit
// k of the mask is the k-th pair in graph6 column order. Orders above 6 need
// a filter; returning false from `visit` stops the stream.
void enumerate_labeled_graphs(int order,
                              const std::function<bool(const Graph&)>& visit,
                              const std::function<bool(const Graph&)>& filter = {});

// Graph for a given edge mask in the enumeration above.
Graph labeled_graph_from_mask(int order, std::uint64_t mask);

// SplitMix64 stream; pairs (u, v), u < v, visited row-major; pair included
// iff (next() >> 11) * 2^-53 < p.
Graph gen_random(int order, double edge_probability, std::uint64_t seed);

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace forcelab

#endif  // FORCELAB_GENERATORS_HPP_
