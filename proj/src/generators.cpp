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

#include "forcelab/generators.hpp"

#include <set>
#include <string>

#include "forcelab/errors.hpp"
#include "forcelab/matching.hpp"

namespace forcelab {
namespace {

LabeledGraph labeled(Graph g, int n) {
  LabeledGraph out;
  std::vector<Edge> m0;
  for (int k = 0; k < n; ++k) {
    out.u_side.push_back(k);
    out.v_side.push_back(n + k);
    m0.emplace_back(k, n + k);
  }
  out.m0 = PerfectMatching(g, std::move(m0));
  out.graph = std::move(g);
  return out;
}

void check_pair_count(int n) {
  if (n < 1 || 2 * n > kMaxOrder) {
    throw DomainError("pair count n must lie in [1, 32]");
  }
}

}  // namespace

PairSignature::PairSignature(int n) : n_(n) { check_pair_count(n); }

PairChoice PairSignature::get(int i, int j) const {
  if (i > j) std::swap(i, j);
  const auto it = parallel_.find({i, j});
  return it == parallel_.end() ? PairChoice::kCross : it->second;
}

void PairSignature::set(int i, int j, PairChoice c) {
  if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw DomainError("signature pair (" + std::to_string(i) + ", " +
                      std::to_string(j) + ") invalid");
  }
  if (i > j) std::swap(i, j);
  parallel_[{i, j}] = c;
}

Graph gen_complete_multipartite(const std::vector<int>& sizes) {
  if (sizes.empty()) throw DomainError("multipartite sizes must be non-empty");
  int order = 0;
  std::vector<int> part;
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    if (sizes[p] <= 0) throw DomainError("partite set sizes must be positive");
    order += sizes[p];
    if (order > kMaxOrder) throw DomainError("multipartite order exceeds 64");
    part.insert(part.end(), sizes[p], static_cast<int>(p));
  }
  Graph g(order);
  for (int a = 0; a < order; ++a) {
    for (int b = a + 1; b < order; ++b) {
      if (part[a] != part[b]) g.add_edge(a, b);
    }
  }
  return g;
}

Graph gen_knn_plus(int n, const std::vector<Edge>& extra) {
  check_pair_count(n);
  Graph g(2 * n);
  for (int a = 0; a < n; ++a) {
    for (int b = n; b < 2 * n; ++b) g.add_edge(a, b);
  }
  std::set<Edge> seen;
  for (const Edge& e : extra) {
    if (e.u < n || e.v >= 2 * n || e.u == e.v) {
      throw DomainError("extra edge " + to_string(e) +
                        " must join two vertices of side B = [n, 2n)");
    }
    if (!seen.insert(e).second) {
      throw DomainError("duplicate extra edge " + to_string(e));
    }
    g.add_edge(e.u, e.v);
  }
  return g;
}

LabeledGraph gen_minimal_from_signature(const PairSignature& sig) {
  const int n = sig.n();
  Graph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, n + i);
    for (int j = i + 1; j < n; ++j) {
      if (sig.get(i, j) == PairChoice::kParallel) {
        g.add_edge(i, j);
        g.add_edge(n + i, n + j);
      } else {
        g.add_edge(i, n + j);
        g.add_edge(n + i, j);
      }
    }
  }
  return labeled(std::move(g), n);
}

LabeledGraph gen_h_k(int n, int k) {
  check_pair_count(n);
  if (k < 0 || k > (n - 1) / 2) {
    throw DomainError("H_k needs 0 <= k <= floor((n-1)/2); got n=" +
                      std::to_string(n) + ", k=" + std::to_string(k));
  }
  // u-side edges are exactly u_{2i} u_{2i+1} (i < k). Minimality makes each
  // pair an exact 4-cycle, so those pairs are parallel (bringing the matching
  // v-side edges) and every other pair, lacking a u-side edge, must cross.
  PairSignature sig(n);
  for (int i = 0; i < k; ++i) sig.set(2 * i, 2 * i + 1, PairChoice::kParallel);
  return gen_minimal_from_signature(sig);
}

LabeledGraph gen_non_2_extendable(Non2ExtCase which, int n,
                                  const Non2ExtOptions& options) {
  if (which == Non2ExtCase::kTriangle && n < 4) {
    throw DomainError("case (i) needs n >= 4");
  }
  if (which == Non2ExtCase::kSpecialPair && n < 3) {
    throw DomainError("case (ii) needs n >= 3");
  }
  check_pair_count(n);

  std::vector<std::pair<int, int>> u_edges = options.u_edges;
  if (which == Non2ExtCase::kTriangle && u_edges.empty()) {
    u_edges = {{0, 1}, {2, 3}};
  }
  Graph u_side(n);
  for (auto [a, b] : u_edges) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
      throw DomainError("u-side edge (" + std::to_string(a) + ", " +
                        std::to_string(b) + ") invalid");
    }
    u_side.add_edge(a, b);
  }

  // Cross base: every pair already carries an alternating 4-cycle.
  PairSignature sig(n);
  const int p = n - 1;
  if (which == Non2ExtCase::kSpecialPair) {
    if (options.i < 0 || options.j < 0 || options.i >= p || options.j >= p) {
      throw DomainError("case (ii) indices i, j must lie in [0, n-2]");
    }
    sig.set(options.i, p, PairChoice::kParallel);
  }
  Graph g = gen_minimal_from_signature(sig).graph;
  for (auto [a, b] : u_edges) g.add_edge(a, b);

  if (which == Non2ExtCase::kTriangle) {
    if (maximum_matching_size(u_side) < 2) {
      throw DomainError("case (i) needs two independent u-side edges");
    }
    g.add_edge(n + n - 3, n + n - 2);
    g.add_edge(n + n - 3, n + n - 1);
    g.add_edge(n + n - 2, n + n - 1);
  } else if (options.i == options.j) {
    // v_i u_n alongside the parallel pair's v_i v_n.
    g.add_edge(n + options.i, p);
  }
  return labeled(std::move(g), n);
}

Graph labeled_graph_from_mask(int order, std::uint64_t mask) {
  Graph g(order);
  int k = 0;
  for (int v = 1; v < order; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      if ((mask >> k) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

void enumerate_labeled_graphs(int order,
                              const std::function<bool(const Graph&)>& visit,
                              const std::function<bool(const Graph&)>& filter) {
  if (order < 0) throw DomainError("order must be non-negative");
  if (order > kMaxUnfilteredEnumerationOrder && !filter) {
    throw DomainError("refusing to enumerate all labeled graphs of order " +
                      std::to_string(order) + " without a filter");
  }
  if (order > 11) {
    throw DomainError("labeled enumeration supports orders up to 11");
  }
  const int pairs = order * (order - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const Graph g = labeled_graph_from_mask(order, mask);
    if (filter && !filter(g)) continue;
    if (!visit(g)) return;
  }
}

Graph gen_random(int order, double edge_probability, std::uint64_t seed) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw DomainError("edge probability must lie in [0, 1]");
  }
  Graph g(order);
  SplitMix64 rng(seed);
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) {
      if (rng.uniform() < edge_probability) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace forcelab
