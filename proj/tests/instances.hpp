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

// Seeded random instances shared by the property tests and the acceptance
// suite. Each checker returns how many instances it ran and how many failed.

#ifndef FORCELAB_TESTS_INSTANCES_HPP_
#define FORCELAB_TESTS_INSTANCES_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "forcelab/forcing.hpp"
#include "forcelab/graph.hpp"
#include "forcelab/io.hpp"
#include "forcelab/matching.hpp"
#include "oracles.hpp"

namespace forcelab::instances {

struct Tally {
  int checked = 0;
  int failures = 0;
  std::vector<std::string> examples;  // graph6 of the first few failures

  void record(bool ok, const Graph& g) {
    ++checked;
    if (ok) return;
    ++failures;
    if (examples.size() < 5) examples.push_back(to_graph6(g));
  }
};

// Random graph of even order in [4, max_order] with a planted perfect
// matching, and a uniformly chosen perfect matching of it.
struct Instance {
  Graph g;
  PerfectMatching m;
};

inline Instance random_instance(std::mt19937_64& rng, int max_order) {
  std::uniform_int_distribution<int> half(2, max_order / 2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int order = 2 * half(rng);
  const double p = 0.15 + 0.7 * unit(rng);
  Graph g(order);
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) {
      if (unit(rng) < p) g.add_edge(u, v);
    }
  }
  std::vector<int> perm(order);
  for (int v = 0; v < order; ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int k = 0; k < order; k += 2) {
    if (!g.adjacent(perm[k], perm[k + 1])) g.add_edge(perm[k], perm[k + 1]);
  }
  const auto all = enumerate_perfect_matchings(g);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return {g, all[pick(rng)]};
}

inline std::vector<Edge> edge_vector(const PerfectMatching& m) {
  return {m.edges().begin(), m.edges().end()};
}

// Removing edges outside M never raises f(G, M).
inline Tally spanning_subgraph_property(int count, std::uint64_t seed, int max_order = 10) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(0.5);
  Tally t;
  for (int i = 0; i < count; ++i) {
    const auto [g, m] = random_instance(rng, max_order);
    Graph sub(g.order());
    for (const Edge& e : g.edges()) {
      if (m.contains(e) || keep(rng)) sub.add_edge(e.u, e.v);
    }
    const int whole = forcing_number(g, m).optimum;
    const int part = forcing_number(sub, PerfectMatching(sub, edge_vector(m))).optimum;
    t.record(whole >= part, g);
  }
  return t;
}

// Splitting M into M1 and M2: f(G, M) >= f(G[V(M1)], M1) + f(G[V(M2)], M2).
inline Tally matching_partition_property(int count, std::uint64_t seed, int max_order = 10) {
  std::mt19937_64 rng(seed);
  Tally t;
  for (int i = 0; i < count; ++i) {
    const auto [g, m] = random_instance(rng, max_order);
    const int n = m.size();
    std::uniform_int_distribution<std::uint32_t> split(1, (1U << n) - 2);
    const std::uint32_t side = split(rng);
    int parts_sum = 0;
    for (int s = 0; s < 2; ++s) {
      std::vector<int> verts;
      for (int k = 0; k < n; ++k) {
        if (((side >> k) & 1U) == static_cast<std::uint32_t>(s)) {
          verts.push_back(m.edges()[k].u);
          verts.push_back(m.edges()[k].v);
        }
      }
      std::sort(verts.begin(), verts.end());
      const Graph h = induced_subgraph(g, verts);
      std::vector<Edge> mh;
      for (std::size_t a = 0; a < verts.size(); ++a) {
        const int mate = m.mate(verts[a]);
        const auto b = std::lower_bound(verts.begin(), verts.end(), mate) - verts.begin();
        if (static_cast<int>(a) < b) mh.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
      parts_sum += forcing_number(h, PerfectMatching(h, mh)).optimum;
    }
    t.record(forcing_number(g, m).optimum >= parts_sum, g);
  }
  return t;
}

// Exact solver against subset enumeration over all perfect matchings.
inline Tally forcing_vs_naive(int count, std::uint64_t seed, int max_order = 8) {
  std::mt19937_64 rng(seed);
  Tally t;
  for (int i = 0; i < count; ++i) {
    const auto [g, m] = random_instance(rng, max_order);
    const auto cert = forcing_number(g, m);
    const bool ok = cert.optimum == oracle::forcing_number(g, edge_vector(m)) &&
                    static_cast<int>(cert.witness_set.size()) == cert.optimum;
    t.record(ok, g);
  }
  return t;
}

// Blossom-based cycle search against exhaustive DFS, including the validity
// of the returned cycle.
inline Tally alternating_cycle_vs_exhaustive(int count, std::uint64_t seed, int max_order = 10) {
  std::mt19937_64 rng(seed);
  Tally t;
  for (int i = 0; i < count; ++i) {
    const auto [g, m] = random_instance(rng, max_order);
    const auto found = find_alternating_cycle(g, m);
    bool ok = found.has_value() == oracle::has_alternating_cycle(g, edge_vector(m));
    if (ok && found) ok = is_alternating_cycle(g, m, *found);
    t.record(ok, g);
  }
  return t;
}

}  // namespace forcelab::instances

#endif  // FORCELAB_TESTS_INSTANCES_HPP_
