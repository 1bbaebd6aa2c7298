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

#ifndef FORCELAB_TESTS_FIXTURES_HPP_
#define FORCELAB_TESTS_FIXTURES_HPP_

#include <initializer_list>
#include <utility>
#include <vector>

#include "forcelab/graph.hpp"
#include "forcelab/generators.hpp"

namespace forcelab::fixtures {

inline Graph graph_of(int order, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete(int n) { return complement(Graph(n)); }

inline Graph complete_bipartite(int a, int b) {
  return gen_complete_multipartite({a, b});
}

inline Graph star(int leaves) { return complete_bipartite(1, leaves); }

// 2x3 grid: 0-1-2 over 3-4-5.
inline Graph grid_2x3() {
  return graph_of(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

inline PerfectMatching matching(const Graph& g,
                                std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> out;
  for (auto [u, v] : edges) out.emplace_back(u, v);
  return PerfectMatching(g, out);
}

inline std::vector<Edge> edge_vector(std::span<const Edge> edges) {
  return {edges.begin(), edges.end()};
}

}  // namespace forcelab::fixtures

#endif  // FORCELAB_TESTS_FIXTURES_HPP_
