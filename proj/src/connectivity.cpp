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

#include "forcelab/connectivity.hpp"

#include <algorithm>
#include <vector>

#include "forcelab/errors.hpp"

namespace forcelab {

std::vector<VertexMask> connected_components(const Graph& g, VertexMask alive) {
  std::vector<VertexMask> out;
  VertexMask left = alive & g.vertices();
  while (left) {
    VertexMask comp = bit(lowest(left));
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= g.row(lowest(f));
      next &= left & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) {
  return connected_components(g, g.vertices()).size() <= 1;
}

int odd_component_count(const Graph& g, VertexMask removed) {
  if (removed & ~g.vertices()) throw DomainError("removed set out of range");
  int odd = 0;
  for (VertexMask c : connected_components(g, g.vertices() & ~removed)) {
    if (popcount(c) % 2 == 1) ++odd;
  }
  return odd;
}

int local_vertex_connectivity(const Graph& g, int s, int t) {
  if (s == t || g.adjacent(s, t)) {
    throw DomainError("local connectivity needs distinct non-adjacent vertices");
  }
  // Vertex split: x_in = 2x, x_out = 2x + 1; unit capacity on x_in -> x_out.
  const int n = g.order();
  const int nodes = 2 * n;
  std::vector<int> cap(static_cast<std::size_t>(nodes) * nodes, 0);
  auto at = [&](int a, int b) -> int& {
    return cap[static_cast<std::size_t>(a) * nodes + b];
  };
  for (int x = 0; x < n; ++x) {
    at(2 * x, 2 * x + 1) = (x == s || x == t) ? n : 1;
    for (VertexMask r = g.row(x); r; r &= r - 1) {
      at(2 * x + 1, 2 * lowest(r)) = 1;
    }
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> parent(nodes);
  std::vector<int> queue(nodes);
  for (;;) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[source] = source;
    int head = 0;
    int tail = 0;
    queue[tail++] = source;
    while (head < tail && parent[sink] == -1) {
      const int a = queue[head++];
      for (int b = 0; b < nodes; ++b) {
        if (parent[b] == -1 && at(a, b) > 0) {
          parent[b] = a;
          queue[tail++] = b;
        }
      }
    }
    if (parent[sink] == -1) break;
    for (int b = sink; b != source; b = parent[b]) {
      --at(parent[b], b);
      ++at(b, parent[b]);
    }
    ++flow;
  }
  return flow;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (g.is_complete()) return n - 1;
  if (!is_connected(g)) return 0;
  int best = n - 1;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      best = std::min(best, local_vertex_connectivity(g, s, t));
    }
  }
  return best;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (int start = 0; start < g.order(); ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (VertexMask r = g.row(v); r; r &= r - 1) {
        const int w = lowest(r);
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace forcelab
