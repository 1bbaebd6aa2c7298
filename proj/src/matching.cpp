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

#include "forcelab/matching.hpp"

#include <algorithm>
#include <array>

#include "forcelab/errors.hpp"

namespace forcelab {
namespace {

// Edmonds' blossom search over a bit-row graph restricted to `alive`, with an
// optional excluded edge. Matching state is held in `match`.
class BlossomSearch {
 public:
  BlossomSearch(const Graph& g, VertexMask alive) : g_(g), alive_(alive) {
    match_.fill(-1);
  }

  void set_match(int u, int v) {
    match_[u] = v;
    match_[v] = u;
  }
  void clear_match(int v) { match_[v] = -1; }
  int match(int v) const { return match_[v]; }

  void exclude_edge(int a, int b) {
    excluded_a_ = a;
    excluded_b_ = b;
  }

  // Returns an exposed vertex reachable from `root` by an augmenting path,
  // or -1. On success the path can be read with path_to().
  int find_path(int root) {
    used_.fill(false);
    parent_.fill(-1);
    for (int i = 0; i < g_.order(); ++i) base_[i] = i;
    int head = 0;
    int tail = 0;
    used_[root] = true;
    queue_[tail++] = root;
    while (head < tail) {
      const int v = queue_[head++];
      for (VertexMask r = neighbors(v); r; r &= r - 1) {
        const int to = lowest(r);
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int cur = lca(v, to);
          blossom_.fill(false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (VertexMask a = alive_; a; a &= a - 1) {
            const int i = lowest(a);
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                queue_[tail++] = i;
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          queue_[tail++] = match_[to];
        }
      }
    }
    return -1;
  }

  // Vertices of the augmenting path ending at `end`, from `end` to the root.
  std::vector<int> path_to(int end) const {
    std::vector<int> path;
    for (int v = end; v != -1;) {
      const int pv = parent_[v];
      path.push_back(v);
      path.push_back(pv);
      v = match_[pv];
    }
    return path;
  }

  void augment(int end) {
    for (int v = end; v != -1;) {
      const int pv = parent_[v];
      const int ppv = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = ppv;
    }
  }

 private:
  VertexMask neighbors(int v) const {
    VertexMask r = g_.row(v) & alive_;
    if (v == excluded_a_) r &= ~bit(excluded_b_);
    if (v == excluded_b_) r &= ~bit(excluded_a_);
    return r;
  }

  int lca(int a, int b) {
    std::array<bool, kMaxOrder> seen{};
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = true;
      blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  const Graph& g_;
  VertexMask alive_;
  int excluded_a_ = -1;
  int excluded_b_ = -1;
  std::array<int, kMaxOrder> match_{};
  std::array<int, kMaxOrder> parent_{};
  std::array<int, kMaxOrder> base_{};
  std::array<bool, kMaxOrder> used_{};
  std::array<bool, kMaxOrder> blossom_{};
  std::array<int, kMaxOrder> queue_{};
};

BlossomSearch maximum_matching(const Graph& g, VertexMask alive) {
  BlossomSearch search(g, alive);
  for (VertexMask a = alive; a; a &= a - 1) {
    const int v = lowest(a);
    if (search.match(v) != -1) continue;
    for (VertexMask r = g.row(v) & alive; r; r &= r - 1) {
      const int w = lowest(r);
      if (search.match(w) == -1) {
        search.set_match(v, w);
        break;
      }
    }
  }
  for (VertexMask a = alive; a; a &= a - 1) {
    const int v = lowest(a);
    if (search.match(v) != -1) continue;
    const int end = search.find_path(v);
    if (end != -1) search.augment(end);
  }
  return search;
}

class MatchingEnumerator {
 public:
  MatchingEnumerator(const Graph& g, std::size_t cap, bool collect)
      : g_(g), cap_(cap), collect_(collect) {}

  void run() {
    if (g_.order() % 2 != 0) return;
    current_.reserve(g_.order() / 2);
    recurse(0);
  }

  std::size_t count() const { return count_; }
  std::vector<PerfectMatching>& matchings() { return out_; }

 private:
  void recurse(VertexMask covered) {
    const VertexMask free = g_.vertices() & ~covered;
    if (free == 0) {
      if (++count_ > cap_) throw MatchingOverflow(cap_);
      if (collect_) {
        out_.push_back(
            PerfectMatching::from_sorted_unchecked(g_.order(), current_));
      }
      return;
    }
    const int v = lowest(free);
    for (VertexMask r = g_.row(v) & free; r; r &= r - 1) {
      const int w = lowest(r);
      current_.emplace_back(v, w);
      recurse(covered | bit(v) | bit(w));
      current_.pop_back();
    }
  }

  const Graph& g_;
  std::size_t cap_;
  bool collect_;
  std::size_t count_ = 0;
  std::vector<Edge> current_;
  std::vector<PerfectMatching> out_;
};

}  // namespace

std::vector<PerfectMatching> enumerate_perfect_matchings(const Graph& g,
                                                         std::size_t cap) {
  MatchingEnumerator e(g, cap, true);
  e.run();
  return std::move(e.matchings());
}

std::size_t count_perfect_matchings(const Graph& g, std::size_t cap) {
  MatchingEnumerator e(g, cap, false);
  e.run();
  return e.count();
}

int maximum_matching_size(const Graph& g, VertexMask alive) {
  const BlossomSearch s = maximum_matching(g, alive);
  int matched = 0;
  for (VertexMask a = alive; a; a &= a - 1) {
    if (s.match(lowest(a)) != -1) ++matched;
  }
  return matched / 2;
}

int maximum_matching_size(const Graph& g) {
  return maximum_matching_size(g, g.vertices());
}

std::optional<std::vector<int>> find_perfect_matching(const Graph& g,
                                                      VertexMask alive) {
  if (popcount(alive) % 2 != 0) return std::nullopt;
  const BlossomSearch s = maximum_matching(g, alive);
  std::vector<int> mate(g.order(), -1);
  for (VertexMask a = alive; a; a &= a - 1) {
    const int v = lowest(a);
    if (s.match(v) == -1) return std::nullopt;
    mate[v] = s.match(v);
  }
  return mate;
}

bool has_perfect_matching(const Graph& g, VertexMask alive) {
  if (popcount(alive) % 2 != 0) return false;
  return maximum_matching_size(g, alive) * 2 == popcount(alive);
}

bool has_perfect_matching(const Graph& g) {
  return has_perfect_matching(g, g.vertices());
}

std::optional<AlternatingCycle> find_alternating_cycle_within(
    const Graph& g, const std::vector<int>& mate, VertexMask alive) {
  // A cycle through matching edge uv exists iff G - uv has an augmenting path
  // between u and v with respect to M - uv.
  for (VertexMask a = alive; a; a &= a - 1) {
    const int u = lowest(a);
    const int v = mate[u];
    if (v < u) continue;
    BlossomSearch search(g, alive);
    for (VertexMask b = alive; b; b &= b - 1) {
      const int x = lowest(b);
      if (x != u && x != v) search.set_match(x, mate[x]);
    }
    search.exclude_edge(u, v);
    const int end = search.find_path(u);
    if (end == -1) continue;
    return AlternatingCycle{search.path_to(end)};
  }
  return std::nullopt;
}

std::optional<AlternatingCycle> find_alternating_cycle(const Graph& g,
                                                       const PerfectMatching& m) {
  if (m.order() != g.order() || !is_perfect_matching(g, m.edges())) {
    throw ContractViolation("matching is not a perfect matching of the graph");
  }
  return find_alternating_cycle_within(g, m.mates(), g.vertices());
}

PerfectMatching apply_cycle(const Graph& g, const PerfectMatching& m,
                            const AlternatingCycle& c) {
  if (!is_alternating_cycle(g, m, c)) {
    throw ContractViolation("cycle is not alternating with respect to m");
  }
  const VertexMask on_cycle = c.mask();
  std::vector<Edge> edges;
  edges.reserve(m.size());
  for (const Edge& e : m.edges()) {
    if (!(e.mask() & on_cycle)) edges.push_back(e);
  }
  for (const Edge& e : c.edges()) {
    if (!m.contains(e)) edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end());
  return PerfectMatching::from_sorted_unchecked(g.order(), std::move(edges));
}

}  // namespace forcelab
