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

#include "forcelab/forcing.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "forcelab/errors.hpp"
#include "forcelab/parallel.hpp"

namespace forcelab {
namespace {

void require_perfect(const Graph& g, const PerfectMatching& m) {
  if (m.order() != g.order() || !is_perfect_matching(g, m.edges())) {
    throw ContractViolation("matching is not a perfect matching of the graph");
  }
}

VertexMask vertices_of_edges(const PerfectMatching& m, EdgeSet s) {
  VertexMask out = 0;
  for (; s; s &= s - 1) out |= m.edges()[lowest(s)].mask();
  return out;
}

// Matching-edge pairs {i, j} whose four vertices carry an M-alternating
// 4-cycle (parallel or crossing pair of non-matching edges).
std::vector<EdgeSet> alternating_pairs(const Graph& g,
                                       const PerfectMatching& m) {
  std::vector<EdgeSet> out;
  const auto edges = m.edges();
  for (int i = 0; i < m.size(); ++i) {
    for (int j = i + 1; j < m.size(); ++j) {
      const auto [a, b] = edges[i];
      const auto [c, d] = edges[j];
      if ((g.adjacent(a, c) && g.adjacent(b, d)) ||
          (g.adjacent(a, d) && g.adjacent(b, c))) {
        out.push_back(bit(i) | bit(j));
      }
    }
  }
  return out;
}

class CycleEnumerator {
 public:
  CycleEnumerator(const Graph& g, const PerfectMatching& m, std::size_t cap)
      : g_(g), m_(m), cap_(cap), index_(g.order()) {
    for (int v = 0; v < g.order(); ++v) index_[v] = m.edge_index_of(v);
  }

  bool run() {
    for (int s = 0; s < g_.order(); ++s) {
      const int t = m_.mate(s);
      if (t < s) continue;
      start_ = s;
      allowed_ = g_.vertices() & ~low_mask(s + 1);
      if (!extend(t, bit(s) | bit(t), bit(index_[s]))) return false;
    }
    return true;
  }

  std::vector<EdgeSet>& sets() { return sets_; }

 private:
  // `x` was just entered through its matching edge; leave by a non-matching
  // edge. The lowest vertex of every cycle is its start, and the first step
  // is the start's matching edge, so each cycle is produced once.
  bool extend(int x, VertexMask visited, EdgeSet used) {
    const VertexMask next = g_.row(x) & ~bit(m_.mate(x));
    if ((next & bit(start_)) && m_.mate(x) != start_) {
      if (++found_ > cap_) return false;
      sets_.push_back(used);
    }
    for (VertexMask r = next & allowed_ & ~visited; r; r &= r - 1) {
      const int y = lowest(r);
      const int z = m_.mate(y);
      if (!(allowed_ & bit(z))) continue;
      if (!extend(z, visited | bit(y) | bit(z), used | bit(index_[y]))) {
        return false;
      }
    }
    return true;
  }

  const Graph& g_;
  const PerfectMatching& m_;
  std::size_t cap_;
  std::vector<int> index_;
  std::vector<EdgeSet> sets_;
  std::size_t found_ = 0;
  int start_ = 0;
  VertexMask allowed_ = 0;
};

// Exact minimum hitting set by cardinality-ascending, lexicographic search.
class ForcingSearch {
 public:
  // `hits` decides whether a candidate forces; `sets` (possibly empty) are
  // known cycle edge sets used to prune prefixes that can no longer hit one.
  ForcingSearch(int edge_count, std::span<const EdgeSet> sets,
                std::function<bool(EdgeSet)> forces)
      : edge_count_(edge_count), sets_(sets), forces_(std::move(forces)) {
    top_.reserve(sets.size());
    for (EdgeSet s : sets) top_.push_back(63 - std::countl_zero(s));
  }

  std::optional<EdgeSet> first_of_size(int k) {
    std::optional<EdgeSet> found;
    choose(0, k, 0, found);
    return found;
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  // True when some set lies entirely below `position` and misses `chosen`.
  bool dead(int position, EdgeSet chosen) const {
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (top_[i] < position && !(sets_[i] & chosen)) return true;
    }
    return false;
  }

  bool choose(int next, int left, EdgeSet chosen,
              std::optional<EdgeSet>& found) {
    ++nodes_;
    if (left == 0) {
      if (dead(edge_count_, chosen) || !forces_(chosen)) return false;
      found = chosen;
      return true;
    }
    for (int i = next; i <= edge_count_ - left; ++i) {
      if (dead(i, chosen)) break;
      if (choose(i + 1, left - 1, chosen | bit(i), found)) return true;
    }
    return false;
  }

  int edge_count_;
  std::span<const EdgeSet> sets_;
  std::function<bool(EdgeSet)> forces_;
  std::vector<int> top_;
  std::int64_t nodes_ = 0;
};

// Repeatedly adds the edge lying in the most live sets, lowest index on ties.
EdgeSet greedy_cover(int edge_count, std::span<const EdgeSet> sets,
                     EdgeSet chosen) {
  for (;;) {
    std::vector<int> score(edge_count, 0);
    bool live = false;
    for (EdgeSet s : sets) {
      if (s & chosen) continue;
      live = true;
      for (EdgeSet r = s; r; r &= r - 1) ++score[lowest(r)];
    }
    if (!live) return chosen;
    int best = 0;
    for (int i = 1; i < edge_count; ++i) {
      if (score[i] > score[best]) best = i;
    }
    chosen |= bit(best);
  }
}

}  // namespace

EdgeSet edge_set_of(const PerfectMatching& m, std::span<const Edge> edges) {
  EdgeSet s = 0;
  for (const Edge& e : edges) {
    if (!m.contains(e)) {
      throw ContractViolation("edge " + to_string(e) + " is not in the matching");
    }
    s |= bit(m.edge_index_of(e.u));
  }
  return s;
}

std::vector<Edge> edges_of(const PerfectMatching& m, EdgeSet s) {
  std::vector<Edge> out;
  for (; s; s &= s - 1) out.push_back(m.edges()[lowest(s)]);
  return out;
}

ForcingCheck is_forcing_set(const Graph& g, const PerfectMatching& m,
                            std::span<const Edge> s) {
  require_perfect(g, m);
  const EdgeSet chosen = edge_set_of(m, s);
  const VertexMask alive = g.vertices() & ~vertices_of_edges(m, chosen);
  auto cycle = find_alternating_cycle_within(g, m.mates(), alive);
  ForcingCheck out;
  out.forcing = !cycle.has_value();
  out.counterexample = std::move(cycle);
  return out;
}

std::optional<std::vector<EdgeSet>> alternating_cycle_edge_sets(
    const Graph& g, const PerfectMatching& m, std::size_t cap) {
  require_perfect(g, m);
  CycleEnumerator e(g, m, cap);
  if (!e.run()) return std::nullopt;
  return std::move(e.sets());
}

std::vector<EdgeSet> minimal_edge_sets(std::vector<EdgeSet> sets) {
  std::sort(sets.begin(), sets.end(), [](EdgeSet a, EdgeSet b) {
    const int pa = popcount(a);
    const int pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<EdgeSet> kept;
  for (EdgeSet s : sets) {
    const bool covered = std::any_of(kept.begin(), kept.end(), [s](EdgeSet k) {
      return (k & s) == k;
    });
    if (!covered) kept.push_back(s);
  }
  return kept;
}

int max_disjoint_sets(std::span<const EdgeSet> sets) {
  if (sets.empty()) return 0;
  EdgeSet universe = 0;
  int smallest = 64;
  for (EdgeSet s : sets) {
    universe |= s;
    smallest = std::min(smallest, popcount(s));
  }
  std::vector<std::vector<EdgeSet>> through(64);
  for (EdgeSet s : sets) {
    for (EdgeSet r = s; r; r &= r - 1) through[lowest(r)].push_back(s);
  }
  int best = 0;
  // Branch on the lowest still-available element that some fitting set uses:
  // either a set through it is taken, or the element stays uncovered.
  std::function<void(EdgeSet, int)> rec = [&](EdgeSet avail, int count) {
    if (count + popcount(avail) / smallest <= best) return;
    for (EdgeSet r = avail; r; r &= r - 1) {
      const int i = lowest(r);
      bool any = false;
      for (EdgeSet s : through[i]) {
        if ((s & avail) != s) continue;
        any = true;
        rec(avail & ~s, count + 1);
      }
      if (any) {
        rec(avail & ~bit(i), count);
        return;
      }
      avail &= ~bit(i);
    }
    best = std::max(best, count);
  };
  rec(universe, 0);
  return best;
}

int cycle_packing_number(const Graph& g, const PerfectMatching& m,
                         const SolverLimits& limits) {
  auto sets = alternating_cycle_edge_sets(g, m, limits.cycle_cap);
  if (!sets) throw CycleOverflow(limits.cycle_cap);
  return max_disjoint_sets(minimal_edge_sets(std::move(*sets)));
}

CyclePackingBound cycle_packing_bound(const Graph& g, const PerfectMatching& m,
                                      const SolverLimits& limits) {
  auto sets = alternating_cycle_edge_sets(g, m, limits.cycle_cap);
  if (sets) return {max_disjoint_sets(minimal_edge_sets(std::move(*sets))), true};
  return {max_disjoint_sets(alternating_pairs(g, m)), false};
}

ForcingCertificate forcing_number(const Graph& g, const PerfectMatching& m,
                                  const SolverLimits& limits) {
  require_perfect(g, m);
  ForcingCertificate cert;
  cert.matching = m;
  const int edge_count = m.size();
  if (edge_count <= 1) return cert;

  auto all_sets = alternating_cycle_edge_sets(g, m, limits.cycle_cap);
  const bool complete = all_sets.has_value();
  const std::vector<EdgeSet> sets =
      complete ? minimal_edge_sets(std::move(*all_sets)) : std::vector<EdgeSet>{};
  const std::vector<EdgeSet> pairs = alternating_pairs(g, m);

  auto blossom_forces = [&](EdgeSet s) {
    const VertexMask alive = g.vertices() & ~vertices_of_edges(m, s);
    return !find_alternating_cycle_within(g, m.mates(), alive).has_value();
  };
  auto hits_all = [&](EdgeSet s) {
    return std::all_of(sets.begin(), sets.end(),
                       [s](EdgeSet c) { return (c & s) != 0; });
  };

  // Greedy upper bound: live 4-cycles first, then the remaining cycles.
  EdgeSet greedy = greedy_cover(edge_count, pairs, 0);
  if (complete) {
    greedy = greedy_cover(edge_count, sets, greedy);
  } else {
    while (auto c = find_alternating_cycle_within(
               g, m.mates(), g.vertices() & ~vertices_of_edges(m, greedy))) {
      greedy |= bit(m.edge_index_of(c->vertices.front()));
    }
  }

  cert.lower_bound_exact = complete;
  cert.lower_bound_used = max_disjoint_sets(complete ? sets : pairs);
  cert.greedy_upper_bound = popcount(greedy);

  ForcingSearch search(
      edge_count, complete ? std::span<const EdgeSet>(sets) : pairs,
      complete ? std::function<bool(EdgeSet)>(hits_all)
               : std::function<bool(EdgeSet)>(blossom_forces));
  EdgeSet witness = greedy;
  for (int k = cert.lower_bound_used; k < cert.greedy_upper_bound; ++k) {
    if (auto found = search.first_of_size(k)) {
      witness = *found;
      break;
    }
  }
  cert.nodes_explored = search.nodes();
  cert.optimum = popcount(witness);
  cert.witness_set = edges_of(m, witness);
  return cert;
}

SpectrumReport make_spectrum_report(
    int order, std::vector<std::pair<PerfectMatching, int>> per_matching) {
  SpectrumReport r;
  r.order = order;
  r.per_matching = std::move(per_matching);
  for (const auto& [m, f] : r.per_matching) r.spectrum.push_back(f);
  std::sort(r.spectrum.begin(), r.spectrum.end());
  r.spectrum.erase(std::unique(r.spectrum.begin(), r.spectrum.end()),
                   r.spectrum.end());
  if (!r.spectrum.empty()) {
    r.min_forcing = r.spectrum.front();
    r.max_forcing = r.spectrum.back();
    r.continuous = static_cast<int>(r.spectrum.size()) ==
                   r.max_forcing - r.min_forcing + 1;
  }
  return r;
}

SpectrumReport forcing_profile(const Graph& g, const SolverLimits& limits,
                               int workers) {
  auto matchings = enumerate_perfect_matchings(g, limits.matching_cap);
  if (matchings.empty()) throw DomainError("graph has no perfect matching");
  std::vector<int> values(matchings.size());
  parallel_for(matchings.size(), workers, [&](std::size_t i) {
    values[i] = forcing_number(g, matchings[i], limits).optimum;
  });
  std::vector<std::pair<PerfectMatching, int>> per;
  per.reserve(matchings.size());
  for (std::size_t i = 0; i < matchings.size(); ++i) {
    per.emplace_back(std::move(matchings[i]), values[i]);
  }
  return make_spectrum_report(g.order(), std::move(per));
}

namespace reference {

SpectrumReport forcing_profile(const Graph& g, const SolverLimits& limits) {
  auto matchings = enumerate_perfect_matchings(g, limits.matching_cap);
  if (matchings.empty()) throw DomainError("graph has no perfect matching");
  std::vector<std::pair<PerfectMatching, int>> per;
  per.reserve(matchings.size());
  for (auto& m : matchings) {
    const int f = forcing_number(g, m, limits).optimum;
    per.emplace_back(std::move(m), f);
  }
  return make_spectrum_report(g.order(), std::move(per));
}

}  // namespace reference

}  // namespace forcelab
