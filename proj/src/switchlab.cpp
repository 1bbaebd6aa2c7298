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

#include "forcelab/switchlab.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

#include "forcelab/errors.hpp"
#include "forcelab/matching.hpp"
#include "forcelab/parallel.hpp"

namespace forcelab {
namespace {

// Rotates a 4-cycle given from its lowest vertex so that the lower of the
// two neighbours comes second.
AlternatingCycle canonical4(int a, int b, int c, int d) {
  if (b < d) return AlternatingCycle{{a, b, c, d}};
  return AlternatingCycle{{a, d, c, b}};
}

struct NodeLinks {
  std::vector<int> neighbors;  // ascending, deduplicated
  std::vector<int> multiplicity;
};

NodeLinks links_of(const Graph& g, const std::vector<PerfectMatching>& nodes,
                   std::size_t i) {
  std::vector<int> targets;
  for (const auto& c : alternating_4_cycles(g, nodes[i])) {
    const PerfectMatching next = two_switch(g, nodes[i], c);
    const auto it = std::lower_bound(nodes.begin(), nodes.end(), next);
    targets.push_back(static_cast<int>(it - nodes.begin()));
  }
  std::sort(targets.begin(), targets.end());
  NodeLinks out;
  for (int t : targets) {
    if (!out.neighbors.empty() && out.neighbors.back() == t) {
      ++out.multiplicity.back();
    } else {
      out.neighbors.push_back(t);
      out.multiplicity.push_back(1);
    }
  }
  return out;
}

SwitchGraph assemble(int order, std::vector<PerfectMatching> nodes,
                     std::vector<NodeLinks> links, std::vector<int> forcing) {
  SwitchGraph sg;
  sg.order = order;
  sg.nodes = std::move(nodes);
  sg.forcing = std::move(forcing);
  sg.adjacency.resize(sg.nodes.size());
  for (std::size_t a = 0; a < links.size(); ++a) {
    sg.adjacency[a] = links[a].neighbors;
    for (std::size_t k = 0; k < links[a].neighbors.size(); ++k) {
      const int b = links[a].neighbors[k];
      if (static_cast<int>(a) < b) {
        sg.edges.push_back({static_cast<int>(a), b, links[a].multiplicity[k]});
      }
    }
  }
  return sg;
}

}  // namespace

std::vector<AlternatingCycle> alternating_4_cycles(const Graph& g,
                                                   const PerfectMatching& m) {
  std::vector<AlternatingCycle> out;
  const auto edges = m.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [a, b] = edges[i];
      const auto [c, d] = edges[j];
      // a is the lowest of the four: a < b, a < c < d.
      if (g.adjacent(a, c) && g.adjacent(b, d)) out.push_back(canonical4(a, b, d, c));
      if (g.adjacent(a, d) && g.adjacent(b, c)) out.push_back(canonical4(a, b, c, d));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.vertices < y.vertices; });
  return out;
}

PerfectMatching two_switch(const Graph& g, const PerfectMatching& m,
                           const AlternatingCycle& c) {
  if (c.length() != 4 || !is_alternating_cycle(g, m, c)) {
    throw ContractViolation("not an alternating 4-cycle of the matching");
  }
  return apply_cycle(g, m, c);
}

std::optional<AlternatingCycle> switch_cycle_between(const PerfectMatching& a,
                                                     const PerfectMatching& b) {
  if (a.order() != b.order()) return std::nullopt;
  VertexMask moved = 0;
  for (const Edge& e : a.edges()) {
    if (!b.contains(e)) moved |= e.mask();
  }
  if (popcount(moved) != 4) return std::nullopt;
  const int x = lowest(moved);
  const int y = a.mate(x);
  const int z = b.mate(y);
  const int w = a.mate(z);
  if (b.mate(w) != x) return std::nullopt;
  return canonical4(x, y, z, w);
}

int SwitchGraph::index_of(const PerfectMatching& m) const {
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), m);
  if (it == nodes.end() || *it != m) return -1;
  return static_cast<int>(it - nodes.begin());
}

SwitchGraph build_switch_graph(const Graph& g, const SolverLimits& limits,
                               int workers) {
  auto nodes = enumerate_perfect_matchings(g, limits.matching_cap);
  if (nodes.empty()) throw DomainError("graph has no perfect matching");
  std::vector<NodeLinks> links(nodes.size());
  std::vector<int> forcing(nodes.size());
  parallel_for(nodes.size(), workers, [&](std::size_t i) {
    links[i] = links_of(g, nodes, i);
    forcing[i] = forcing_number(g, nodes[i], limits).optimum;
  });
  return assemble(g.order(), std::move(nodes), std::move(links),
                  std::move(forcing));
}

namespace reference {

SwitchGraph build_switch_graph(const Graph& g, const SolverLimits& limits) {
  auto nodes = enumerate_perfect_matchings(g, limits.matching_cap);
  if (nodes.empty()) throw DomainError("graph has no perfect matching");
  std::vector<NodeLinks> links;
  std::vector<int> forcing;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    links.push_back(links_of(g, nodes, i));
    forcing.push_back(forcing_number(g, nodes[i], limits).optimum);
  }
  return assemble(g.order(), std::move(nodes), std::move(links),
                  std::move(forcing));
}

}  // namespace reference

std::optional<SwitchPath> switch_path(const SwitchGraph& sg,
                                      const PerfectMatching& from,
                                      const PerfectMatching& to) {
  const int s = sg.index_of(from);
  const int t = sg.index_of(to);
  if (s < 0 || t < 0) throw DomainError("matching is not a switch-graph node");
  std::vector<int> parent(sg.nodes.size(), -1);
  parent[s] = s;
  std::deque<int> queue{s};
  while (!queue.empty() && parent[t] == -1) {
    const int a = queue.front();
    queue.pop_front();
    for (int b : sg.adjacency[a]) {
      if (parent[b] != -1) continue;
      parent[b] = a;
      queue.push_back(b);
    }
  }
  if (parent[t] == -1) return std::nullopt;
  std::vector<int> chain{t};
  while (chain.back() != s) chain.push_back(parent[chain.back()]);
  std::reverse(chain.begin(), chain.end());
  SwitchPath path;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    path.matchings.push_back(sg.nodes[chain[k]]);
    if (k > 0) {
      path.cycles.push_back(
          *switch_cycle_between(sg.nodes[chain[k - 1]], sg.nodes[chain[k]]));
    }
  }
  return path;
}

SwitchBoundResult verify_switch_bound(const SwitchGraph& sg) {
  for (const SwitchEdge& e : sg.edges) {
    if (std::abs(sg.forcing[e.a] - sg.forcing[e.b]) > 1) return {false, e};
  }
  return {};
}

std::vector<bool> reaches_value(const SwitchGraph& sg, int target) {
  std::vector<bool> seen(sg.nodes.size(), false);
  std::deque<int> queue;
  for (std::size_t i = 0; i < sg.nodes.size(); ++i) {
    if (sg.forcing[i] == target) {
      seen[i] = true;
      queue.push_back(static_cast<int>(i));
    }
  }
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    for (int b : sg.adjacency[a]) {
      if (!seen[b]) {
        seen[b] = true;
        queue.push_back(b);
      }
    }
  }
  return seen;
}

int switch_component_count(const SwitchGraph& sg) {
  std::vector<bool> seen(sg.nodes.size(), false);
  int count = 0;
  for (std::size_t s = 0; s < sg.nodes.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<int> stack{static_cast<int>(s)};
    seen[s] = true;
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int b : sg.adjacency[a]) {
        if (!seen[b]) {
          seen[b] = true;
          stack.push_back(b);
        }
      }
    }
  }
  return count;
}

ContinuityResult verify_spectrum_continuity(const SwitchGraph& sg) {
  std::vector<std::pair<PerfectMatching, int>> per;
  for (std::size_t i = 0; i < sg.nodes.size(); ++i) {
    per.emplace_back(sg.nodes[i], sg.forcing[i]);
  }
  const SpectrumReport report = make_spectrum_report(sg.order, std::move(per));
  const int top = sg.order / 2 - 1;
  ContinuityResult out;
  out.applicable = report.max_forcing == top;
  out.spectrum_continuous = report.continuous;
  if (out.applicable) {
    const auto reach = reaches_value(sg, top);
    out.reach_max = std::all_of(reach.begin(), reach.end(), [](bool b) { return b; });
  }
  return out;
}

ContinuityResult verify_spectrum_continuity(const Graph& g,
                                            const SolverLimits& limits,
                                            int workers) {
  return verify_spectrum_continuity(build_switch_graph(g, limits, workers));
}

}  // namespace forcelab
