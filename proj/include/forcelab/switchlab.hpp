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

#ifndef FORCELAB_SWITCHLAB_HPP_
#define FORCELAB_SWITCHLAB_HPP_

#include <optional>
#include <vector>

#include "forcelab/forcing.hpp"
#include "forcelab/graph.hpp"

namespace forcelab {

// All M-alternating 4-cycles, each once, rotated so the lowest vertex comes
// first followed by its lower cycle neighbour; sorted by vertex sequence.
std::vector<AlternatingCycle> alternating_4_cycles(const Graph& g,
                                                   const PerfectMatching& m);

// M xor E(C) for an M-alternating 4-cycle C; ContractViolation otherwise.
PerfectMatching two_switch(const Graph& g, const PerfectMatching& m,
                           const AlternatingCycle& c);

// Canonical 4-cycle carrying the switch between two matchings that differ in
// exactly two edges, or nullopt.
std::optional<AlternatingCycle> switch_cycle_between(const PerfectMatching& a,
                                                     const PerfectMatching& b);

struct SwitchEdge {
  int a = 0;
  int b = 0;
  // Number of distinct 4-cycles realizing this switch.
  int multiplicity = 1;

  friend bool operator==(const SwitchEdge&, const SwitchEdge&) = default;
};

// Perfect matchings of a graph linked by matching 2-switches.
struct SwitchGraph {
  int order = 0;
  std::vector<PerfectMatching> nodes;       // canonical order
  std::vector<std::vector<int>> adjacency;  // ascending neighbour indices
  std::vector<SwitchEdge> edges;            // a < b, sorted
  std::vector<int> forcing;                 // f(G, nodes[i])

  // Index of m in nodes, or -1.
  int index_of(const PerfectMatching& m) const;
};

// Builds nodes, edges and forcing annotations on `workers` OpenMP threads;
// the result does not depend on the worker count.
SwitchGraph build_switch_graph(const Graph& g, const SolverLimits& limits = {},
                               int workers = 0);

namespace reference {
SwitchGraph build_switch_graph(const Graph& g, const SolverLimits& limits = {});
}  // namespace reference

struct SwitchPath {
  std::vector<PerfectMatching> matchings;
  std::vector<AlternatingCycle> cycles;  // cycles[i] turns matchings[i] into matchings[i+1]

  int length() const { return static_cast<int>(cycles.size()); }
};

// Shortest path by BFS, neighbours visited in canonical order. nullopt iff
// the endpoints lie in different components. Throws DomainError when an
// endpoint is not a node.
std::optional<SwitchPath> switch_path(const SwitchGraph& sg,
                                      const PerfectMatching& from,
                                      const PerfectMatching& to);

struct SwitchBoundResult {
  bool holds = true;
  std::optional<SwitchEdge> violating_edge;
};

// |f(a) - f(b)| <= 1 on every switch edge.
SwitchBoundResult verify_switch_bound(const SwitchGraph& sg);

// Nodes from which some node with f = target is reachable.
std::vector<bool> reaches_value(const SwitchGraph& sg, int target);

int switch_component_count(const SwitchGraph& sg);

struct ContinuityResult {
  bool applicable = false;           // F(G) = n - 1
  bool spectrum_continuous = false;
  bool reach_max = false;            // every matching reaches an f = n - 1 node
};

ContinuityResult verify_spectrum_continuity(const SwitchGraph& sg);
ContinuityResult verify_spectrum_continuity(const Graph& g,
                                            const SolverLimits& limits = {},
                                            int workers = 0);

}  // namespace forcelab

#endif  // FORCELAB_SWITCHLAB_HPP_
