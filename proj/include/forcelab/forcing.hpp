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

#ifndef FORCELAB_FORCING_HPP_
#define FORCELAB_FORCING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "forcelab/graph.hpp"
#include "forcelab/matching.hpp"

namespace forcelab {

inline constexpr std::size_t kDefaultCycleCap = 100'000;

struct SolverLimits {
  std::size_t matching_cap = kDefaultMatchingCap;
  std::size_t cycle_cap = kDefaultCycleCap;
};

// Subsets of a matching are bit masks over edge positions in m.edges().
using EdgeSet = std::uint64_t;

EdgeSet edge_set_of(const PerfectMatching& m, std::span<const Edge> edges);
std::vector<Edge> edges_of(const PerfectMatching& m, EdgeSet s);

struct ForcingCheck {
  bool forcing = false;
  // An M-alternating cycle avoiding V(S) when the set does not force.
  std::optional<AlternatingCycle> counterexample;
};

// S is forcing iff G - V(S) has no M-alternating cycle. Decided with a
// blossom augmenting-path search. Throws ContractViolation if s is not a
// subset of m or m is not perfect in g.
ForcingCheck is_forcing_set(const Graph& g, const PerfectMatching& m,
                            std::span<const Edge> s);

struct ForcingCertificate {
  PerfectMatching matching;
  int optimum = 0;
  std::vector<Edge> witness_set;
  // Disjoint-cycle lower bound the search started from.
  int lower_bound_used = 0;
  // False when the cycle cap was hit and only 4-cycles were packed.
  bool lower_bound_exact = true;
  int greedy_upper_bound = 0;
  std::int64_t nodes_explored = 0;
};

// Exact f(G, M). Candidate sets are searched by ascending cardinality from
// the cycle-packing bound, lexicographically within a cardinality; reaching
// the greedy bound returns the greedy set.
ForcingCertificate forcing_number(const Graph& g, const PerfectMatching& m,
                                  const SolverLimits& limits = {});

// Edge sets of all M-alternating cycles (each cycle once), or nullopt when
// more than `cap` cycles exist.
std::optional<std::vector<EdgeSet>> alternating_cycle_edge_sets(
    const Graph& g, const PerfectMatching& m, std::size_t cap);

// Inclusion-minimal members, sorted by size then value.
std::vector<EdgeSet> minimal_edge_sets(std::vector<EdgeSet> sets);

// Maximum number of pairwise disjoint members.
int max_disjoint_sets(std::span<const EdgeSet> sets);

// c(M). Throws CycleOverflow past limits.cycle_cap.
int cycle_packing_number(const Graph& g, const PerfectMatching& m,
                         const SolverLimits& limits = {});

struct CyclePackingBound {
  int value = 0;
  bool exact = true;
};

// c(M), or the 4-cycle packing (flagged inexact) beyond the cycle cap.
CyclePackingBound cycle_packing_bound(const Graph& g, const PerfectMatching& m,
                                      const SolverLimits& limits = {});

struct SpectrumReport {
  int order = 0;
  // Canonical matching order.
  std::vector<std::pair<PerfectMatching, int>> per_matching;
  std::vector<int> spectrum;
  int min_forcing = 0;
  int max_forcing = 0;
  bool continuous = true;

  std::size_t matching_count() const { return per_matching.size(); }
};

// Assembles the summary fields from per-matching values.
SpectrumReport make_spectrum_report(
    int order, std::vector<std::pair<PerfectMatching, int>> per_matching);

// f(G, M) for every perfect matching, evaluated on `workers` OpenMP threads
// (0: runtime default). Output is identical for every worker count. Throws
// DomainError when g has no perfect matching.
SpectrumReport forcing_profile(const Graph& g, const SolverLimits& limits = {},
                               int workers = 0);

namespace reference {

// Single-threaded loop over the same per-matching solver.
SpectrumReport forcing_profile(const Graph& g, const SolverLimits& limits = {});

}  // namespace reference

}  // namespace forcelab

#endif  // FORCELAB_FORCING_HPP_
