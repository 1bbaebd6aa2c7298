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

#ifndef FORCELAB_MATCHING_HPP_
#define FORCELAB_MATCHING_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "forcelab/graph.hpp"

namespace forcelab {

inline constexpr std::size_t kDefaultMatchingCap = 1'000'000;

// Every perfect matching of g exactly once, in lexicographic order of the
// canonical edge sequence: the lowest uncovered vertex is matched first and
// its neighbours are tried in ascending order. Odd order yields nothing.
// Throws MatchingOverflow when more than `cap` matchings exist.
std::vector<PerfectMatching> enumerate_perfect_matchings(
    const Graph& g, std::size_t cap = kDefaultMatchingCap);

// Counts without materializing; throws MatchingOverflow past `cap`.
std::size_t count_perfect_matchings(const Graph& g,
                                    std::size_t cap = kDefaultMatchingCap);

// Maximum matching size of g restricted to `alive` (Edmonds' blossom search).
int maximum_matching_size(const Graph& g, VertexMask alive);
int maximum_matching_size(const Graph& g);

// Some perfect matching of g[alive], as a mate array over all of g's
// vertices (-1 outside `alive`), or nullopt.
std::optional<std::vector<int>> find_perfect_matching(const Graph& g,
                                                      VertexMask alive);

bool has_perfect_matching(const Graph& g, VertexMask alive);
bool has_perfect_matching(const Graph& g);

// Some M-alternating cycle of g, or nullopt. Throws ContractViolation when m
// is not a perfect matching of g.
std::optional<AlternatingCycle> find_alternating_cycle(const Graph& g,
                                                       const PerfectMatching& m);

// Same search restricted to g[alive]. `mate` must pair the alive vertices
// among themselves using edges of g; it is not validated.
std::optional<AlternatingCycle> find_alternating_cycle_within(
    const Graph& g, const std::vector<int>& mate, VertexMask alive);

// M xor E(C). Throws ContractViolation when c is not m-alternating in g.
PerfectMatching apply_cycle(const Graph& g, const PerfectMatching& m,
                            const AlternatingCycle& c);

}  // namespace forcelab

#endif  // FORCELAB_MATCHING_HPP_
