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

#ifndef FORCELAB_STRUCTURE_HPP_
#define FORCELAB_STRUCTURE_HPP_

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "forcelab/forcing.hpp"
#include "forcelab/graph.hpp"

namespace forcelab {

// Parts of a complete multipartite graph, each sorted, ordered by lowest
// vertex; nullopt when g is not complete multipartite (i.e. has an induced
// complement of P_3). Order 0 yields an empty partition.
std::optional<std::vector<std::vector<int>>> is_complete_multipartite(
    const Graph& g);

// K_{n,n} plus edges inside one side: A is independent of size n and fully
// joined to B = V \ A; extra_edges lie inside B.
struct KnnPlus {
  std::vector<int> a;
  std::vector<int> b;
  std::vector<Edge> extra_edges;
};

// Throws DomainError on odd order. Among valid choices of A, returns the one
// containing the lowest possible vertex.
std::optional<KnnPlus> is_knn_plus(const Graph& g);

struct PairFailure {
  Edge first;
  Edge second;
};

struct PairwiseResult {
  bool holds = true;
  std::optional<PairFailure> failing_pair;
};

// For every two matching edges u_i v_i, u_j v_j: {u_i u_j, v_i v_j} or
// {u_i v_j, v_i u_j} is in E(g). Equivalent to f(g, m) = n - 1.
PairwiseResult pairwise_alternating_condition(const Graph& g,
                                              const PerfectMatching& m);

// True iff every pair of matching edges induces exactly a 4-cycle.
bool pairs_induce_exact_four_cycles(const Graph& g, const PerfectMatching& m);

// First matching in canonical order that passes the pairwise condition.
std::optional<PerfectMatching> has_max_forcing_n_minus_1(
    const Graph& g, std::size_t matching_cap = kDefaultMatchingCap);

// Minimality test: some matching with f = n - 1 has every pair of its edges
// inducing exactly a 4-cycle. False when F(g) < n - 1 or g has no perfect
// matching.
bool is_minimal_max_forcing(const Graph& g,
                            std::size_t matching_cap = kDefaultMatchingCap);

// Same test quantified over every matching with f = n - 1 (false when none).
bool is_minimal_max_forcing_every(
    const Graph& g, std::size_t matching_cap = kDefaultMatchingCap);

enum class ClassTag { kCompleteMultipartite, kKnnPlus, kNeither };

std::string_view to_string(ClassTag tag);

struct ClassificationResult {
  ClassTag tag = ClassTag::kNeither;
  std::vector<std::vector<int>> partition;
  std::vector<int> side_a;
  std::vector<int> side_b;
  std::vector<Edge> extra_edges;
  bool predicted_min_forcing_is_max = false;
};

// Structural prediction of f(g) = n - 1. CompleteMultipartite wins when both
// recognizers fire. Throws DomainError on odd order or no perfect matching.
ClassificationResult classify_min_forcing(const Graph& g);

// Exact independence number.
int max_independent_set_size(const Graph& g);

// Lowest edge lying in every perfect matching, if any. Throws DomainError
// when g has no perfect matching.
std::optional<Edge> has_fixed_double_bond(const Graph& g);

}  // namespace forcelab

#endif  // FORCELAB_STRUCTURE_HPP_
