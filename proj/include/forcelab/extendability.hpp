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

#ifndef FORCELAB_EXTENDABILITY_HPP_
#define FORCELAB_EXTENDABILITY_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "forcelab/graph.hpp"

namespace forcelab {

// g - v has a perfect matching for every v; odd order >= 1 required.
bool is_factor_critical(const Graph& g);

// At least one edge, and g - u - v has a perfect matching for all u != v.
bool is_bicritical(const Graph& g);

// 3-connected and bicritical.
bool is_brick(const Graph& g);

// Every matching of size l lies in a perfect matching. Throws DomainError
// when g is disconnected or has fewer than 2l + 2 vertices.
bool is_l_extendable(const Graph& g, int l);

struct DeficiencyComponent {
  std::vector<int> vertices;
  bool factor_critical = false;
};

// Certificate that g is not l-extendable: G[s] has l independent edges, all
// components of G - s are factor-critical, and o(G - s) = |s| - 2l + 2.
struct DeficiencyWitness {
  int l = 0;
  std::vector<int> s;
  std::vector<Edge> independent_edges;
  std::vector<DeficiencyComponent> components;
};

// Smallest witness (|s| ascending, lexicographic within a size), or nullopt
// when g is l-extendable. Throws DomainError unless l >= 1, g is
// (l-1)-extendable and has at least 2l + 2 vertices.
std::optional<DeficiencyWitness> deficiency_witness(const Graph& g, int l);

// Checks the witness invariants against g.
bool is_valid_deficiency_witness(const Graph& g, const DeficiencyWitness& w);

enum class Non2ExtCase { kTriangle, kSpecialPair };

std::string_view to_string(Non2ExtCase c);

// Labeled matching M = {u_k v_k}. Case kTriangle: G[{v_k}] is a triangle on
// the last three v's plus isolated vertices and G[{u_k}] has two independent
// edges. Case kSpecialPair: the last pair (u_n, v_n) is special,
// {v_1..v_{n-1}} is independent, G[{u_k} + v_n] has two independent edges,
// and v_i v_n, v_j u_n are edges (i, j index the first n - 1 pairs).
struct Non2ExtStructure {
  Non2ExtCase which = Non2ExtCase::kTriangle;
  PerfectMatching matching;
  std::vector<int> u;
  std::vector<int> v;
  int i = -1;
  int j = -1;
};

// Structural certificate of "1-extendable but not 2-extendable" for graphs
// with F = n - 1 outside K_{n,n}^+, searched over matchings that pass the
// pairwise alternating condition. nullopt iff g is 2-extendable. Throws
// DomainError when n < 3, F(g) < n - 1, or g is in K_{n,n}^+.
std::optional<Non2ExtStructure> non_2_extendable_structure(const Graph& g);

// Checks the labeled conditions of `s` against g (without the search).
bool satisfies_non2ext_conditions(const Graph& g, const Non2ExtStructure& s);

}  // namespace forcelab

#endif  // FORCELAB_EXTENDABILITY_HPP_
