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

#ifndef FORCELAB_CONNECTIVITY_HPP_
#define FORCELAB_CONNECTIVITY_HPP_

#include <vector>

#include "forcelab/graph.hpp"

namespace forcelab {

// Components of g[alive], ordered by lowest vertex.
std::vector<VertexMask> connected_components(const Graph& g, VertexMask alive);

bool is_connected(const Graph& g);

// Number of odd-order components of g - removed.
int odd_component_count(const Graph& g, VertexMask removed);

// Maximum number of internally vertex-disjoint s-t paths for non-adjacent
// s != t.
int local_vertex_connectivity(const Graph& g, int s, int t);

// kappa(G): order-1 for complete graphs (0 for K_0, K_1), otherwise the
// minimum local connectivity over non-adjacent pairs.
int vertex_connectivity(const Graph& g);

bool is_bipartite(const Graph& g);

}  // namespace forcelab

#endif  // FORCELAB_CONNECTIVITY_HPP_
