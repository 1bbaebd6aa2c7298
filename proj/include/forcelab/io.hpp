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

#ifndef FORCELAB_IO_HPP_
#define FORCELAB_IO_HPP_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "forcelab/graph.hpp"

namespace forcelab {

enum class GraphFormat { kGraph6, kEdgeList };

GraphFormat parse_format(std::string_view name);

// graph6 without the ">>graph6<<" header, orders 0..62. A single trailing
// newline is accepted. Non-zero padding bits are rejected so that every
// accepted string re-serializes to itself.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// "order edge-count" header, then one "u v" pair per line. Lines starting
// with '#' are comments. Loops, duplicates, out-of-range vertices and a wrong
// edge count are errors.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// graph6 input may carry blank and '#' comment lines around the one graph.
Graph load_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

// One graph6 string per line; blank lines and '#' comments skipped.
std::vector<Graph> read_graph6_corpus(std::istream& in);

}  // namespace forcelab

#endif  // FORCELAB_IO_HPP_
