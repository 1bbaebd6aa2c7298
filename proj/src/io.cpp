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

#include "forcelab/io.hpp"

#include <charconv>
#include <optional>
#include <set>
#include <string>

#include "forcelab/errors.hpp"

namespace forcelab {
namespace {

constexpr int kGraph6Bias = 63;
constexpr int kGraph6MaxOrder = 62;

std::string_view strip_newline(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  return text;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Splits a line into whitespace-separated integer fields, reporting byte
// offsets relative to `base`.
std::vector<long long> parse_fields(std::string_view line, std::size_t base,
                                    std::size_t line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j) {
      throw ParseError("malformed integer '" + std::string(line.substr(i, j - i)) +
                           "'",
                       base + i, line_no);
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

GraphFormat parse_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::kGraph6;
  if (name == "edge-list" || name == "edgelist") return GraphFormat::kEdgeList;
  throw DomainError("unknown graph format '" + std::string(name) + "'");
}

Graph parse_graph6(std::string_view text) {
  text = strip_newline(text);
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < kGraph6Bias || c > kGraph6Bias + 63) {
      throw ParseError("byte outside the graph6 range 63..126", i);
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - kGraph6Bias;
  if (n > kGraph6MaxOrder) {
    throw ParseError("graph6 orders above 62 are not supported", 0);
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t data_bytes = (bits + 5) / 6;
  if (text.size() != 1 + data_bytes) {
    throw ParseError("graph6 length " + std::to_string(text.size()) +
                         " does not match order " + std::to_string(n),
                     std::min(text.size(), 1 + data_bytes));
  }
  Graph g(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - kGraph6Bias;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  for (; k < data_bytes * 6; ++k) {
    const int byte = static_cast<unsigned char>(text[1 + k / 6]) - kGraph6Bias;
    if ((byte >> (5 - k % 6)) & 1) {
      throw ParseError("non-zero graph6 padding bit", 1 + k / 6);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw DomainError("graph6 output supports orders up to 62");
  }
  std::string out(1, static_cast<char>(n + kGraph6Bias));
  int acc = 0;
  int used = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + kGraph6Bias));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) {
    out.push_back(static_cast<char>((acc << (6 - used)) + kGraph6Bias));
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::size_t pos = 0;
  std::size_t line_no = 0;
  bool have_header = false;
  long long order = 0;
  long long expected = 0;
  long long seen_edges = 0;
  Graph g;
  std::set<Edge> edges;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    const std::size_t base = pos;
    ++line_no;
    pos = end + 1;

    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first == line.size() || line[first] == '#') continue;

    const auto fields = parse_fields(line, base, line_no);
    if (fields.size() != 2) {
      throw ParseError(have_header ? "expected 'u v'"
                                   : "expected header 'order edge-count'",
                       base + first, line_no);
    }
    if (!have_header) {
      order = fields[0];
      expected = fields[1];
      if (order < 0 || order > kMaxOrder) {
        throw ParseError("order out of range [0, 64]", base + first, line_no);
      }
      if (expected < 0 || expected > order * (order - 1) / 2) {
        throw ParseError("edge count out of range", base + first, line_no);
      }
      g = Graph(static_cast<int>(order));
      have_header = true;
      continue;
    }
    const long long u = fields[0];
    const long long v = fields[1];
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw ParseError("vertex index out of range", base + first, line_no);
    }
    if (u == v) {
      throw ParseError("loop at line " + std::to_string(line_no), base + first,
                       line_no);
    }
    const Edge e(static_cast<int>(u), static_cast<int>(v));
    if (!edges.insert(e).second) {
      throw ParseError("duplicate edge " + to_string(e), base + first, line_no);
    }
    g.add_edge(e.u, e.v);
    ++seen_edges;
  }
  if (!have_header) throw ParseError("missing edge-list header", 0);
  if (seen_edges != expected) {
    throw ParseError("header announces " + std::to_string(expected) +
                         " edges, found " + std::to_string(seen_edges),
                     text.size(), line_no);
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  const auto edges = g.edges();
  std::string out =
      std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (const Edge& e : edges) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

Graph load_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kEdgeList) return parse_edge_list(text);
  std::optional<Graph> g;
  std::size_t offset = 0;
  std::size_t line_no = 0;
  while (offset < text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line[0] != '#') {
      if (g) throw ParseError("more than one graph in input", offset, line_no);
      try {
        g = parse_graph6(line);
      } catch (const ParseError& e) {
        throw ParseError(e.message(), offset + e.offset(), line_no);
      }
    }
    offset = end + 1;
  }
  if (!g) throw ParseError("no graph in input", text.size(), line_no);
  return *g;
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::kGraph6 ? to_graph6(g) + "\n"
                                        : to_edge_list(g);
}

std::vector<Graph> read_graph6_corpus(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t line_no = 0;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t here = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("corpus: " + e.message(), here + e.offset(),
                       line_no);
    }
  }
  return out;
}

}  // namespace forcelab
