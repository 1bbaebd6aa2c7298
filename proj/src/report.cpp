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

#include "forcelab/report.hpp"

#include "forcelab/io.hpp"

namespace forcelab {

using nlohmann::ordered_json;

ordered_json edge_json(const Edge& e) { return ordered_json::array({e.u, e.v}); }

ordered_json edges_json(std::span<const Edge> edges) {
  ordered_json out = ordered_json::array();
  for (const Edge& e : edges) out.push_back(edge_json(e));
  return out;
}

ordered_json to_json(const ForcingCertificate& c) {
  return {
      {"matching", edges_json(c.matching.edges())},
      {"optimum", c.optimum},
      {"witness_set", edges_json(c.witness_set)},
      {"lower_bound_used", c.lower_bound_used},
      {"lower_bound_exact", c.lower_bound_exact},
      {"greedy_upper_bound", c.greedy_upper_bound},
      {"nodes_explored", c.nodes_explored},
  };
}

ordered_json to_json(const SpectrumReport& r) {
  ordered_json per = ordered_json::array();
  for (const auto& [m, f] : r.per_matching) {
    per.push_back({{"matching", edges_json(m.edges())}, {"forcing", f}});
  }
  return {
      {"order", r.order},
      {"matching_count", r.matching_count()},
      {"spectrum", r.spectrum},
      {"min", r.min_forcing},
      {"max", r.max_forcing},
      {"continuous", r.continuous},
      {"per_matching", std::move(per)},
  };
}

ordered_json to_json(const ClassificationResult& r) {
  ordered_json out = {{"tag", std::string(to_string(r.tag))}};
  if (r.tag == ClassTag::kCompleteMultipartite) out["partition"] = r.partition;
  if (r.tag == ClassTag::kKnnPlus) {
    out["side_a"] = r.side_a;
    out["side_b"] = r.side_b;
    out["extra_edges"] = edges_json(r.extra_edges);
  }
  out["predicted_min_forcing_is_max"] = r.predicted_min_forcing_is_max;
  return out;
}

ordered_json to_json(const DeficiencyWitness& w) {
  ordered_json comps = ordered_json::array();
  for (const auto& c : w.components) {
    comps.push_back({{"vertices", c.vertices}, {"factor_critical", c.factor_critical}});
  }
  return {
      {"l", w.l},
      {"s", w.s},
      {"independent_edges", edges_json(w.independent_edges)},
      {"components", std::move(comps)},
  };
}

ordered_json to_json(const Non2ExtStructure& s) {
  ordered_json out = {
      {"case", std::string(to_string(s.which))},
      {"matching", edges_json(s.matching.edges())},
      {"u", s.u},
      {"v", s.v},
  };
  if (s.which == Non2ExtCase::kSpecialPair) {
    out["i"] = s.i;
    out["j"] = s.j;
  }
  return out;
}

ordered_json to_json(const SwitchGraph& sg) {
  ordered_json nodes = ordered_json::array();
  for (std::size_t i = 0; i < sg.nodes.size(); ++i) {
    nodes.push_back({{"matching", edges_json(sg.nodes[i].edges())},
                     {"forcing", sg.forcing[i]},
                     {"neighbors", sg.adjacency[i]}});
  }
  ordered_json edges = ordered_json::array();
  for (const auto& e : sg.edges) {
    edges.push_back({{"a", e.a}, {"b", e.b}, {"multiplicity", e.multiplicity}});
  }
  return {{"order", sg.order}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

ordered_json to_json(const SwitchPath& p) {
  ordered_json steps = ordered_json::array();
  for (std::size_t i = 0; i < p.matchings.size(); ++i) {
    ordered_json step = {{"matching", edges_json(p.matchings[i].edges())}};
    step["cycle"] = i < p.cycles.size() ? ordered_json(p.cycles[i].vertices)
                                        : ordered_json(nullptr);
    steps.push_back(std::move(step));
  }
  return {{"length", p.length()}, {"steps", std::move(steps)}};
}

ordered_json to_json(const ContinuityResult& r) {
  return {{"applicable", r.applicable},
          {"spectrum_continuous", r.spectrum_continuous},
          {"reach_max", r.reach_max}};
}

ordered_json to_json(const LabeledGraph& g) {
  return {{"graph6", to_graph6(g.graph)},
          {"m0", edges_json(g.m0.edges())},
          {"u_side", g.u_side},
          {"v_side", g.v_side}};
}

std::string spectrum_csv(const SpectrumReport& r) {
  std::string out = "matching,forcing_number\n";
  for (const auto& [m, f] : r.per_matching) {
    for (std::size_t i = 0; i < m.edges().size(); ++i) {
      if (i) out += ' ';
      out += to_string(m.edges()[i]);
    }
    out += ',' + std::to_string(f) + '\n';
  }
  return out;
}

}  // namespace forcelab
