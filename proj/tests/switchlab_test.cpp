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

#include <algorithm>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "forcelab/errors.hpp"
#include "forcelab/generators.hpp"
#include "forcelab/matching.hpp"
#include "forcelab/switchlab.hpp"

namespace forcelab {
namespace {

using fixtures::complete;
using fixtures::complete_bipartite;
using fixtures::cycle;
using fixtures::matching;

TEST(FourCyclesTest, Examples) {
  const Graph c6 = cycle(6);
  for (const auto& m : enumerate_perfect_matchings(c6)) {
    EXPECT_TRUE(alternating_4_cycles(c6, m).empty());
  }
  const Graph k4 = complete(4);
  const auto cs = alternating_4_cycles(k4, matching(k4, {{0, 1}, {2, 3}}));
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0].vertices, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(cs[1].vertices, (std::vector<int>{0, 1, 3, 2}));
  const Graph k33 = complete_bipartite(3, 3);
  const auto identity = matching(k33, {{0, 3}, {1, 4}, {2, 5}});
  const auto kc = alternating_4_cycles(k33, identity);
  EXPECT_EQ(kc.size(), 3u);
  for (const auto& c : kc) {
    EXPECT_TRUE(is_alternating_cycle(k33, identity, c));
    EXPECT_EQ(c.vertices[0], *std::min_element(c.vertices.begin(), c.vertices.end()));
    EXPECT_LT(c.vertices[1], c.vertices[3]);
  }
}

TEST(TwoSwitchTest, Examples) {
  const Graph k4 = complete(4);
  const auto m = matching(k4, {{0, 1}, {2, 3}});
  const AlternatingCycle c{{0, 1, 2, 3}};
  const auto s = two_switch(k4, m, c);
  EXPECT_EQ(s, matching(k4, {{1, 2}, {3, 0}}));
  EXPECT_EQ(two_switch(k4, s, c), m);
  const Graph c6 = cycle(6);
  const auto mc = matching(c6, {{0, 1}, {2, 3}, {4, 5}});
  EXPECT_THROW(two_switch(c6, mc, {{0, 1, 2, 3, 4, 5}}), ContractViolation);
  EXPECT_THROW(two_switch(c6, mc, {{0, 1, 2, 3}}), ContractViolation);
}

TEST(SwitchCycleBetweenTest, FindsTheDifference) {
  const Graph k4 = complete(4);
  const auto a = matching(k4, {{0, 1}, {2, 3}});
  const auto b = matching(k4, {{0, 2}, {1, 3}});
  const auto c = switch_cycle_between(a, b);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(two_switch(k4, a, *c), b);
  EXPECT_FALSE(switch_cycle_between(a, a).has_value());
  const Graph c6 = cycle(6);
  const auto ms = enumerate_perfect_matchings(c6);
  EXPECT_FALSE(switch_cycle_between(ms[0], ms[1]).has_value());
}

TEST(SwitchGraphTest, Examples) {
  const auto k33 = build_switch_graph(complete_bipartite(3, 3));
  EXPECT_EQ(k33.nodes.size(), 6u);
  for (const auto& adj : k33.adjacency) EXPECT_EQ(adj.size(), 3u);
  EXPECT_EQ(switch_component_count(k33), 1);

  const auto c6 = build_switch_graph(cycle(6));
  EXPECT_EQ(c6.nodes.size(), 2u);
  EXPECT_TRUE(c6.edges.empty());
  EXPECT_EQ(switch_component_count(c6), 2);

  const auto k4 = build_switch_graph(complete(4));
  EXPECT_EQ(k4.nodes.size(), 3u);
  EXPECT_EQ(k4.edges.size(), 3u);
  for (const auto& e : k4.edges) EXPECT_EQ(e.multiplicity, 1);
}

TEST(SwitchGraphTest, MultiplicityCountsDistinctCycles) {
  // The switched matching determines its 4-cycle, so multiplicity stays 1.
  const auto sg = build_switch_graph(complete(6));
  EXPECT_EQ(sg.nodes.size(), 15u);
  for (const auto& e : sg.edges) EXPECT_EQ(e.multiplicity, 1);
  for (const auto& adj : sg.adjacency) EXPECT_EQ(adj.size(), 6u);
}

TEST(SwitchGraphTest, StructuralInvariants) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = gen_random(8, 0.6, seed);
    if (!has_perfect_matching(g)) continue;
    const auto sg = build_switch_graph(g);
    EXPECT_EQ(sg.nodes.size(), count_perfect_matchings(g));
    EXPECT_TRUE(std::is_sorted(sg.nodes.begin(), sg.nodes.end()));
    for (std::size_t a = 0; a < sg.nodes.size(); ++a) {
      EXPECT_EQ(sg.index_of(sg.nodes[a]), static_cast<int>(a));
      EXPECT_TRUE(std::is_sorted(sg.adjacency[a].begin(), sg.adjacency[a].end()));
      for (int b : sg.adjacency[a]) {
        const auto& back = sg.adjacency[b];
        EXPECT_TRUE(std::binary_search(back.begin(), back.end(), static_cast<int>(a)));
        EXPECT_TRUE(switch_cycle_between(sg.nodes[a], sg.nodes[b]).has_value());
      }
    }
    EXPECT_TRUE(verify_switch_bound(sg).holds);
  }
}

TEST(SwitchGraphTest, ParallelMatchesReference) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_random(10, 0.55, seed);
    if (!has_perfect_matching(g)) continue;
    const auto serial = reference::build_switch_graph(g);
    for (int workers : {1, 3, 8}) {
      const auto parallel = build_switch_graph(g, {}, workers);
      EXPECT_EQ(parallel.nodes, serial.nodes);
      EXPECT_EQ(parallel.adjacency, serial.adjacency);
      EXPECT_EQ(parallel.edges, serial.edges);
      EXPECT_EQ(parallel.forcing, serial.forcing);
    }
  }
}

TEST(SwitchGraphTest, Overflow) {
  SolverLimits tight;
  tight.matching_cap = 5;
  EXPECT_THROW(build_switch_graph(complete_bipartite(3, 3), tight), MatchingOverflow);
}

TEST(SwitchPathTest, Examples) {
  const Graph k33g = complete_bipartite(3, 3);
  const auto k33 = build_switch_graph(k33g);
  for (const auto& a : k33.nodes) {
    for (const auto& b : k33.nodes) {
      const auto p = switch_path(k33, a, b);
      ASSERT_TRUE(p.has_value());
      EXPECT_LE(p->length(), 3);
      EXPECT_EQ(p->matchings.front(), a);
      EXPECT_EQ(p->matchings.back(), b);
      for (int s = 0; s < p->length(); ++s) {
        EXPECT_EQ(two_switch(k33g, p->matchings[s], p->cycles[s]), p->matchings[s + 1]);
      }
    }
  }
  const auto same = switch_path(k33, k33.nodes[2], k33.nodes[2]);
  ASSERT_TRUE(same.has_value());
  EXPECT_EQ(same->length(), 0);
  EXPECT_EQ(same->matchings.size(), 1u);

  const auto c6 = build_switch_graph(cycle(6));
  EXPECT_FALSE(switch_path(c6, c6.nodes[0], c6.nodes[1]).has_value());
  EXPECT_THROW(switch_path(c6, k33.nodes[0], c6.nodes[0]), DomainError);
}

TEST(SwitchPathTest, TiesBrokenByCanonicalOrder) {
  // Targets two steps away in K_6 have several midpoints; the lowest is taken.
  const auto sg = build_switch_graph(complete(6));
  for (std::size_t t = 1; t < sg.nodes.size(); ++t) {
    const auto p = switch_path(sg, sg.nodes[0], sg.nodes[t]);
    ASSERT_TRUE(p.has_value());
    if (p->length() == 2) {
      int lowest = -1;
      for (int mid : sg.adjacency[0]) {
        const auto& adj = sg.adjacency[mid];
        if (std::binary_search(adj.begin(), adj.end(), static_cast<int>(t))) {
          lowest = mid;
          break;
        }
      }
      EXPECT_EQ(p->matchings[1], sg.nodes[lowest]);
    }
  }
}

TEST(SwitchBoundTest, Examples) {
  EXPECT_TRUE(verify_switch_bound(build_switch_graph(complete_bipartite(3, 3))).holds);
  EXPECT_TRUE(verify_switch_bound(build_switch_graph(complete(4))).holds);
  SwitchGraph fake = build_switch_graph(complete(4));
  fake.forcing[1] = 3;
  const auto r = verify_switch_bound(fake);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.violating_edge.has_value());
  EXPECT_EQ(r.violating_edge->a, 0);
  EXPECT_EQ(r.violating_edge->b, 1);
}

TEST(ContinuityTest, Examples) {
  const auto h41 = verify_spectrum_continuity(gen_h_k(4, 1).graph);
  EXPECT_TRUE(h41.applicable);
  EXPECT_TRUE(h41.spectrum_continuous);
  EXPECT_TRUE(h41.reach_max);
  const auto k33 = verify_spectrum_continuity(complete_bipartite(3, 3));
  EXPECT_TRUE(k33.applicable);
  EXPECT_TRUE(k33.spectrum_continuous);
  const auto c6 = verify_spectrum_continuity(cycle(6));
  EXPECT_FALSE(c6.applicable);
  EXPECT_TRUE(c6.spectrum_continuous);
}

TEST(ReachTest, MultiSourceReach) {
  SwitchGraph sg = build_switch_graph(cycle(6));
  sg.forcing = {0, 1};
  const auto r = reaches_value(sg, 1);
  EXPECT_EQ(r, (std::vector<bool>{false, true}));
}

}  // namespace
}  // namespace forcelab
