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
#include "forcelab/connectivity.hpp"
#include "forcelab/errors.hpp"
#include "forcelab/generators.hpp"
#include "forcelab/matching.hpp"
#include "oracles.hpp"

namespace forcelab {
namespace {

using fixtures::complete;
using fixtures::complete_bipartite;
using fixtures::cycle;
using fixtures::matching;
using fixtures::path;

std::vector<std::vector<Edge>> as_edge_lists(const std::vector<PerfectMatching>& ms) {
  std::vector<std::vector<Edge>> out;
  for (const auto& m : ms) out.push_back(fixtures::edge_vector(m.edges()));
  return out;
}

TEST(EnumerateMatchingsTest, Counts) {
  EXPECT_EQ(enumerate_perfect_matchings(complete_bipartite(3, 3)).size(), 6u);
  EXPECT_EQ(enumerate_perfect_matchings(complete(6)).size(), 15u);
  EXPECT_EQ(enumerate_perfect_matchings(cycle(6)).size(), 2u);
  EXPECT_TRUE(enumerate_perfect_matchings(complete(5)).empty());
  EXPECT_EQ(enumerate_perfect_matchings(Graph(0)).size(), 1u);
  EXPECT_EQ(count_perfect_matchings(complete(8)), 105u);
}

TEST(EnumerateMatchingsTest, LexicographicAndDuplicateFree) {
  const auto ms = enumerate_perfect_matchings(complete(8));
  EXPECT_TRUE(std::is_sorted(ms.begin(), ms.end()));
  EXPECT_EQ(std::adjacent_find(ms.begin(), ms.end()), ms.end());
}

TEST(EnumerateMatchingsTest, OverflowIsLoud) {
  EXPECT_THROW(enumerate_perfect_matchings(complete(8), 104), MatchingOverflow);
  EXPECT_NO_THROW(enumerate_perfect_matchings(complete(8), 105));
  EXPECT_THROW(count_perfect_matchings(complete_bipartite(4, 4), 23), MatchingOverflow);
}

TEST(EnumerateMatchingsTest, AgreesWithEdgeSubsetOracleOnSixVertices) {
  enumerate_labeled_graphs(6, [](const Graph& g) {
    EXPECT_EQ(as_edge_lists(enumerate_perfect_matchings(g)), oracle::perfect_matchings(g));
    return true;
  });
}

TEST(EnumerateMatchingsTest, AgreesWithOracleOnRandomEightVertexGraphs) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = gen_random(8, 0.55, seed);
    EXPECT_EQ(as_edge_lists(enumerate_perfect_matchings(g)), oracle::perfect_matchings(g));
  }
}

TEST(HasPerfectMatchingTest, Examples) {
  EXPECT_TRUE(has_perfect_matching(cycle(6)));
  EXPECT_FALSE(has_perfect_matching(fixtures::star(3)));
  EXPECT_TRUE(has_perfect_matching(gen_complete_multipartite({3, 2, 1})));
  EXPECT_TRUE(has_perfect_matching(Graph(0)));
  EXPECT_FALSE(has_perfect_matching(Graph(2)));
}

// Tutte: a perfect matching exists iff o(G - S) <= |S| for every S.
bool tutte_condition(const Graph& g) {
  for (VertexMask s = 0; s < (VertexMask{1} << g.order()); ++s) {
    if (odd_component_count(g, s) > popcount(s)) return false;
  }
  return true;
}

TEST(HasPerfectMatchingTest, AgreesWithEnumerationAndTutteOnSixVertices) {
  enumerate_labeled_graphs(6, [](const Graph& g) {
    const bool has = has_perfect_matching(g);
    EXPECT_EQ(has, !oracle::perfect_matchings(g).empty());
    EXPECT_EQ(has, tutte_condition(g));
    return true;
  });
}

TEST(HasPerfectMatchingTest, SubsetsAndMaximumMatching) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = gen_random(9, 0.35, seed);
    int best = 0;
    const auto edges = oracle::all_edges(g);
    // Maximum matching by brute force over edge subsets of bounded size.
    std::function<void(std::size_t, VertexMask, int)> rec = [&](std::size_t k, VertexMask used,
                                                                 int size) {
      best = std::max(best, size);
      for (; k < edges.size(); ++k) {
        if (!(edges[k].mask() & used)) rec(k + 1, used | edges[k].mask(), size + 1);
      }
    };
    rec(0, 0, 0);
    EXPECT_EQ(maximum_matching_size(g), best) << seed;
    const VertexMask alive = g.vertices() & ~bit(seed % 9);
    EXPECT_EQ(has_perfect_matching(g, alive),
              !oracle::perfect_matchings(oracle::delete_vertices(g, bit(seed % 9))).empty());
    if (auto mate = find_perfect_matching(g, alive)) {
      for (int v = 0; v < 9; ++v) {
        if (!(alive & bit(v))) {
          EXPECT_EQ((*mate)[v], -1);
        } else {
          EXPECT_TRUE(g.adjacent(v, (*mate)[v]));
          EXPECT_EQ((*mate)[(*mate)[v]], v);
        }
      }
    }
  }
}

TEST(FindAlternatingCycleTest, Examples) {
  const Graph c6 = cycle(6);
  for (const auto& m : enumerate_perfect_matchings(c6)) {
    const auto c = find_alternating_cycle(c6, m);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->length(), 6);
    EXPECT_TRUE(is_alternating_cycle(c6, m, *c));
  }
  const Graph p4 = path(4);
  EXPECT_FALSE(find_alternating_cycle(p4, matching(p4, {{0, 1}, {2, 3}})).has_value());
  const Graph k4 = complete(4);
  const auto m = matching(k4, {{0, 1}, {2, 3}});
  const auto c = find_alternating_cycle(k4, m);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->length(), 4);
  EXPECT_TRUE(is_alternating_cycle(k4, m, *c));
}

TEST(FindAlternatingCycleTest, RejectsForeignMatching) {
  const Graph k4 = complete(4);
  const auto m = matching(k4, {{0, 1}, {2, 3}});
  EXPECT_THROW(find_alternating_cycle(complete_bipartite(2, 2), m), ContractViolation);
  EXPECT_THROW(find_alternating_cycle(cycle(6), m), ContractViolation);
}

TEST(FindAlternatingCycleTest, AgreesWithExhaustiveSearchOnSixVertices) {
  enumerate_labeled_graphs(6, [](const Graph& g) {
    for (const auto& m : enumerate_perfect_matchings(g)) {
      const auto c = find_alternating_cycle(g, m);
      EXPECT_EQ(c.has_value(), oracle::has_alternating_cycle(g, fixtures::edge_vector(m.edges())));
      if (c) EXPECT_TRUE(is_alternating_cycle(g, m, *c));
    }
    return true;
  });
}

TEST(FindAlternatingCycleTest, AgreesWithExhaustiveSearchUpToTenVertices) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const int order = 8 + 2 * static_cast<int>(seed % 2);
    const Graph g = gen_random(order, 0.2 + 0.05 * static_cast<double>(seed % 5), seed);
    const auto ms = enumerate_perfect_matchings(g);
    for (std::size_t k = 0; k < ms.size(); k += 1 + ms.size() / 6) {
      const auto c = find_alternating_cycle(g, ms[k]);
      EXPECT_EQ(c.has_value(), oracle::has_alternating_cycle(g, fixtures::edge_vector(ms[k].edges())))
          << seed;
      if (c) EXPECT_TRUE(is_alternating_cycle(g, ms[k], *c));
    }
  }
}

TEST(ApplyCycleTest, Examples) {
  const Graph c6 = cycle(6);
  const auto m = matching(c6, {{0, 1}, {2, 3}, {4, 5}});
  const AlternatingCycle c{{0, 1, 2, 3, 4, 5}};
  const auto switched = apply_cycle(c6, m, c);
  EXPECT_EQ(switched, matching(c6, {{1, 2}, {3, 4}, {5, 0}}));
  EXPECT_EQ(apply_cycle(c6, switched, c), m);

  const Graph k4 = complete(4);
  const auto mk = matching(k4, {{0, 1}, {2, 3}});
  EXPECT_EQ(apply_cycle(k4, mk, {{0, 1, 2, 3}}), matching(k4, {{1, 2}, {3, 0}}));
  EXPECT_THROW(apply_cycle(k4, mk, {{0, 2, 1, 3}}), ContractViolation);
}

TEST(ApplyCycleTest, InvolutionOnFoundCycles) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = gen_random(8, 0.5, seed);
    for (const auto& m : enumerate_perfect_matchings(g)) {
      if (auto c = find_alternating_cycle(g, m)) {
        const auto other = apply_cycle(g, m, *c);
        EXPECT_NE(other, m);
        EXPECT_TRUE(is_perfect_matching(g, other.edges()));
        EXPECT_EQ(apply_cycle(g, other, *c), m);
      }
    }
  }
}

}  // namespace
}  // namespace forcelab
