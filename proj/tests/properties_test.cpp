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

#include <gtest/gtest.h>

#include "forcelab/connectivity.hpp"
#include "instances.hpp"

namespace forcelab {
namespace {

TEST(PropertyTest, SpanningSubgraphNeverRaisesForcing) {
  const auto t = instances::spanning_subgraph_property(150, 11);
  EXPECT_EQ(t.checked, 150);
  EXPECT_EQ(t.failures, 0);
}

TEST(PropertyTest, MatchingPartitionIsSuperadditive) {
  const auto t = instances::matching_partition_property(150, 12);
  EXPECT_EQ(t.failures, 0);
}

TEST(PropertyTest, ForcingAgreesWithNaiveSearch) {
  const auto t = instances::forcing_vs_naive(60, 13);
  EXPECT_EQ(t.failures, 0);
}

TEST(PropertyTest, CycleSearchAgreesWithExhaustiveSearch) {
  const auto t = instances::alternating_cycle_vs_exhaustive(150, 14);
  EXPECT_EQ(t.failures, 0);
}

TEST(PropertyTest, ForcingAtLeastHalfConnectivityRoundedDown) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 100; ++i) {
    const auto [g, m] = instances::random_instance(rng, 10);
    EXPECT_GE(forcing_number(g, m).optimum, vertex_connectivity(g) / 2) << to_graph6(g);
  }
}

}  // namespace
}  // namespace forcelab
