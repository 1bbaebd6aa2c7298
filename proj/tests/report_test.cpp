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

#include <cstdio>
#include <fstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "forcelab/errors.hpp"
#include "forcelab/io.hpp"
#include "forcelab/matching.hpp"
#include "forcelab/report.hpp"
#include "forcelab/verify.hpp"

namespace forcelab {
namespace {

using fixtures::complete_bipartite;
using fixtures::cycle;

TEST(ReportTest, SpectrumRecord) {
  const auto j = to_json(forcing_profile(complete_bipartite(3, 3)));
  EXPECT_EQ(j["order"], 6);
  EXPECT_EQ(j["matching_count"], 6);
  EXPECT_EQ(j["spectrum"], nlohmann::ordered_json::array({2}));
  EXPECT_EQ(j["min"], 2);
  EXPECT_EQ(j["max"], 2);
  EXPECT_EQ(j["continuous"], true);
  EXPECT_EQ(j["per_matching"][0]["matching"].dump(), "[[0,3],[1,4],[2,5]]");
  EXPECT_EQ(j["per_matching"][0]["forcing"], 2);
}

TEST(ReportTest, SpectrumCsv) {
  EXPECT_EQ(spectrum_csv(forcing_profile(cycle(6))),
            "matching,forcing_number\n0-1 2-3 4-5,1\n0-5 1-2 3-4,1\n");
}

TEST(ReportTest, ClassificationRecord) {
  const auto k = to_json(classify_min_forcing(gen_knn_plus(3, {{3, 4}})));
  EXPECT_EQ(k["tag"], "KnnPlus");
  EXPECT_EQ(k["side_a"].size(), 3u);
  EXPECT_EQ(k["side_b"].size(), 3u);
  EXPECT_EQ(k["extra_edges"].size(), 1u);
  const auto m = to_json(classify_min_forcing(gen_complete_multipartite({2, 2, 2})));
  EXPECT_EQ(m["tag"], "CompleteMultipartite");
  EXPECT_EQ(m["partition"].dump(), "[[0,1],[2,3],[4,5]]");
  EXPECT_EQ(to_json(classify_min_forcing(cycle(6)))["tag"], "Neither");
}

TEST(ReportTest, SwitchRecords) {
  const auto sg = build_switch_graph(fixtures::complete(4));
  const auto j = to_json(sg);
  EXPECT_EQ(j["nodes"].size(), 3u);
  EXPECT_EQ(j["nodes"][0]["neighbors"].dump(), "[1,2]");
  const auto p = switch_path(sg, sg.nodes[0], sg.nodes[2]);
  const auto pj = to_json(*p);
  EXPECT_EQ(pj["length"], 1);
  EXPECT_EQ(pj["steps"].size(), 2u);
  EXPECT_TRUE(pj["steps"][1]["cycle"].is_null());
}

TEST(ReportTest, WitnessRecords) {
  const auto lg = gen_non_2_extendable(Non2ExtCase::kTriangle, 4);
  const auto s = to_json(*non_2_extendable_structure(lg.graph));
  EXPECT_TRUE(s["case"] == "i" || s["case"] == "ii");
  EXPECT_TRUE(s["matching"].is_array());
  const auto w = to_json(*deficiency_witness(lg.graph, 2));
  EXPECT_EQ(w["l"], 2);
  EXPECT_TRUE(w["s"].is_array());
}

TEST(VerifyTest, TheoremSelection) {
  EXPECT_EQ(resolve_theorems({"thm33"}), std::vector<std::string>{"thm33"});
  EXPECT_EQ(resolve_theorems({"all"}), theorem_ids());
  EXPECT_EQ(resolve_theorems({"lem56", "thm13", "lem56"}),
            (std::vector<std::string>{"thm13", "lem56"}));
  EXPECT_THROW(resolve_theorems({"thm99"}), DomainError);
  EXPECT_THROW(resolve_theorems({}), DomainError);
}

TEST(VerifyTest, SmallCorpusAllBlocks) {
  const auto corpus = builtin_corpus("exhaustive-4");
  EXPECT_EQ(corpus.size(), 64u);
  const auto r = verify_corpus("exhaustive-4", corpus);
  EXPECT_EQ(r.graphs_total, 64);
  int with_pm = 0;
  for (const auto& g : corpus) with_pm += has_perfect_matching(g) ? 1 : 0;
  EXPECT_EQ(r.graphs_with_pm, with_pm);
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(r.blocks.size(), theorem_ids().size());
  for (const auto& b : r.blocks) {
    EXPECT_LE(b.passed, b.checked);
    EXPECT_EQ(b.counterexamples.empty(), b.passed == b.checked);
  }
}

TEST(VerifyTest, DeterministicAcrossWorkers) {
  const auto corpus = builtin_corpus("exhaustive-6");
  VerifyOptions one;
  one.workers = 1;
  one.theorems = {"thm33", "lem22", "lem56", "thm57"};
  VerifyOptions many = one;
  many.workers = 8;
  const auto a = to_json(verify_corpus("exhaustive-6", corpus, one), false).dump(2);
  const auto b = to_json(verify_corpus("exhaustive-6", corpus, many), false).dump(2);
  EXPECT_EQ(a, b);
}

TEST(VerifyTest, FileCorpusSkipsGraphsWithoutMatching) {
  const std::string path = ::testing::TempDir() + "forcelab_corpus.g6";
  {
    std::ofstream out(path);
    out << "# mixed\n" << to_graph6(complete_bipartite(3, 3)) << "\n"
        << to_graph6(fixtures::star(3)) << "\n" << to_graph6(cycle(6)) << "\n";
  }
  const auto corpus = load_corpus(path);
  ASSERT_EQ(corpus.size(), 3u);
  VerifyOptions opts;
  opts.theorems = {"thm33"};
  const auto r = verify_corpus(path, corpus, opts);
  EXPECT_EQ(r.graphs_total, 3);
  EXPECT_EQ(r.graphs_with_pm, 2);
  ASSERT_EQ(r.blocks.size(), 1u);
  EXPECT_EQ(r.blocks[0].checked, 2);
  EXPECT_EQ(r.blocks[0].passed, 2);
  const auto j = to_json(r, false);
  EXPECT_EQ(j["schema"], kReportSchema);
  EXPECT_FALSE(j["blocks"][0].contains("runtime_seconds"));
  EXPECT_TRUE(to_json(r, true)["blocks"][0].contains("runtime_seconds"));
  std::remove(path.c_str());
  EXPECT_THROW(load_corpus(path), std::runtime_error);
}

TEST(VerifyTest, BuiltinCorpora) {
  EXPECT_TRUE(is_builtin_corpus("exhaustive-6"));
  EXPECT_FALSE(is_builtin_corpus("exhaustive-7"));
  EXPECT_EQ(builtin_corpus("maxforcing-6").size(), 343u);
  EXPECT_EQ(builtin_corpus("random-8").size(), 10000u);
  const auto fam = builtin_corpus("families-10");
  for (const auto& g : fam) EXPECT_LE(g.order(), 10);
  EXPECT_THROW(builtin_corpus("nope"), DomainError);
}

}  // namespace
}  // namespace forcelab
