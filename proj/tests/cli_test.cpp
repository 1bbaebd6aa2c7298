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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "forcelab/graph.hpp"
#include "forcelab/io.hpp"

namespace forcelab {
namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded.
RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + FORCELAB_CLI_PATH + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

const char* kK33 = "6 9\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n";
const char* kC6 = "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n";

TEST(CliTest, AnalyzeCompleteBipartite) {
  const auto path = write_temp("k33.txt", kK33);
  const auto r = run("analyze --format edge-list " + path);
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "forcelab-report/1");
  EXPECT_EQ(j["profile"]["spectrum"], nlohmann::json::array({2}));
  EXPECT_EQ(j["classification"]["tag"], "CompleteMultipartite");
  EXPECT_EQ(j["switch"]["nodes"], 6);
  EXPECT_EQ(j["switch"]["components"], 1);
}

TEST(CliTest, AnalyzeCycleFromStdin) {
  const auto path = write_temp("c6.txt", kC6);
  const auto r = run("analyze --format edge-list --profile - < " + path);
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["profile"]["spectrum"], nlohmann::json::array({1}));
  EXPECT_EQ(j["classification"]["tag"], "Neither");
  EXPECT_FALSE(j.contains("switch"));
}

TEST(CliTest, CsvSpectrum) {
  const auto path = write_temp("c6csv.txt", kC6);
  const auto r = run("analyze --format edge-list --profile --csv " + path);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "matching,forcing_number\n0-1 2-3 4-5,1\n0-5 1-2 3-4,1\n");
}

TEST(CliTest, ExitCodes) {
  const auto odd = write_temp("odd.txt", "3 2\n0 1\n1 2\n");
  EXPECT_EQ(run("analyze --format edge-list " + odd).exit_code, 2);
  const auto bad = write_temp("bad.txt", "3 1\n0 7\n");
  EXPECT_EQ(run("analyze --format edge-list " + bad).exit_code, 1);
  EXPECT_EQ(run("analyze " + ::testing::TempDir() + "missing.g6").exit_code, 1);
  EXPECT_EQ(run("generate hk --n 4 --k 3").exit_code, 1);
  const auto k33 = write_temp("k33cap.txt", kK33);
  EXPECT_EQ(run("analyze --format edge-list --profile " + k33, "FORCELAB_MATCHING_CAP=2").exit_code,
            3);
  EXPECT_EQ(run("verify --corpus " + ::testing::TempDir() + "missing.g6").exit_code, 1);
  EXPECT_EQ(run("verify --corpus exhaustive-2 --theorems thm99").exit_code, 1);
}

TEST(CliTest, GenerateHk) {
  const auto r = run("generate hk --n 6 --k 2");
  ASSERT_EQ(r.exit_code, 0);
  const auto nl = r.out.find('\n');
  ASSERT_EQ(r.out.rfind("# m0:", 0), 0u);
  const Graph g = parse_graph6(r.out.substr(nl + 1, r.out.find('\n', nl + 1) - nl - 1));
  EXPECT_EQ(g.order(), 12);
  EXPECT_TRUE(g.is_regular(6));
}

TEST(CliTest, GenerateMultipartite) {
  const auto r = run("generate multipartite --sizes 2,2,2 --format edge-list");
  ASSERT_EQ(r.exit_code, 0);
  const Graph g = parse_edge_list(r.out);
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.edge_count(), 12);
}

TEST(CliTest, GenerateAnalyzeRoundTrip) {
  const char* families[] = {
      "multipartite --sizes 1,2,3",
      "knnplus --n 3 --extra 3-4",
      "hk --n 5 --k 1",
      "signature --n 4 --parallel 0-1,2-3",
      "non2ext --case i --n 4",
      "non2ext --case ii --n 4",
      "random --order 8 --p 0.6 --seed 3",
  };
  for (const char* fam : families) {
    const auto gen = run(std::string("generate ") + fam);
    ASSERT_EQ(gen.exit_code, 0) << fam;
    const auto path = write_temp("roundtrip.g6", gen.out);
    const auto r = run("analyze --classify " + path);
    EXPECT_TRUE(r.exit_code == 0 || r.exit_code == 2) << fam;
    if (r.exit_code == 0) {
      EXPECT_NO_THROW((void)nlohmann::json::parse(r.out)) << fam;
    }
  }
}

TEST(CliTest, VerifySelectsBlocks) {
  std::string corpus;
  for (const char* g6 : {"EFz_", "C~", "Ch"}) corpus += std::string(g6) + "\n";
  const auto path = write_temp("corpus.g6", corpus);
  const auto r = run("verify --corpus " + path + " --theorems thm33");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["blocks"].size(), 1u);
  EXPECT_EQ(j["blocks"][0]["id"], "thm33");
  EXPECT_EQ(j["graphs_total"], 3);
  EXPECT_EQ(j["blocks"][0]["checked"], 3);
  EXPECT_TRUE(j["all_passed"]);
}

TEST(CliTest, OutputIndependentOfWorkers) {
  const auto one = run("verify --corpus exhaustive-4 --workers 1");
  const auto many = run("verify --corpus exhaustive-4 --workers 8");
  ASSERT_EQ(one.exit_code, 0);
  EXPECT_EQ(one.out, many.out);
  const auto path = write_temp("k33w.txt", kK33);
  EXPECT_EQ(run("analyze --format edge-list --workers 1 " + path).out,
            run("analyze --format edge-list --workers 8 " + path).out);
}

}  // namespace
}  // namespace forcelab
