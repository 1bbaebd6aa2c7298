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

#ifndef FORCELAB_VERIFY_HPP_
#define FORCELAB_VERIFY_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "forcelab/forcing.hpp"
#include "forcelab/graph.hpp"

namespace forcelab {

struct BlockResult {
  std::string id;
  std::int64_t checked = 0;
  std::int64_t passed = 0;
  // graph6 strings of failing graphs in corpus order, capped.
  std::vector<std::string> counterexamples;
  std::int64_t counterexamples_omitted = 0;
  // Recorded observations that are not asserted.
  std::map<std::string, std::int64_t> notes;
  double seconds = 0.0;

  bool ok() const { return passed == checked; }
};

struct VerificationReport {
  std::string corpus_id;
  std::int64_t graphs_total = 0;
  std::int64_t graphs_with_pm = 0;
  std::vector<BlockResult> blocks;

  bool all_passed() const;
  const BlockResult* block(std::string_view id) const;
};

struct VerifyOptions {
  // Block ids, or {"all"}.
  std::vector<std::string> theorems{"all"};
  int workers = 0;
  SolverLimits limits;
  std::size_t max_counterexamples = 20;
};

// Block ids in report order.
const std::vector<std::string>& theorem_ids();
std::string_view theorem_statement(std::string_view id);

// Expands "all" and rejects unknown ids (DomainError).
std::vector<std::string> resolve_theorems(const std::vector<std::string>& ids);

// Built-in corpora:
//   exhaustive-N   every labeled graph on N <= 6 vertices
//   families-10    every generator-family instance up to 10 vertices
//   maxforcing-N   every labeled graph on N in {2, 4, 6, 8} vertices in which
//                  {i, N/2 + i} passes the pairwise alternating condition
//   random-8       10^4 graphs gen_random(8, 0.5, seed), seeds 1..10^4
bool is_builtin_corpus(std::string_view id);
std::vector<std::string> builtin_corpus_ids();
std::vector<Graph> builtin_corpus(std::string_view id);

// Built-in id or a graph6 file path. Throws std::runtime_error when the file
// cannot be read and ParseError on malformed lines.
std::vector<Graph> load_corpus(const std::string& id_or_path);

// Runs every selected block over the corpus graphs that have a perfect
// matching, on `workers` OpenMP threads. The report does not depend on the
// worker count (except for block runtimes).
VerificationReport verify_corpus(std::string corpus_id,
                                 std::span<const Graph> corpus,
                                 const VerifyOptions& options = {});

nlohmann::ordered_json to_json(const VerificationReport& r, bool with_timings);

}  // namespace forcelab

#endif  // FORCELAB_VERIFY_HPP_
