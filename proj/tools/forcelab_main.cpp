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

// forcelab command-line tool: analyze, generate, verify.
//
// Exit codes:
//   0  success (verify: every block passed)
//   1  parse error, invalid parameters, unreadable input
//   2  graph has no perfect matching (forcing sections)
//   3  matching or cycle cap exceeded
//   4  verify: at least one block has counterexamples

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "forcelab/connectivity.hpp"
#include "forcelab/errors.hpp"
#include "forcelab/extendability.hpp"
#include "forcelab/forcing.hpp"
#include "forcelab/generators.hpp"
#include "forcelab/io.hpp"
#include "forcelab/matching.hpp"
#include "forcelab/report.hpp"
#include "forcelab/structure.hpp"
#include "forcelab/switchlab.hpp"
#include "forcelab/verify.hpp"

namespace {

using forcelab::Edge;
using forcelab::Graph;
using nlohmann::ordered_json;

constexpr int kExitInvalid = 1;
constexpr int kExitNoMatching = 2;
constexpr int kExitCap = 3;
constexpr int kExitVerifyFailed = 4;

struct NoPerfectMatching : std::runtime_error {
  NoPerfectMatching() : std::runtime_error("graph has no perfect matching") {}
};

std::size_t cap_from_env(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) {
    throw forcelab::DomainError(std::string(name) + " must be a positive integer");
  }
  return static_cast<std::size_t>(v);
}

forcelab::SolverLimits limits_from_env() {
  forcelab::SolverLimits limits;
  limits.matching_cap = cap_from_env("FORCELAB_MATCHING_CAP", limits.matching_cap);
  limits.cycle_cap = cap_from_env("FORCELAB_CYCLE_CAP", limits.cycle_cap);
  return limits;
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

// "a-b,c-d" -> pairs.
std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      throw forcelab::DomainError("expected a-b pairs, got '" + item + "'");
    }
    try {
      out.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    } catch (const std::exception&) {
      throw forcelab::DomainError("expected a-b pairs, got '" + item + "'");
    }
  }
  return out;
}

std::string matching_comment(const forcelab::PerfectMatching& m) {
  std::string out = "# m0:";
  for (const Edge& e : m.edges()) out += " " + forcelab::to_string(e);
  return out + "\n";
}

// --- analyze ---------------------------------------------------------------

struct AnalyzeArgs {
  std::string input;
  std::string format = "graph6";
  bool profile = false;
  bool classify = false;
  bool extend = false;
  bool switches = false;
  bool csv = false;
  int workers = 0;
};

ordered_json extendability_section(const Graph& g) {
  ordered_json out;
  const bool connected = forcelab::is_connected(g);
  out["connected"] = connected;
  out["vertex_connectivity"] = forcelab::vertex_connectivity(g);
  out["factor_critical"] = forcelab::is_factor_critical(g);
  out["bicritical"] = forcelab::is_bicritical(g);
  out["brick"] = forcelab::is_brick(g);
  ordered_json ext = ordered_json::object();
  ordered_json witnesses = ordered_json::array();
  for (int l = 0; l <= 2; ++l) {
    if (!connected || g.order() < 2 * l + 2) {
      ext[std::to_string(l)] = nullptr;
      continue;
    }
    const bool e = forcelab::is_l_extendable(g, l);
    ext[std::to_string(l)] = e;
    if (l >= 1 && !e && forcelab::is_l_extendable(g, l - 1)) {
      if (auto w = forcelab::deficiency_witness(g, l)) witnesses.push_back(forcelab::to_json(*w));
    }
  }
  out["extendable"] = std::move(ext);
  out["deficiency_witnesses"] = std::move(witnesses);
  const int n = g.order() / 2;
  if (g.order() % 2 == 0 && n >= 3 && forcelab::has_max_forcing_n_minus_1(g) &&
      !forcelab::is_knn_plus(g)) {
    auto s = forcelab::non_2_extendable_structure(g);
    out["non_2_extendable_structure"] = s ? forcelab::to_json(*s) : ordered_json(nullptr);
  }
  return out;
}

ordered_json switch_section(const forcelab::SwitchGraph& sg) {
  const auto bound = forcelab::verify_switch_bound(sg);
  return {
      {"nodes", sg.nodes.size()},
      {"edges", sg.edges.size()},
      {"components", forcelab::switch_component_count(sg)},
      {"switch_bound_holds", bound.holds},
      {"continuity", forcelab::to_json(forcelab::verify_spectrum_continuity(sg))},
  };
}

int run_analyze(const AnalyzeArgs& args) {
  const auto limits = limits_from_env();
  const Graph g = forcelab::load_graph(read_input(args.input), forcelab::parse_format(args.format));
  bool profile = args.profile, classify = args.classify, extend = args.extend,
       switches = args.switches;
  if (!profile && !classify && !extend && !switches && !args.csv) {
    profile = classify = extend = switches = true;
  }
  // The profile summary always carries the classification next to it.
  if (profile) classify = true;
  const bool needs_pm = profile || classify || switches || args.csv;
  if (needs_pm && (g.order() == 0 || !forcelab::has_perfect_matching(g))) {
    throw NoPerfectMatching();
  }

  std::optional<forcelab::SwitchGraph> sg;
  std::optional<forcelab::SpectrumReport> spectrum;
  if (switches) {
    sg = forcelab::build_switch_graph(g, limits, args.workers);
    std::vector<std::pair<forcelab::PerfectMatching, int>> per;
    for (std::size_t i = 0; i < sg->nodes.size(); ++i) per.emplace_back(sg->nodes[i], sg->forcing[i]);
    spectrum = forcelab::make_spectrum_report(g.order(), std::move(per));
  } else if (profile || args.csv) {
    spectrum = forcelab::forcing_profile(g, limits, args.workers);
  }
  if (args.csv) {
    std::cout << forcelab::spectrum_csv(*spectrum);
    return 0;
  }

  ordered_json out = {
      {"schema", forcelab::kReportSchema},
      {"kind", "analysis"},
      {"graph", {{"order", g.order()}, {"edge_count", g.edge_count()}, {"graph6", forcelab::to_graph6(g)}}},
  };
  if (profile) out["profile"] = forcelab::to_json(*spectrum);
  if (classify) out["classification"] = forcelab::to_json(forcelab::classify_min_forcing(g));
  if (extend) out["extendability"] = extendability_section(g);
  if (switches) out["switch"] = switch_section(*sg);
  std::cout << out.dump(2) << "\n";
  return 0;
}

// --- generate --------------------------------------------------------------

struct GenerateArgs {
  std::string family;
  std::string format = "graph6";
  int n = 0;
  int k = 0;
  std::string sizes;
  std::string extra;
  std::string parallel;
  std::string which = "i";
  std::string u_edges;
  int i = 0;
  int j = 1;
  int order = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
};

int run_generate(const GenerateArgs& args) {
  const auto format = forcelab::parse_format(args.format);
  std::optional<forcelab::LabeledGraph> labeled;
  Graph g;
  if (args.family == "multipartite") {
    std::vector<int> sizes;
    std::stringstream ss(args.sizes);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        sizes.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw forcelab::DomainError("--sizes expects comma-separated integers");
      }
    }
    g = forcelab::gen_complete_multipartite(sizes);
  } else if (args.family == "knnplus") {
    std::vector<Edge> extra;
    for (auto [a, b] : parse_pairs(args.extra)) extra.emplace_back(a, b);
    g = forcelab::gen_knn_plus(args.n, extra);
  } else if (args.family == "hk") {
    labeled = forcelab::gen_h_k(args.n, args.k);
  } else if (args.family == "signature") {
    forcelab::PairSignature sig(args.n);
    for (auto [a, b] : parse_pairs(args.parallel)) sig.set(a, b, forcelab::PairChoice::kParallel);
    labeled = forcelab::gen_minimal_from_signature(sig);
  } else if (args.family == "non2ext") {
    forcelab::Non2ExtOptions opts;
    opts.u_edges = parse_pairs(args.u_edges);
    opts.i = args.i;
    opts.j = args.j;
    if (args.which != "i" && args.which != "ii") {
      throw forcelab::DomainError("--case must be i or ii");
    }
    const auto which = args.which == "i" ? forcelab::Non2ExtCase::kTriangle
                                         : forcelab::Non2ExtCase::kSpecialPair;
    labeled = forcelab::gen_non_2_extendable(which, args.n, opts);
  } else if (args.family == "random") {
    g = forcelab::gen_random(args.order, args.p, args.seed);
  } else {
    throw forcelab::DomainError("unknown family: " + args.family);
  }
  if (labeled) {
    std::cout << matching_comment(labeled->m0);
    g = labeled->graph;
  }
  std::cout << forcelab::serialize_graph(g, format);
  return 0;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string corpus = "exhaustive-6";
  std::string theorems = "all";
  int workers = 0;
  bool timings = false;
  std::size_t max_counterexamples = 20;
};

int run_verify(const VerifyArgs& args) {
  forcelab::VerifyOptions opts;
  opts.theorems.clear();
  std::stringstream ss(args.theorems);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) opts.theorems.push_back(item);
  }
  opts.workers = args.workers;
  opts.limits = limits_from_env();
  opts.max_counterexamples = args.max_counterexamples;
  forcelab::resolve_theorems(opts.theorems);
  const auto corpus = forcelab::load_corpus(args.corpus);
  const auto report = forcelab::verify_corpus(args.corpus, corpus, opts);
  std::cout << forcelab::to_json(report, args.timings).dump(2) << "\n";
  return report.all_passed() ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forcing numbers of perfect matchings"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* a = app.add_subcommand("analyze", "Forcing profile, classification, extendability and switch summary of one graph");
  a->add_option("input", analyze.input, "Graph file (default: standard input)");
  a->add_option("--format", analyze.format, "graph6 or edge-list")->capture_default_str();
  a->add_flag("--profile", analyze.profile, "Forcing number of every perfect matching (with classification)");
  a->add_flag("--classify", analyze.classify, "Structural prediction of f(G) = n-1");
  a->add_flag("--extend", analyze.extend, "Extendability predicates and witnesses");
  a->add_flag("--switch", analyze.switches, "Matching 2-switch graph summary");
  a->add_flag("--csv", analyze.csv, "Print the spectrum table as CSV instead of JSON");
  a->add_option("--workers", analyze.workers, "OpenMP threads (0: runtime default)");

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Emit one graph of a family");
  g->add_option("family", gen.family, "multipartite, knnplus, hk, signature, non2ext or random")->required();
  g->add_option("--format", gen.format, "graph6 or edge-list")->capture_default_str();
  g->add_option("--n", gen.n, "Matching size n (order 2n)");
  g->add_option("--k", gen.k, "hk: number of parallel pairs");
  g->add_option("--sizes", gen.sizes, "multipartite: part sizes, e.g. 2,2,2");
  g->add_option("--extra", gen.extra, "knnplus: extra edges inside B, e.g. 3-4,4-5");
  g->add_option("--parallel", gen.parallel, "signature: parallel pairs, e.g. 0-1,2-3");
  g->add_option("--case", gen.which, "non2ext: i or ii")->capture_default_str();
  g->add_option("--u-edges", gen.u_edges, "non2ext: u-side label pairs, e.g. 0-1,2-3");
  g->add_option("--i", gen.i, "non2ext case ii: index for v_i v_n")->capture_default_str();
  g->add_option("--j", gen.j, "non2ext case ii: index for v_j u_n")->capture_default_str();
  g->add_option("--order", gen.order, "random: number of vertices");
  g->add_option("--p", gen.p, "random: edge probability")->capture_default_str();
  g->add_option("--seed", gen.seed, "random: seed")->capture_default_str();

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Check theorem blocks over a graph corpus");
  v->add_option("--corpus", ver.corpus, "Built-in corpus id or graph6 file")->capture_default_str();
  v->add_option("--theorems", ver.theorems, "Comma-separated block ids or 'all'")->capture_default_str();
  v->add_option("--workers", ver.workers, "OpenMP threads (0: runtime default)");
  v->add_flag("--timings", ver.timings, "Include per-block runtimes (not deterministic)");
  v->add_option("--max-counterexamples", ver.max_counterexamples, "Counterexamples kept per block")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*a) return run_analyze(analyze);
    if (*g) return run_generate(gen);
    return run_verify(ver);
  } catch (const NoPerfectMatching& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoMatching;
  } catch (const forcelab::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}
