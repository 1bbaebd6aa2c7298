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

#include "forcelab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "forcelab/connectivity.hpp"
#include "forcelab/errors.hpp"
#include "forcelab/extendability.hpp"
#include "forcelab/generators.hpp"
#include "forcelab/io.hpp"
#include "forcelab/matching.hpp"
#include "forcelab/parallel.hpp"
#include "forcelab/report.hpp"
#include "forcelab/structure.hpp"
#include "forcelab/switchlab.hpp"

namespace forcelab {

namespace {

struct TheoremInfo {
  const char* id;
  const char* statement;
};

constexpr TheoremInfo kTheorems[] = {
    {"bounds", "c(M) <= f(G,M) <= n-1 for every perfect matching"},
    {"thm13", "bipartite G: f(G) = n-1 iff G = K_{n,n}"},
    {"lem22", "pairwise alternating condition iff f(G,M) = n-1, every M"},
    {"lem22min",
     "F = n-1: minimal (edge deletion) iff some M with f = n-1 has every pair "
     "inducing exactly a 4-cycle"},
    {"lem23",
     "F = n-1 > 0: kappa >= n, no fixed double bond; minimal => n-regular "
     "and kappa = n"},
    {"lem24", "bicritical iff o(G-X) <= |X|-2 for all |X| >= 2"},
    {"lem25",
     "F = n-1: K_{n,n}^+ iff alpha >= n; otherwise brick and 1-extendable"},
    {"lem31",
     "l in {1,2}, (l-1)-extendable, order >= 2l+2: deficiency witness iff "
     "not l-extendable"},
    {"thm33",
     "f(G) = n-1 iff complete multipartite with parts <= n or K_{n,n}^+"},
    {"thm41",
     "F = n-1, n >= 3, not K_{n,n}^+: 1-extendable; structure (i)/(ii) found "
     "iff not 2-extendable"},
    {"cor42",
     "minimal, F = n-1, n >= 3, not K_{n,n}^+: not 2-extendable iff (ii) "
     "with i != j, independent u-side and exact 4-cycles at the special pair; "
     "case (i) never found"},
    {"lem51", "f(G) >= floor(kappa/2)"},
    {"cor52", "F = n-1: f(G) >= floor(n/2)"},
    {"lem56", "|f(M) - f(M')| <= 1 across every 2-switch"},
    {"thm57",
     "F = n-1: spectrum continuous and every matching switches to one with "
     "f = n-1"},
};

using Clock = std::chrono::steady_clock;

// Per-graph quantities shared by the blocks, computed on first use.
class GraphFacts {
 public:
  GraphFacts(const Graph& g, const SolverLimits& limits)
      : g_(g), limits_(limits), n_(g.order() / 2) {}

  const Graph& graph() const { return g_; }
  int n() const { return n_; }

  const SwitchGraph& switch_graph() {
    if (!sg_) sg_ = reference::build_switch_graph(g_, limits_);
    return *sg_;
  }
  int min_forcing() {
    const auto& f = switch_graph().forcing;
    return *std::min_element(f.begin(), f.end());
  }
  int max_forcing() {
    const auto& f = switch_graph().forcing;
    return *std::max_element(f.begin(), f.end());
  }
  bool max_is_top() { return max_forcing() == n_ - 1; }

  const std::optional<KnnPlus>& knn() {
    if (!knn_) knn_ = is_knn_plus(g_);
    return *knn_;
  }
  int kappa() {
    if (!kappa_) kappa_ = vertex_connectivity(g_);
    return *kappa_;
  }
  bool extendable(int l) {
    auto& slot = ext_[l];
    if (!slot) slot = is_l_extendable(g_, l);
    return *slot;
  }
  bool some_minimal() {
    if (!some_minimal_) some_minimal_ = is_minimal_max_forcing(g_, limits_.matching_cap);
    return *some_minimal_;
  }

  // Minimal by definition: F(G - e) < n - 1 for every edge e.
  bool minimal_by_deletion() {
    if (minimal_) return *minimal_;
    bool minimal = max_is_top();
    for (const Edge& e : g_.edges()) {
      if (!minimal) break;
      Graph h = g_;
      h.remove_edge(e.u, e.v);
      if (!has_perfect_matching(h)) continue;
      for (const auto& m : enumerate_perfect_matchings(h, limits_.matching_cap)) {
        if (forcing_number(h, m, limits_).optimum == n_ - 1) {
          minimal = false;
          break;
        }
      }
    }
    minimal_ = minimal;
    return minimal;
  }

 private:
  const Graph& g_;
  const SolverLimits& limits_;
  int n_;
  std::optional<SwitchGraph> sg_;
  std::optional<std::optional<KnnPlus>> knn_;
  std::optional<int> kappa_;
  std::optional<bool> ext_[3];
  std::optional<bool> some_minimal_;
  std::optional<bool> minimal_;
};

bool tutte_bicritical_condition(const Graph& g) {
  const int order = g.order();
  for (VertexMask x = 0; x < (VertexMask{1} << order); ++x) {
    const int size = popcount(x);
    if (size >= 2 && odd_component_count(g, x) > size - 2) return false;
  }
  return true;
}

bool exact_four_cycle(const Graph& g, int a, int b, int c, int d) {
  const VertexMask s = bit(a) | bit(b) | bit(c) | bit(d);
  int edges = 0;
  for (int x : {a, b, c, d}) edges += popcount(g.row(x) & s);
  return edges == 8;
}

// Right-hand side of the minimal non-2-extendable characterization, searched
// over every matching, special pair and orientation.
bool minimal_special_pair_structure(const Graph& g, std::size_t matching_cap) {
  const int n = g.order() / 2;
  std::vector<int> u(n), v(n);
  for (const auto& m : enumerate_perfect_matchings(g, matching_cap)) {
    if (!pairwise_alternating_condition(g, m).holds) continue;
    const auto& edges = m.edges();
    for (int p = 0; p < n; ++p) {
      for (std::uint32_t orient = 0; orient < (1u << n); ++orient) {
        VertexMask us = 0, vs = 0;
        for (int k = 0; k < n; ++k) {
          const bool flip = (orient >> k) & 1;
          u[k] = flip ? edges[k].v : edges[k].u;
          v[k] = flip ? edges[k].u : edges[k].v;
          if (k != p) {
            us |= bit(u[k]);
            vs |= bit(v[k]);
          }
        }
        bool ok = true;
        for (int k = 0; k < n && ok; ++k) {
          if (k == p) continue;
          ok = !(g.row(u[k]) & us) && !(g.row(v[k]) & vs) &&
               exact_four_cycle(g, u[p], v[p], u[k], v[k]);
        }
        if (!ok) continue;
        if (maximum_matching_size(g, us | bit(u[p]) | bit(v[p])) < 2) continue;
        bool pair = false;
        for (int i = 0; i < n && !pair; ++i) {
          if (i == p || !g.adjacent(v[i], v[p])) continue;
          for (int j = 0; j < n && !pair; ++j) {
            pair = j != p && j != i && g.adjacent(v[j], u[p]);
          }
        }
        if (pair) return true;
      }
    }
  }
  return false;
}

// Outcome of one block on one graph.
struct Outcome {
  bool applicable = false;
  bool passed = true;
  std::vector<std::string> notes;
  double seconds = 0.0;
};

using BlockFn = std::function<void(GraphFacts&, Outcome&, const SolverLimits&)>;

void check(Outcome& o, bool cond) {
  o.applicable = true;
  o.passed = o.passed && cond;
}

BlockFn block_function(std::string_view id) {
  if (id == "bounds") {
    return [](GraphFacts& f, Outcome& o, const SolverLimits& limits) {
      const auto& sg = f.switch_graph();
      bool ok = true;
      for (std::size_t i = 0; i < sg.nodes.size() && ok; ++i) {
        const auto c = cycle_packing_bound(f.graph(), sg.nodes[i], limits);
        ok = (!c.exact || c.value <= sg.forcing[i]) && sg.forcing[i] <= f.n() - 1;
        if (!c.exact) o.notes.push_back("packing_bound_inexact");
      }
      check(o, ok);
    };
  }
  if (id == "thm13") {
    return [](GraphFacts& f, Outcome& o, const SolverLimits&) {
      if (!is_bipartite(f.graph())) return;
      const bool knn = f.graph().edge_count() == f.n() * f.n();
      check(o, (f.min_forcing() == f.n() - 1) == knn);
    };
  }
  if (id == "lem22") {
    return [](GraphFacts& f, Outcome& o, const SolverLimits&) {
      if (f.n() < 2) return;
      const auto& sg = f.switch_graph();
      bool ok = true;
      for (std::size_t i = 0; i < sg.nodes.size() && ok; ++i) {
        ok = pairwise_alternating_condition(f.graph(), sg.nodes[i]).holds ==
             (sg.forcing[i] == f.n() - 1);
      }
      check(o, ok);
    };
  }
  if (id == "lem22min") {
    return [](GraphFacts& f, Outcome& o, const SolverLimits& limits) {
      if (f.n() < 2 || !f.max_is_top()) return;
      const bool minimal = f.minimal_by_deletion();
      check(o, minimal == f.some_minimal());
      if (minimal != is_minimal_max_forcing_every(f.graph(), limits.matching_cap)) {
        o.notes.push_back("every_matching_reading_disagrees");
      }
    };
  }
  if (id == "lem23") {
    return [](GraphFacts& f, Outcome& o, const SolverLimits&) {
      if (f.n() < 2 || !f.max_is_top()) return;
      bool ok = f.kappa() >= f.n() && !has_fixed_double_bond(f.graph());
      if (ok && f.some_minimal()) {
        ok = f.graph().is_regular(f.n()) && f.kappa() == f.n();
      }
      check(o, ok);
    };
  }
  if (id == "lem24") {
    return [](GraphFacts& f, Outcome& o, const SolverLimits&) {
      if (f.graph().edge_count() == 0) return;
      check(o, is_bicritical(f.graph()) == tutte_bicritical_condition(f.graph()));
    };
  }
  if (id == "lem25") {
    return [](GraphFacts& f, Outcome& o, const SolverLimits&) {
      if (!f.max_is_top()) return;
      const bool knn = f.knn().has_value();
      bool ok = knn == (max_independent_set_size(f.graph()) >= f.n());
      if (ok && !knn) ok = is_brick(f.graph()) && f.extendable(1);
      check(o, ok);
    };
  }
  if (id == "lem31") {
    return [](GraphFacts& f, Outcome& o, const SolverLimits&) {
      const Graph& g = f.graph();
      if (!is_connected(g)) return;
      for (int l = 1; l <= 2; ++l) {
        if (g.order() < 2 * l + 2 || !f.extendable(l - 1)) break;
        const auto w = deficiency_witness(g, l);
        check(o, w.has_value() == !f.extendable(l) &&
                     (!w || is_valid_deficiency_witness(g, *w)));
      }
    };
  }
  if (id == "thm33") {
    return [](GraphFacts& f, Outcome& o, const SolverLimits&) {
      const auto c = classify_min_forcing(f.graph());
      check(o, c.predicted_min_forcing_is_max == (f.min_forcing() == f.n() - 1));
    };
  }
  if (id == "thm41") {
    return [](GraphFacts& f, Outcome& o, const SolverLimits&) {
      if (f.n() < 3 || !f.max_is_top() || f.knn()) return;
      const auto s = non_2_extendable_structure(f.graph());
      check(o, f.extendable(1) && s.has_value() == !f.extendable(2) &&
                   (!s || satisfies_non2ext_conditions(f.graph(), *s)));
      if (s) o.notes.push_back(std::string("case_") + std::string(to_string(s->which)));
    };
  }
  if (id == "cor42") {
    return [](GraphFacts& f, Outcome& o, const SolverLimits& limits) {
      if (f.n() < 3 || !f.max_is_top() || f.knn() || !f.minimal_by_deletion()) {
        return;
      }
      const auto s = non_2_extendable_structure(f.graph());
      check(o, !f.extendable(2) ==
                       minimal_special_pair_structure(f.graph(), limits.matching_cap) &&
                   (!s || s->which == Non2ExtCase::kSpecialPair));
    };
  }
  if (id == "lem51") {
    return [](GraphFacts& f, Outcome& o, const SolverLimits&) {
      check(o, f.min_forcing() >= f.kappa() / 2);
    };
  }
  if (id == "cor52") {
    return [](GraphFacts& f, Outcome& o, const SolverLimits&) {
      if (!f.max_is_top()) return;
      check(o, f.min_forcing() >= f.n() / 2);
    };
  }
  if (id == "lem56") {
    return [](GraphFacts& f, Outcome& o, const SolverLimits&) {
      check(o, verify_switch_bound(f.switch_graph()).holds);
    };
  }
  if (id == "thm57") {
    return [](GraphFacts& f, Outcome& o, const SolverLimits&) {
      const auto r = verify_spectrum_continuity(f.switch_graph());
      if (r.applicable) {
        check(o, r.spectrum_continuous && r.reach_max);
        return;
      }
      // Reachability beyond F = n-1 is recorded only.
      o.notes.push_back(switch_component_count(f.switch_graph()) == 1
                            ? "other_switch_connected"
                            : "other_switch_disconnected");
    };
  }
  throw DomainError("unknown theorem block: " + std::string(id));
}

struct GraphResult {
  bool has_pm = false;
  std::vector<Outcome> outcomes;
};

void add_unique(std::vector<Graph>& out, std::unordered_set<std::string>& seen,
                Graph g) {
  if (seen.insert(to_graph6(g)).second) out.push_back(std::move(g));
}

std::vector<Graph> families_corpus(int max_order) {
  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  // Complete multipartite: part sizes as non-increasing sequences.
  std::function<void(std::vector<int>&, int, int)> parts =
      [&](std::vector<int>& sizes, int left, int cap) {
        if (left == 0) {
          if (sizes.size() >= 2) add_unique(out, seen, gen_complete_multipartite(sizes));
          return;
        }
        for (int s = std::min(left, cap); s >= 1; --s) {
          sizes.push_back(s);
          parts(sizes, left - s, s);
          sizes.pop_back();
        }
      };
  for (int order = 2; order <= max_order; order += 2) {
    std::vector<int> sizes;
    parts(sizes, order, order);
  }
  const int max_n = max_order / 2;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Edge> pairs;
    for (int a = n; a < 2 * n; ++a) {
      for (int b = a + 1; b < 2 * n; ++b) pairs.emplace_back(a, b);
    }
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << pairs.size()); ++s) {
      std::vector<Edge> extra;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if ((s >> k) & 1) extra.push_back(pairs[k]);
      }
      add_unique(out, seen, gen_knn_plus(n, extra));
    }
  }
  for (int n = 2; n <= max_n; ++n) {
    for (int k = 0; k <= (n - 1) / 2; ++k) add_unique(out, seen, gen_h_k(n, k).graph);
  }
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << pairs.size()); ++s) {
      PairSignature sig(n);
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if ((s >> k) & 1) sig.set(pairs[k].first, pairs[k].second, PairChoice::kParallel);
      }
      add_unique(out, seen, gen_minimal_from_signature(sig).graph);
    }
  }
  for (int n = 4; n <= max_n; ++n) {
    add_unique(out, seen, gen_non_2_extendable(Non2ExtCase::kTriangle, n).graph);
    Non2ExtOptions dense;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) dense.u_edges.emplace_back(a, b);
    }
    add_unique(out, seen, gen_non_2_extendable(Non2ExtCase::kTriangle, n, dense).graph);
  }
  for (int n = 3; n <= max_n; ++n) {
    for (int i = 0; i <= n - 2; ++i) {
      for (int j = 0; j <= n - 2; ++j) {
        Non2ExtOptions opts;
        opts.i = i;
        opts.j = j;
        add_unique(out, seen, gen_non_2_extendable(Non2ExtCase::kSpecialPair, n, opts).graph);
      }
    }
  }
  return out;
}

// Every labeled graph of order 2n in which M0 = {i, n+i} passes the pairwise
// condition: per pair of matching edges, either both parallel or both cross
// edges are present (7 of 16 patterns), every other pair is absent.
std::vector<Graph> maxforcing_corpus(int order) {
  const int n = order / 2;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<int> patterns;
  for (int p = 0; p < 16; ++p) {
    // bits: u_i u_j, v_i v_j, u_i v_j, v_i u_j
    if ((p & 3) == 3 || (p & 12) == 12) patterns.push_back(p);
  }
  std::vector<Graph> out;
  std::vector<int> digit(pairs.size(), 0);
  while (true) {
    Graph g(order);
    for (int i = 0; i < n; ++i) g.add_edge(i, n + i);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto [i, j] = pairs[k];
      const int p = patterns[digit[k]];
      if (p & 1) g.add_edge(i, j);
      if (p & 2) g.add_edge(n + i, n + j);
      if (p & 4) g.add_edge(i, n + j);
      if (p & 8) g.add_edge(n + i, j);
    }
    out.push_back(std::move(g));
    std::size_t k = 0;
    while (k < digit.size() && ++digit[k] == static_cast<int>(patterns.size())) {
      digit[k++] = 0;
    }
    if (k == digit.size()) break;
  }
  return out;
}

}  // namespace

bool VerificationReport::all_passed() const {
  return std::all_of(blocks.begin(), blocks.end(),
                     [](const BlockResult& b) { return b.ok(); });
}

const BlockResult* VerificationReport::block(std::string_view id) const {
  for (const auto& b : blocks) {
    if (b.id == id) return &b;
  }
  return nullptr;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& t : kTheorems) v.emplace_back(t.id);
    return v;
  }();
  return ids;
}

std::string_view theorem_statement(std::string_view id) {
  for (const auto& t : kTheorems) {
    if (id == t.id) return t.statement;
  }
  throw DomainError("unknown theorem block: " + std::string(id));
}

std::vector<std::string> resolve_theorems(const std::vector<std::string>& ids) {
  std::set<std::string> wanted;
  for (const auto& id : ids) {
    if (id == "all") {
      wanted.insert(theorem_ids().begin(), theorem_ids().end());
    } else {
      theorem_statement(id);
      wanted.insert(id);
    }
  }
  if (wanted.empty()) throw DomainError("no theorem blocks selected");
  std::vector<std::string> out;
  for (const auto& id : theorem_ids()) {
    if (wanted.count(id)) out.push_back(id);
  }
  return out;
}

std::vector<std::string> builtin_corpus_ids() {
  return {"exhaustive-2", "exhaustive-4", "exhaustive-6", "families-10",
          "maxforcing-4", "maxforcing-6", "maxforcing-8", "random-8"};
}

bool is_builtin_corpus(std::string_view id) {
  const auto ids = builtin_corpus_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<Graph> builtin_corpus(std::string_view id) {
  if (!is_builtin_corpus(id)) {
    throw DomainError("unknown built-in corpus: " + std::string(id));
  }
  const int order = std::stoi(std::string(id.substr(id.find('-') + 1)));
  std::vector<Graph> out;
  if (id.starts_with("exhaustive-")) {
    enumerate_labeled_graphs(order, [&](const Graph& g) {
      out.push_back(g);
      return true;
    });
  } else if (id.starts_with("families-")) {
    out = families_corpus(order);
  } else if (id.starts_with("maxforcing-")) {
    out = maxforcing_corpus(order);
  } else {
    for (std::uint64_t seed = 1; seed <= 10'000; ++seed) {
      out.push_back(gen_random(order, 0.5, seed));
    }
  }
  return out;
}

std::vector<Graph> load_corpus(const std::string& id_or_path) {
  if (is_builtin_corpus(id_or_path)) return builtin_corpus(id_or_path);
  std::ifstream in(id_or_path);
  if (!in) throw std::runtime_error("cannot read corpus: " + id_or_path);
  return read_graph6_corpus(in);
}

VerificationReport verify_corpus(std::string corpus_id,
                                 std::span<const Graph> corpus,
                                 const VerifyOptions& options) {
  const auto ids = resolve_theorems(options.theorems);
  std::vector<BlockFn> fns;
  for (const auto& id : ids) fns.push_back(block_function(id));

  std::vector<GraphResult> results(corpus.size());
  parallel_for(corpus.size(), options.workers, [&](std::size_t gi) {
    const Graph& g = corpus[gi];
    GraphResult& r = results[gi];
    r.has_pm = g.order() > 0 && has_perfect_matching(g);
    if (!r.has_pm) return;
    GraphFacts facts(g, options.limits);
    r.outcomes.resize(fns.size());
    for (std::size_t b = 0; b < fns.size(); ++b) {
      const auto start = Clock::now();
      fns[b](facts, r.outcomes[b], options.limits);
      r.outcomes[b].seconds =
          std::chrono::duration<double>(Clock::now() - start).count();
    }
  });

  VerificationReport report;
  report.corpus_id = std::move(corpus_id);
  report.graphs_total = static_cast<std::int64_t>(corpus.size());
  for (const auto& id : ids) {
    BlockResult b;
    b.id = id;
    report.blocks.push_back(std::move(b));
  }
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const GraphResult& r = results[gi];
    if (!r.has_pm) continue;
    ++report.graphs_with_pm;
    for (std::size_t b = 0; b < fns.size(); ++b) {
      const Outcome& o = r.outcomes[b];
      BlockResult& block = report.blocks[b];
      block.seconds += o.seconds;
      for (const auto& note : o.notes) ++block.notes[note];
      if (!o.applicable) continue;
      ++block.checked;
      if (o.passed) {
        ++block.passed;
      } else if (block.counterexamples.size() < options.max_counterexamples) {
        block.counterexamples.push_back(to_graph6(corpus[gi]));
      } else {
        ++block.counterexamples_omitted;
      }
    }
  }
  return report;
}

nlohmann::ordered_json to_json(const VerificationReport& r, bool with_timings) {
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (const auto& b : r.blocks) {
    nlohmann::ordered_json j = {
        {"id", b.id},
        {"statement", std::string(theorem_statement(b.id))},
        {"checked", b.checked},
        {"passed", b.passed},
        {"counterexamples", b.counterexamples},
    };
    if (b.counterexamples_omitted > 0) {
      j["counterexamples_omitted"] = b.counterexamples_omitted;
    }
    if (!b.notes.empty()) j["notes"] = b.notes;
    if (with_timings) j["runtime_seconds"] = b.seconds;
    blocks.push_back(std::move(j));
  }
  return {
      {"schema", kReportSchema},
      {"kind", "verification"},
      {"corpus_id", r.corpus_id},
      {"graphs_total", r.graphs_total},
      {"graphs_with_pm", r.graphs_with_pm},
      {"all_passed", r.all_passed()},
      {"blocks", std::move(blocks)},
  };
}

}  // namespace forcelab
