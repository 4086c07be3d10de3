// Copyright 2026 The ncg Authors
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

// End-to-end acceptance run. One PASS/FAIL line per criterion; exit status is
// the number of failures (capped).

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ncg.hpp"

namespace {

using namespace ncg;

Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

struct Check {
  bool pass = true;
  std::ostringstream note;

  void fail(const std::string& why) {
    if (pass) note << "first failure: " << why << "; ";
    pass = false;
  }
};

// Every k-NE certified by criteria 2 and 4, replayed by criterion 9.
struct Certified {
  Network net;
  GameConfig cfg;
};
std::vector<Certified> g_certified;

bool is_spanning_star(const Network& net) {
  if (net.edge_count() + 1 != net.size()) return false;
  for (AgentId u = 0; u < net.size(); ++u) {
    if (net.degree(u) + 1 == net.size()) return true;
  }
  return net.size() <= 1;
}

// Seeded random connected network: random spanning tree plus extra edges, each
// owned by a random endpoint.
Network random_network(std::size_t n, std::mt19937_64& rng, double extra) {
  std::vector<OwnedEdge> edges;
  std::vector<std::vector<char>> linked(n, std::vector<char>(n, 0));
  auto add = [&](AgentId a, AgentId b) {
    if (rng() & 1) std::swap(a, b);
    edges.push_back({a, b});
    linked[a][b] = linked[b][a] = 1;
  };
  for (AgentId v = 1; v < n; ++v) add(v, static_cast<AgentId>(rng() % v));
  std::bernoulli_distribution coin(extra);
  for (AgentId a = 0; a < n; ++a) {
    for (AgentId b = a + 1; b < n; ++b) {
      if (!linked[a][b] && coin(rng)) add(a, b);
    }
  }
  return Network::from_edges(n, edges);
}

int brute_min_dominating_set(const families::PlainGraph& g) {
  int best = static_cast<int>(g.n);
  for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
    std::uint32_t covered = mask;
    for (auto [a, b] : g.edges) {
      if (mask >> a & 1) covered |= 1u << b;
      if (mask >> b & 1) covered |= 1u << a;
    }
    if (covered == (1u << g.n) - 1) best = std::min(best, std::popcount(mask));
  }
  return best;
}

// 1. Closed forms against BFS on the (d, l) grid, plus the special Delta forms.
void formula_suite(Check& out) {
  int checked = 0;
  for (int d : {2, 4, 6}) {
    for (std::int64_t l : {std::int64_t{1}, ipow(2, d + 1), ipow(3, d)}) {
      const int li = static_cast<int>(l);
      const formulas::FormulaResult rs[] = {formulas::h_dist(d, li), formulas::tree_star_leaf_dist(d, li),
                                            formulas::after_buy_uz_dist(d, li), formulas::after_buy_uy_dist(d, li)};
      for (const auto& r : rs) {
        ++checked;
        if (!r.match) out.fail("distance formula at d=" + std::to_string(d) + " l=" + std::to_string(l));
      }
    }
    ++checked;
    if (!formulas::t_dist(d).match) out.fail("t_dist at d=" + std::to_string(d));
    for (std::int64_t l : {ipow(2, d + 1), ipow(3, d)}) {
      for (int k = 2; k <= std::min(d, 3); ++k) {
        const auto r = formulas::delta_max_decrease(d, k, static_cast<int>(l));
        const auto n = static_cast<std::int64_t>(families::tree_star(d, static_cast<int>(l)).net.size());
        ++checked;
        if (r.oracle != (k == 2 ? n - 3 : 2 * (n - 7))) {
          out.fail("delta at d=" + std::to_string(d) + " k=" + std::to_string(k) + " l=" + std::to_string(l));
        }
      }
    }
  }
  out.note << checked << " values compared";
}

// 2. Binary trees priced at (k-1)n are k-NE; PoA grows with depth.
void binary_tree_lower_bound(Check& out) {
  for (int d : {3, 4}) {
    for (int k : {2, 3}) {
      auto inst = families::kne_tree_instance(d, k);
      if (!is_k_ne(inst.net, inst.cfg).holds()) {
        out.fail("tree d=" + std::to_string(d) + " k=" + std::to_string(k) + " not k-NE");
      } else {
        g_certified.push_back({inst.net, inst.cfg});
      }
    }
  }
  Rational previous(0);
  for (int d : {3, 4, 5}) {
    const auto inst = families::kne_tree_instance(d, 2);
    const Rational poa = poa_ratio(inst.net, inst.cfg);
    out.note << "PoA(d=" << d << ")=" << format_rational(poa) << " ";
    if (!(previous < poa)) out.fail("PoA not increasing at d=" + std::to_string(d));
    previous = poa;
  }
}

// 3. Tree-star at alpha = Delta: 2-GE, yet the leaf gains by buying towards z.
void tree_star_gap(Check& out) {
  std::optional<Ratio> previous;
  for (int d : {4, 6}) {
    const int l = static_cast<int>(ipow(3, d));
    const auto g = families::tree_star(d, l);
    const auto cfg = make_config(R(formulas::delta_max_decrease(d, 2, l).oracle), 2);
    const std::string tag = "d=" + std::to_string(d);
    if (!is_k_ge(g.net, cfg).holds()) out.fail(tag + " not 2-GE");
    if (!(agent_cost(g.net.with_edge(g.leaf, g.z), cfg, g.leaf) < agent_cost(g.net, cfg, g.leaf))) {
      out.fail(tag + " buying uz does not improve");
    }
    const Ratio factor = approx_factor(g.net, cfg, Scope::kGlobalGreedy);
    out.note << "factor(" << tag << ")=" << to_string(factor) << " ";
    if (previous && !(*previous < factor)) out.fail("factor does not grow");
    previous = factor;
  }
}

const Rational kChainAlphas[] = {Rational(1, 2), Rational(3, 2), Rational(5, 2)};

// 4. NE => k-NE => k-GE and NE => GE => k-GE on every small network.
void inclusion_chain(Check& out) {
  std::uint64_t instances = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for_each_network(n, true, [&](const Network& net) {
      for (const auto& alpha : kChainAlphas) {
        const bool ne = is_ne(net, alpha).holds();
        const bool ge = is_ge(net, alpha).holds();
        for (int k = 1; k <= 3; ++k) {
          const auto cfg = make_config(alpha, k);
          const bool kne = is_k_ne(net, cfg).holds();
          const bool kge = is_k_ge(net, cfg).holds();
          ++instances;
          if ((ne && !kne) || (kne && !kge) || (ne && !ge) || (ge && !kge)) {
            out.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " alpha=" + format_rational(alpha));
          }
          if (kne && k >= 2) g_certified.push_back({net, cfg});
        }
      }
      return true;
    });
  }
  out.note << instances << " (network, alpha, k) instances";
}

// 5. Greedy-stable agents pay at most three times their best local response.
void three_approximation(Check& out) {
  std::uint64_t agents = 0;
  auto check = [&](const Network& net, const GameConfig& cfg) {
    for (AgentId u = 0; u < net.size(); ++u) {
      if (best_greedy_move(net, cfg, u)) continue;
      ++agents;
      const Cost now = agent_cost(net, cfg, u);
      const Cost best = best_k_local_response(net, cfg, u).cost;
      if (now.is_infinite() || best.is_infinite() || now.value() > 3 * best.value()) {
        out.fail("agent " + std::to_string(u) + " on n=" + std::to_string(net.size()));
      }
    }
  };
  for (std::size_t n = 1; n <= 5; ++n) {
    for_each_network(n, true, [&](const Network& net) {
      for (const auto& alpha : kChainAlphas) {
        for (int k = 1; k <= 3; ++k) check(net, make_config(alpha, k));
      }
      return true;
    });
  }
  std::mt19937_64 rng(5);
  const Rational alphas[] = {R(1, 2), R(3, 2), R(5, 2), R(4), R(10)};
  for (int trial = 0; trial < 500; ++trial) {
    const Network net = random_network(2 + rng() % 7, rng, 0.3);
    check(net, make_config(alphas[rng() % 5], 1 + static_cast<int>(rng() % 3)));
  }
  out.note << agents << " greedy-stable agents";
}

// 6. The hub's best response is a minimum dominating set.
void dominating_set_reduction(Check& out) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    families::PlainGraph g{n, {}};
    std::vector<std::vector<char>> linked(n, std::vector<char>(n, 0));
    for (AgentId v = 1; v < n; ++v) {
      const auto p = static_cast<AgentId>(rng() % v);
      g.edges.emplace_back(p, v);
      linked[p][v] = linked[v][p] = 1;
    }
    const double density = std::uniform_real_distribution<double>(0, 0.6)(rng);
    std::bernoulli_distribution coin(density);
    for (AgentId a = 0; a < n; ++a) {
      for (AgentId b = a + 1; b < n; ++b) {
        if (!linked[a][b] && coin(rng)) g.edges.emplace_back(a, b);
      }
    }
    const auto red = families::ds_reduction(g);
    const int mds = brute_min_dominating_set(g);
    for (int k : {1, 2}) {
      const auto br = best_k_local_response(red.net, make_config(red.alpha, k), red.hub);
      if (static_cast<int>(br.strategy.targets.size()) != mds) {
        out.fail("trial " + std::to_string(trial) + " k=" + std::to_string(k));
      }
    }
  }
  out.note << "200 graphs, k in {1,2}";
}

// 7. Dynamics: clique collapse, quadratic greedy step counts, tree swap
// convergence, best-response cycles.
void dynamics_suite(Check& out) {
  for (std::size_t n = 4; n <= 7; ++n) {
    const auto cfg = make_config(R(3), 1);
    const auto t = run(families::balanced_clique(n), cfg, Regime::kBuy, Scheduler::round_robin(), 1000);
    if (t.outcome != ncg::Outcome::kConverged || t.steps.size() > n || !is_spanning_star(t.final_state())) {
      out.fail("(a) clique n=" + std::to_string(n));
    }
  }

  auto greedy_steps = [](std::size_t n) {
    const auto t = run(families::clique(n), make_config(R(3), 1), Regime::kGreedyBuy, Scheduler::round_robin(), 100000);
    return t.outcome == ncg::Outcome::kConverged ? static_cast<double>(t.steps.size()) : -1.0;
  };
  const double s10 = greedy_steps(10), s20 = greedy_steps(20);
  const double ratio = s10 > 0 ? s20 / s10 : 0;
  out.note << "(b) steps " << s10 << " -> " << s20 << " ratio " << ratio << "; ";
  if (s10 <= 0 || s20 <= 0 || ratio < 3 || ratio > 5) out.fail("(b) step ratio");

  std::mt19937_64 rng(7);
  int runs = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 11;
    const Network tree = random_network(n, rng, 0.0);
    for (Regime regime : {Regime::kAsymSwap, Regime::kSwap}) {
      const auto cfg = make_config(R(1), 2);
      const auto t = run(tree, cfg, regime, Scheduler::round_robin(), n * n * n);
      ++runs;
      if (t.outcome != ncg::Outcome::kConverged) out.fail("(c) no convergence, trial " + std::to_string(trial));
      std::int64_t previous = -1;
      for (const auto& state : t.states()) {
        std::int64_t total = 0;
        for (AgentId u = 0; u < n; ++u) total += distance_cost(state, u).value();
        if (previous >= 0 && total >= previous) out.fail("(c) potential did not drop, trial " + std::to_string(trial));
        previous = total;
      }
    }
  }
  out.note << "(c) " << runs << " runs; ";

  struct Hunt {
    std::size_t n;
    int k;
    Rational alpha;
    Regime regime;
  };
  for (const Hunt& h : {Hunt{6, 2, R(5, 2), Regime::kBuy}, Hunt{8, 3, R(7, 2), Regime::kGreedyBuy}}) {
    const auto cfg = make_config(h.alpha, h.k);
    CycleSearchOptions opts;
    opts.budget = 10'000'000;
    const auto found = find_br_cycle(h.n, cfg, h.regime, {}, opts);
    out.note << "(d) n=" << h.n << " expanded " << found.expanded;
    if (found.cycle) out.note << " period " << found.cycle->period;
    out.note << "; ";
    if (!found.cycle || !verify_cycle(*found.cycle, cfg, h.regime)) out.fail("(d) n=" + std::to_string(h.n));
  }
}

// 8. Improving swaps and purchases gain at most a diameter factor; the price of
// anarchy is bounded by the approximation factor times (3 + diameter).
void approximation_bounds(Check& out) {
  std::mt19937_64 rng(8);
  const Rational alphas[] = {R(3, 2), R(3), R(8)};
  std::uint64_t moves = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Network net = random_network(2 + rng() % 11, rng, 0.25);
    const auto cfg = make_config(alphas[trial % 3], 1);
    const Rational diam(diameter(net).value());
    for (AgentId u = 0; u < net.size(); ++u) {
      const Cost before = agent_cost(net, cfg, u);
      for (const auto& m : enumerate_global_greedy_moves(net, u)) {
        if (m.kind == MoveKind::kDelete) continue;
        const Cost after = agent_cost(apply_move(net, m), cfg, u);
        if (!(after < before)) continue;
        ++moves;
        if (before.value() > diam * after.value()) out.fail("move ratio above diameter, trial " + std::to_string(trial));
      }
    }
    if (cfg.alpha >= 2) {
      const Ratio beta = approx_factor(net, cfg, Scope::kGlobalFull);
      if (beta.infinite || poa_ratio(net, cfg) > beta.value * (diam + 3)) {
        out.fail("social/OPT above beta (3 + diam), trial " + std::to_string(trial));
      }
    }
  }
  out.note << moves << " improving moves";
}

// 9. Certified k-NE respect the diameter bound.
void diameter_bound(Check& out) {
  for (const auto& c : g_certified) {
    const auto d = diameter(c.net);
    if (!d.is_finite() || !formulas::diam_bound(c.cfg.alpha, c.cfg.k).admits(d.value())) {
      out.fail("n=" + std::to_string(c.net.size()) + " alpha=" + format_rational(c.cfg.alpha));
    }
  }
  out.note << g_certified.size() << " certified networks";
  if (g_certified.empty()) out.fail("empty corpus");
}

// 10. Odd directed cycles are 2-NE in the max version.
void max_odd_cycles(Check& out) {
  for (std::size_t n : {5, 7}) {
    if (!is_k_ne(families::directed_cycle(n), make_config(R(3, 2), 2, Mode::kMax)).holds()) {
      out.fail("cycle n=" + std::to_string(n));
    }
  }
  out.note << "C5 and C7";
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 means no limit
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "formula oracles", 10, formula_suite},
      {2, "binary-tree k-NE lower bound", 300, binary_tree_lower_bound},
      {3, "tree-star locality gap", 300, tree_star_gap},
      {4, "equilibrium inclusion chain", 1800, inclusion_chain},
      {5, "greedy 3-approximation", 0, three_approximation},
      {6, "dominating-set reduction", 0, dominating_set_reduction},
      {7, "dynamics", 0, dynamics_suite},
      {8, "move ratio and PoA bounds", 0, approximation_bounds},
      {9, "diameter bound", 0, diameter_bound},
      {10, "max-version odd cycles", 60, max_odd_cycles},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Check out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) out.fail("over the time limit");
    failures += out.pass ? 0 : 1;
    std::printf("%s %2d %-30s %8.2fs  %s\n", out.pass ? "PASS" : "FAIL", c.id, c.name, secs, out.note.str().c_str());
    std::fflush(stdout);
  }
  return std::min(failures, 125);
}
