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

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ncg/config.hpp"
#include "ncg/cost.hpp"
#include "ncg/enumerate.hpp"
#include "ncg/evaluator.hpp"
#include "ncg/hash.hpp"
#include "ncg/moves.hpp"
#include "ncg/network.hpp"
#include "ncg/paths.hpp"

namespace ncg {

// Which strategy changes an activated agent may perform.
//   kSwap:      swap any incident edge to a new endpoint in N_k (distance cost only)
//   kAsymSwap:  swap an own edge to a new endpoint in N_k (distance cost only)
//   kGreedyBuy: a single k-local buy, delete or swap
//   kBuy:       any k-local strategy change
enum class Regime { kSwap, kAsymSwap, kGreedyBuy, kBuy };

inline std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::kSwap: return "K_SG";
    case Regime::kAsymSwap: return "K_ASG";
    case Regime::kGreedyBuy: return "K_GBG";
    case Regime::kBuy: return "K_BG";
  }
  return "?";
}

inline Regime parse_regime(std::string_view text) {
  for (Regime r : {Regime::kSwap, Regime::kAsymSwap, Regime::kGreedyBuy, Regime::kBuy}) {
    if (text == to_string(r)) return r;
  }
  if (text == "SG" || text == "sg") return Regime::kSwap;
  if (text == "ASG" || text == "asg") return Regime::kAsymSwap;
  if (text == "GBG" || text == "gbg") return Regime::kGreedyBuy;
  if (text == "BG" || text == "bg") return Regime::kBuy;
  throw Error(ErrorCode::kParseError, "unknown regime '" + std::string(text) + "'");
}

inline bool swaps_only(Regime r) { return r == Regime::kSwap || r == Regime::kAsymSwap; }

// One strategy change. `released` is set when a swapping agent moved an edge
// it did not own: that edge is removed from its owner, and the agent owns the
// replacement.
struct Transition {
  AgentId agent = 0;
  std::vector<AgentId> before;
  std::vector<AgentId> after;
  std::optional<AgentId> released;

  friend bool operator==(const Transition&, const Transition&) = default;
};

inline Network apply_transition(const Network& net, const Transition& t) {
  if (t.released) {
    if (net.owner(t.agent, *t.released) != *t.released) {
      throw Error(ErrorCode::kInvalidStrategy, "released edge is not owned by the other endpoint");
    }
    return net.without_edge(t.agent, *t.released).with_strategy(t.agent, t.after);
  }
  return net.with_strategy(t.agent, t.after);
}

inline std::string describe(const Transition& t) {
  auto list = [](const std::vector<AgentId>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  std::string out = std::to_string(t.agent) + " " + list(t.before) + " -> " + list(t.after);
  if (t.released) out += " releasing " + std::to_string(*t.released);
  return out;
}

// Cost-minimal strictly improving transitions of one agent, in tie-break
// order. Costs are scaled integers (see ResponseEvaluator); swap regimes use
// the plain distance cost.
struct TransitionOptions {
  std::int64_t now = detail::ResponseEvaluator::kInfinite;
  std::int64_t best = detail::ResponseEvaluator::kInfinite;
  std::vector<Transition> optima;

  bool improving() const { return !optima.empty(); }
};

namespace detail {

inline TransitionOptions swap_options(const Network& net, const GameConfig& cfg, AgentId u, bool any_edge) {
  ResponseEvaluator eval(net, u, make_config(Rational(1), cfg.k, cfg.mode));
  const std::vector<AgentId> owned(net.strategy(u).begin(), net.strategy(u).end());
  TransitionOptions opts;
  opts.now = eval.distance(owned);
  std::vector<AgentId> fresh;
  for (AgentId w : k_neighborhood(net, u, cfg.k)) {
    if (w != u && !net.adjacent(u, w)) fresh.push_back(w);
  }
  if (fresh.empty()) return opts;
  const std::vector<AgentId> fixed = eval.fixed();
  for (AgentId v : net.neighbors(u)) {
    const bool own = net.owns(u, v);
    if (!own && !any_edge) continue;
    std::vector<AgentId> keep_fixed = fixed;
    std::vector<AgentId> base = owned;
    if (own) std::erase(base, v);
    else std::erase(keep_fixed, v);
    for (AgentId w : fresh) {
      std::vector<AgentId> targets = base;
      targets.insert(std::lower_bound(targets.begin(), targets.end(), w), w);
      const std::int64_t d = eval.distance_with(keep_fixed, targets);
      if (d == ResponseEvaluator::kInfinite || (opts.now != ResponseEvaluator::kInfinite && d >= opts.now)) continue;
      if (d < opts.best) {
        opts.best = d;
        opts.optima.clear();
      }
      if (d == opts.best) {
        opts.optima.push_back({u, owned, targets, own ? std::nullopt : std::optional<AgentId>(v)});
      }
    }
  }
  return opts;
}

inline TransitionOptions greedy_options(const Network& net, const GameConfig& cfg, AgentId u) {
  const auto scan = scan_moves(net, cfg, u, enumerate_greedy_moves(net, cfg, u));
  TransitionOptions opts{scan.now, scan.best, {}};
  const std::vector<AgentId> owned(net.strategy(u).begin(), net.strategy(u).end());
  for (const auto& m : scan.optima) opts.optima.push_back({u, owned, resulting_targets(net, m), std::nullopt});
  return opts;
}

inline TransitionOptions buy_options(const Network& net, const GameConfig& cfg, AgentId u, std::size_t budget) {
  const auto candidates = local_candidates(net, cfg, u);
  check_budget(candidates.size(), budget);
  ResponseEvaluator eval(net, u, cfg);
  const std::vector<AgentId> owned(net.strategy(u).begin(), net.strategy(u).end());
  TransitionOptions opts;
  opts.now = eval.scaled_cost(owned);
  auto scan = scan_strategies(eval, candidates, net.size(), cfg.mode, true);
  if (scan.best == ResponseEvaluator::kInfinite) return opts;
  if (opts.now != ResponseEvaluator::kInfinite && scan.best >= opts.now) return opts;
  opts.best = scan.best;
  for (auto& t : scan.optima) opts.optima.push_back({u, owned, std::move(t), std::nullopt});
  return opts;
}

}  // namespace detail

inline TransitionOptions transition_options(const Network& net, const GameConfig& cfg, Regime regime, AgentId u,
                                            std::size_t budget = kDefaultSpaceBudget) {
  if (u >= net.size()) throw Error(ErrorCode::kInvalidArgument, "agent out of range");
  switch (regime) {
    case Regime::kSwap: return detail::swap_options(net, cfg, u, true);
    case Regime::kAsymSwap: return detail::swap_options(net, cfg, u, false);
    case Regime::kGreedyBuy: return detail::greedy_options(net, cfg, u);
    case Regime::kBuy: return detail::buy_options(net, cfg, u, budget);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown regime");
}

// Applies the agent's tie-broken best improving change, if there is one.
inline std::optional<Network> step(const Network& net, const GameConfig& cfg, Regime regime, AgentId agent) {
  auto opts = transition_options(net, cfg, regime, agent);
  if (!opts.improving()) return std::nullopt;
  return apply_transition(net, opts.optima.front());
}

// No agent has an improving change under the regime.
inline bool is_stable(const Network& net, const GameConfig& cfg, Regime regime) {
  for (AgentId u = 0; u < net.size(); ++u) {
    if (transition_options(net, cfg, regime, u).improving()) return false;
  }
  return true;
}

struct Scheduler {
  enum class Kind { kRoundRobin, kRandom, kScript, kMaxGain };

  Kind kind = Kind::kRoundRobin;
  std::uint64_t seed = 0;
  std::vector<AgentId> script;

  static Scheduler round_robin() { return {}; }
  static Scheduler random(std::uint64_t seed) { return {Kind::kRandom, seed, {}}; }
  static Scheduler scripted(std::vector<AgentId> order) { return {Kind::kScript, 0, std::move(order)}; }
  static Scheduler max_gain() { return {Kind::kMaxGain, 0, {}}; }
};

inline std::string to_string(const Scheduler& s) {
  switch (s.kind) {
    case Scheduler::Kind::kRoundRobin: return "ROUND_ROBIN";
    case Scheduler::Kind::kRandom: return "RANDOM(" + std::to_string(s.seed) + ")";
    case Scheduler::Kind::kScript: return "SCRIPT";
    case Scheduler::Kind::kMaxGain: return "MAX_GAIN";
  }
  return "?";
}

enum class Outcome { kConverged, kCycle, kBudgetExhausted };

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::kConverged: return "CONVERGED";
    case Outcome::kCycle: return "CYCLE";
    case Outcome::kBudgetExhausted: return "BUDGET_EXHAUSTED";
  }
  return "?";
}

struct TraceStep {
  Transition move;
  Digest hash;  // of the network after the move
};

// States are indexed 0 (start) .. steps.size(); state i+1 follows steps[i].
// For a cycle, state cycle_start equals state cycle_start + period.
struct Trace {
  Network start;
  std::vector<TraceStep> steps;
  Outcome outcome = Outcome::kBudgetExhausted;
  std::size_t cycle_start = 0;
  std::size_t period = 0;

  std::vector<Network> states() const {
    std::vector<Network> out{start};
    for (const auto& s : steps) out.push_back(apply_transition(out.back(), s.move));
    return out;
  }

  Network final_state() const {
    Network net = start;
    for (const auto& s : steps) net = apply_transition(net, s.move);
    return net;
  }
};

namespace detail {

// Uniform index below `bound` from a 64-bit engine. Written out so replays are
// identical across standard libraries.
inline std::size_t draw_below(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

inline void shuffle_agents(std::vector<AgentId>& order, std::mt19937_64& rng) {
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[draw_below(rng, i)]);
}

}  // namespace detail

// Activates agents according to the scheduler until no agent can improve
// (CONVERGED), a state repeats (CYCLE) or `max_steps` moves have been made.
inline Trace run(const Network& net, const GameConfig& cfg, Regime regime, const Scheduler& scheduler,
                 std::size_t max_steps) {
  cfg.validate();
  Trace trace{net, {}, Outcome::kBudgetExhausted, 0, 0};
  const std::size_t n = net.size();
  if (max_steps == 0 || n == 0) {
    if (n == 0) trace.outcome = Outcome::kConverged;
    return trace;
  }
  std::unordered_map<Digest, std::size_t, DigestHash> seen{{canonical_hash(net), 0}};
  Network current = net;
  std::vector<char> idle(n, 0);
  std::size_t idle_count = 0;
  std::mt19937_64 rng(scheduler.seed);
  std::vector<AgentId> order(n);
  for (AgentId u = 0; u < n; ++u) order[u] = u;
  std::size_t cursor = 0;
  std::size_t script_pos = 0;

  // Returns true when the run has terminated.
  auto perform = [&](const Transition& t) {
    if (trace.steps.size() == max_steps) {
      trace.outcome = Outcome::kBudgetExhausted;
      return true;
    }
    current = apply_transition(current, t);
    const Digest h = canonical_hash(current);
    trace.steps.push_back({t, h});
    std::fill(idle.begin(), idle.end(), 0);
    idle_count = 0;
    auto [it, inserted] = seen.emplace(h, trace.steps.size());
    if (!inserted) {
      trace.outcome = Outcome::kCycle;
      trace.cycle_start = it->second;
      trace.period = trace.steps.size() - it->second;
      return true;
    }
    return false;
  };

  while (true) {
    if (scheduler.kind == Scheduler::Kind::kMaxGain) {
      std::optional<std::pair<std::int64_t, Transition>> pick;  // gain, move
      bool pick_from_infinite = false;
      for (AgentId u = 0; u < n; ++u) {
        auto opts = transition_options(current, cfg, regime, u);
        if (!opts.improving()) continue;
        const bool from_infinite = opts.now == detail::ResponseEvaluator::kInfinite;
        const std::int64_t gain = from_infinite ? 0 : opts.now - opts.best;
        if (!pick || (from_infinite && !pick_from_infinite) ||
            (from_infinite == pick_from_infinite && gain > pick->first)) {
          pick.emplace(gain, opts.optima.front());
          pick_from_infinite = from_infinite;
        }
      }
      if (!pick) {
        trace.outcome = Outcome::kConverged;
        return trace;
      }
      if (perform(pick->second)) return trace;
      continue;
    }

    AgentId u = 0;
    switch (scheduler.kind) {
      case Scheduler::Kind::kRoundRobin:
        u = static_cast<AgentId>(cursor++ % n);
        break;
      case Scheduler::Kind::kRandom:
        if (cursor % n == 0) detail::shuffle_agents(order, rng);
        u = order[cursor++ % n];
        break;
      case Scheduler::Kind::kScript:
        if (script_pos == scheduler.script.size()) {
          if (is_stable(current, cfg, regime)) {
            trace.outcome = Outcome::kConverged;
            return trace;
          }
          throw Error(ErrorCode::kScriptExhausted,
                      "script ended after " + std::to_string(trace.steps.size()) + " moves without convergence");
        }
        u = scheduler.script[script_pos++];
        if (u >= n) throw Error(ErrorCode::kInvalidArgument, "scripted agent out of range");
        break;
      case Scheduler::Kind::kMaxGain:
        break;
    }
    auto opts = transition_options(current, cfg, regime, u);
    if (!opts.improving()) {
      if (!idle[u]) {
        idle[u] = 1;
        if (++idle_count == n) {
          trace.outcome = Outcome::kConverged;
          return trace;
        }
      }
      continue;
    }
    if (perform(opts.optima.front())) return trace;
  }
}

// Re-derives every step: each move must be one of its agent's cost-minimal
// improving changes in the pre-move state, recorded hashes must match, and a
// cycle trace must return to state cycle_start.
inline bool verify_trace(const Trace& trace, const GameConfig& cfg, Regime regime) {
  try {
    Network current = trace.start;
    std::vector<Digest> hashes{canonical_hash(current)};
    for (const auto& s : trace.steps) {
      auto opts = transition_options(current, cfg, regime, s.move.agent);
      const Network next = apply_transition(current, s.move);
      bool optimal = false;
      for (const auto& t : opts.optima) {
        if (apply_transition(current, t) == next) {
          optimal = true;
          break;
        }
      }
      if (!optimal) return false;
      current = next;
      hashes.push_back(canonical_hash(current));
      if (hashes.back() != s.hash) return false;
    }
    switch (trace.outcome) {
      case Outcome::kCycle:
        return trace.period > 0 && trace.cycle_start + trace.period == trace.steps.size() &&
               hashes[trace.cycle_start] == hashes.back();
      case Outcome::kConverged:
        return is_stable(current, cfg, regime);
      case Outcome::kBudgetExhausted:
        return true;
    }
  } catch (const Error&) {
    return false;
  }
  return false;
}

inline bool verify_cycle(const Trace& trace, const GameConfig& cfg, Regime regime) {
  return trace.outcome == Outcome::kCycle && verify_trace(trace, cfg, regime);
}

struct CycleSearchOptions {
  std::size_t budget = 10'000'000;  // expanded states, over all seeds
  std::uint64_t rng_seed = 1;
  bool pattern_seeds = true;
  std::size_t space_budget = kDefaultSpaceBudget;
  // Enumerate every state as a seed when there are at most this many.
  std::uint64_t exhaustive_limit = 1'000'000;
  // Give up after this many consecutive random seeds that were already explored.
  std::size_t stale_limit = 100'000;
};

struct CycleSearchResult {
  std::optional<Trace> cycle;
  std::size_t expanded = 0;
  std::size_t seeds_tried = 0;
};

namespace detail {

inline Network random_connected_network(std::size_t n, std::mt19937_64& rng, double extra_edge_chance) {
  std::vector<AgentId> order(n);
  for (AgentId u = 0; u < n; ++u) order[u] = u;
  shuffle_agents(order, rng);
  std::vector<std::vector<char>> linked(n, std::vector<char>(n, 0));
  std::vector<OwnedEdge> edges;
  auto add = [&](AgentId a, AgentId b) {
    linked[a][b] = linked[b][a] = 1;
    if (rng() & 1) std::swap(a, b);
    edges.push_back({a, b});
  };
  for (std::size_t i = 1; i < n; ++i) add(order[i], order[draw_below(rng, i)]);
  const auto threshold = static_cast<std::uint64_t>(extra_edge_chance * 1e9);
  for (AgentId a = 0; a < n; ++a) {
    for (AgentId b = a + 1; b < n; ++b) {
      if (!linked[a][b] && rng() % 1'000'000'000ULL < threshold) add(a, b);
    }
  }
  return Network::from_edges(n, edges);
}

// Ownership pattern on a subset of the pairs; every other pair is free.
struct SeedPattern {
  std::size_t n = 0;
  std::vector<OwnedEdge> present;
  std::vector<std::pair<AgentId, AgentId>> absent;
};

// Start states that admit known best-response cycles. For n = 6 the opening
// moves are: 0 buys {0,4}, 1 deletes {0,1}, 0 buys {0,1}, 1 deletes {1,4},
// 3 swaps {3,1} -> {3,0}, 2 swaps {2,1} -> {2,0}. For n = 8 they are: 3 swaps
// {3,2} -> {3,1}, 0 swaps {0,2} -> {0,1}, 1 deletes {1,7}, 2 buys {2,7}.
inline std::optional<SeedPattern> known_pattern(std::size_t n) {
  if (n == 6) return SeedPattern{6, {{1, 0}, {1, 4}, {3, 1}, {2, 1}, {5, 4}}, {{0, 4}, {0, 3}, {0, 2}}};
  if (n == 8) return SeedPattern{8, {{3, 2}, {0, 2}, {1, 7}}, {{2, 7}, {1, 3}, {0, 1}}};
  return std::nullopt;
}

// Completes the free pairs of `p`: each is absent or owned by either endpoint.
// Small patterns are enumerated exhaustively, larger ones sampled.
inline std::vector<Network> pattern_completions(const SeedPattern& p, std::mt19937_64& rng, std::size_t limit) {
  std::vector<std::vector<char>> fixed(p.n, std::vector<char>(p.n, 0));
  for (const auto& e : p.present) fixed[e.owner][e.other] = fixed[e.other][e.owner] = 1;
  for (const auto& [a, b] : p.absent) fixed[a][b] = fixed[b][a] = 1;
  std::vector<std::pair<AgentId, AgentId>> free;
  for (AgentId a = 0; a < p.n; ++a) {
    for (AgentId b = a + 1; b < p.n; ++b) {
      if (!fixed[a][b]) free.emplace_back(a, b);
    }
  }
  auto build = [&](auto&& choice) -> std::optional<Network> {
    std::vector<OwnedEdge> edges = p.present;
    for (std::size_t i = 0; i < free.size(); ++i) {
      const int c = choice(i);
      if (c == 1) edges.push_back({free[i].first, free[i].second});
      if (c == 2) edges.push_back({free[i].second, free[i].first});
    }
    Network net = Network::from_edges(p.n, edges);
    if (!is_connected(net)) return std::nullopt;
    return net;
  };
  std::vector<Network> out;
  std::uint64_t total = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i < free.size() && exhaustive; ++i) {
    total *= 3;
    if (total > limit) exhaustive = false;
  }
  if (exhaustive) {
    for (std::uint64_t code = 0; code < total; ++code) {
      auto net = build([&](std::size_t i) {
        std::uint64_t c = code;
        for (std::size_t j = 0; j < i; ++j) c /= 3;
        return static_cast<int>(c % 3);
      });
      if (net) out.push_back(std::move(*net));
    }
    return out;
  }
  while (out.size() < limit) {
    std::vector<int> choice(free.size());
    for (auto& c : choice) c = static_cast<int>(rng() % 4 == 0 ? rng() % 2 + 1 : 0);
    auto net = build([&](std::size_t i) { return choice[i]; });
    if (net) out.push_back(std::move(*net));
  }
  return out;
}

// Depth-first search of the best-response graph (every agent, every
// cost-minimal improving change) from `seed`, looking for a back edge.
// Colors: 1 = on the current path, 2 = fully explored.
inline std::optional<Trace> dfs_for_cycle(const Network& seed, const GameConfig& cfg, Regime regime,
                                          std::unordered_map<Digest, char, DigestHash>& color, std::size_t& expanded,
                                          std::size_t budget, std::size_t space_budget) {
  struct Frame {
    Network net;
    Digest hash;
    std::optional<Transition> via;
    std::vector<Transition> successors;
    std::size_t next = 0;
  };
  auto expand = [&](Frame& f) {
    ++expanded;
    for (AgentId u = 0; u < f.net.size(); ++u) {
      auto opts = transition_options(f.net, cfg, regime, u, space_budget);
      for (auto& t : opts.optima) f.successors.push_back(std::move(t));
    }
  };
  const Digest h0 = canonical_hash(seed);
  if (color.contains(h0) || expanded >= budget) return std::nullopt;
  std::vector<Frame> stack;
  stack.push_back({seed, h0, std::nullopt, {}, 0});
  color[h0] = 1;
  expand(stack.back());
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == top.successors.size()) {
      color[top.hash] = 2;
      stack.pop_back();
      continue;
    }
    const Transition t = top.successors[top.next++];
    Network next = apply_transition(top.net, t);
    const Digest h = canonical_hash(next);
    auto it = color.find(h);
    if (it != color.end() && it->second == 1) {
      Trace trace{stack.front().net, {}, Outcome::kCycle, 0, 0};
      for (std::size_t i = 1; i < stack.size(); ++i) trace.steps.push_back({*stack[i].via, stack[i].hash});
      trace.steps.push_back({t, h});
      for (std::size_t i = 0; i < stack.size(); ++i) {
        if (stack[i].hash == h) trace.cycle_start = i;
      }
      trace.period = trace.steps.size() - trace.cycle_start;
      return trace;
    }
    if (it != color.end()) continue;
    if (expanded >= budget) return std::nullopt;
    color[h] = 1;
    stack.push_back({std::move(next), h, t, {}, 0});
    expand(stack.back());
  }
  return std::nullopt;
}

}  // namespace detail

// Searches for a best-response cycle on n agents. Seeds are tried in order:
// the caller's, then states matching known cycle openings (n = 6 and n = 8),
// then every state if the space is small, else random connected states. The budget counts expanded states, shared
// across seeds; states explored from earlier seeds are not revisited.
inline CycleSearchResult find_br_cycle(std::size_t n, const GameConfig& cfg, Regime regime,
                                       std::span<const Network> seeds, const CycleSearchOptions& options = {}) {
  cfg.validate();
  CycleSearchResult result;
  std::unordered_map<Digest, char, DigestHash> color;
  std::mt19937_64 rng(options.rng_seed);
  auto attempt = [&](const Network& seed) {
    if (seed.size() != n) throw Error(ErrorCode::kInvalidArgument, "seed has the wrong number of agents");
    ++result.seeds_tried;
    result.cycle =
        detail::dfs_for_cycle(seed, cfg, regime, color, result.expanded, options.budget, options.space_budget);
    return result.cycle.has_value() || result.expanded >= options.budget;
  };
  for (const auto& s : seeds) {
    if (attempt(s)) return result;
  }
  if (options.pattern_seeds) {
    if (auto pattern = detail::known_pattern(n)) {
      for (const auto& s : detail::pattern_completions(*pattern, rng, 4096)) {
        if (attempt(s)) return result;
      }
    }
  }
  if (network_count(n) <= options.exhaustive_limit) {
    // Small state spaces are covered completely.
    for_each_network(n, false, [&](const Network& s) { return !attempt(s); });
    return result;
  }
  for (std::size_t stale = 0; stale < options.stale_limit;) {
    const std::size_t before = result.expanded;
    if (attempt(detail::random_connected_network(n, rng, 0.3))) return result;
    stale = result.expanded == before ? stale + 1 : 0;
  }
  return result;
}

}  // namespace ncg
