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
#include <bit>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "ncg/config.hpp"
#include "ncg/cost.hpp"
#include "ncg/evaluator.hpp"
#include "ncg/network.hpp"
#include "ncg/paths.hpp"

namespace ncg {

// Exhaustive solvers refuse spaces with more candidate targets than this.
inline constexpr std::size_t kDefaultSpaceBudget = 24;
// Global best responses enumerate 2^(n-1) strategies; refuse beyond this n.
inline constexpr std::size_t kGlobalAgentLimit = 16;

// Declaration order is the tie-break order among equal-cost greedy moves.
enum class MoveKind { kDelete, kSwap, kBuy };

inline std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::kDelete: return "DELETE";
    case MoveKind::kSwap: return "SWAP";
    case MoveKind::kBuy: return "BUY";
  }
  return "?";
}

struct GreedyMove {
  AgentId actor = 0;
  MoveKind kind = MoveKind::kBuy;
  std::optional<AgentId> drop;  // DELETE and SWAP
  std::optional<AgentId> add;   // SWAP and BUY

  static GreedyMove buy(AgentId actor, AgentId target) { return {actor, MoveKind::kBuy, std::nullopt, target}; }
  static GreedyMove remove(AgentId actor, AgentId target) { return {actor, MoveKind::kDelete, target, std::nullopt}; }
  static GreedyMove swap(AgentId actor, AgentId from, AgentId to) { return {actor, MoveKind::kSwap, from, to}; }

  friend bool operator==(const GreedyMove&, const GreedyMove&) = default;
};

inline std::string describe(const GreedyMove& m) {
  std::string out = std::to_string(m.actor) + " " + std::string(to_string(m.kind));
  if (m.kind == MoveKind::kSwap) return out + " " + std::to_string(*m.drop) + "->" + std::to_string(*m.add);
  return out + " " + std::to_string(m.kind == MoveKind::kDelete ? *m.drop : *m.add);
}

struct Strategy {
  AgentId actor = 0;
  std::vector<AgentId> targets;  // ascending

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

inline std::string describe(const Strategy& s) {
  std::string out = std::to_string(s.actor) + " {";
  for (std::size_t i = 0; i < s.targets.size(); ++i) out += (i ? "," : "") + std::to_string(s.targets[i]);
  return out + "}";
}

struct StrategyResponse {
  Strategy strategy;
  Cost cost;
};

struct MoveResponse {
  GreedyMove move;
  Cost cost;
};

inline Strategy current_strategy(const Network& net, AgentId u) {
  return {u, std::vector<AgentId>(net.strategy(u).begin(), net.strategy(u).end())};
}

// The actor's owned targets after the move.
inline std::vector<AgentId> resulting_targets(const Network& net, const GreedyMove& m) {
  std::vector<AgentId> targets(net.strategy(m.actor).begin(), net.strategy(m.actor).end());
  if (m.drop) std::erase(targets, *m.drop);
  if (m.add) targets.insert(std::lower_bound(targets.begin(), targets.end(), *m.add), *m.add);
  return targets;
}

inline Network apply_strategy(const Network& net, const Strategy& s) { return net.with_strategy(s.actor, s.targets); }

inline Network apply_move(const Network& net, const GreedyMove& m) {
  if (m.drop && !net.owns(m.actor, *m.drop)) {
    throw Error(ErrorCode::kInvalidStrategy, "move drops an edge the actor does not own: " + describe(m));
  }
  return net.with_strategy(m.actor, resulting_targets(net, m));
}

namespace detail {

// Agents other than u within `radius` hops (all agents if radius < 0).
inline std::vector<AgentId> reachable_others(const Network& net, AgentId u, int radius) {
  std::vector<AgentId> result;
  if (radius < 0) {
    for (AgentId v = 0; v < net.size(); ++v) {
      if (v != u) result.push_back(v);
    }
    return result;
  }
  result = k_neighborhood(net, u, radius);
  std::erase(result, u);
  return result;
}

inline std::vector<GreedyMove> greedy_moves_within(const Network& net, AgentId u, int radius) {
  if (u >= net.size()) throw Error(ErrorCode::kInvalidArgument, "agent out of range");
  std::vector<AgentId> fresh;
  for (AgentId v : reachable_others(net, u, radius)) {
    if (!net.adjacent(u, v)) fresh.push_back(v);
  }
  const auto owned = net.strategy(u);
  std::vector<GreedyMove> moves;
  moves.reserve(owned.size() * (fresh.size() + 1) + fresh.size());
  for (AgentId v : owned) moves.push_back(GreedyMove::remove(u, v));
  for (AgentId v : owned) {
    for (AgentId w : fresh) moves.push_back(GreedyMove::swap(u, v, w));
  }
  for (AgentId w : fresh) moves.push_back(GreedyMove::buy(u, w));
  return moves;
}

// Targets u may own after a move restricted to `radius`: its own targets plus
// every non-in-owner within reach.
inline std::vector<AgentId> strategy_candidates(const Network& net, AgentId u, int radius) {
  if (u >= net.size()) throw Error(ErrorCode::kInvalidArgument, "agent out of range");
  std::vector<AgentId> result;
  for (AgentId v : reachable_others(net, u, radius)) {
    if (!net.adjacent(u, v) || net.owns(u, v)) result.push_back(v);
  }
  return result;
}

}  // namespace detail

// Single buy/delete/swap moves of u whose new endpoints lie in N_k(u), in
// tie-break order: deletions, swaps, purchases, each by ascending targets.
inline std::vector<GreedyMove> enumerate_greedy_moves(const Network& net, const GameConfig& cfg, AgentId u) {
  return detail::greedy_moves_within(net, u, cfg.k);
}

// Same without the locality restriction.
inline std::vector<GreedyMove> enumerate_global_greedy_moves(const Network& net, AgentId u) {
  return detail::greedy_moves_within(net, u, -1);
}

inline std::vector<AgentId> local_candidates(const Network& net, const GameConfig& cfg, AgentId u) {
  return detail::strategy_candidates(net, u, cfg.k);
}

// All subsets of a candidate list, indexed by bit mask.
class StrategySpace {
 public:
  StrategySpace(AgentId actor, std::vector<AgentId> candidates) : actor_(actor), candidates_(std::move(candidates)) {
    if (candidates_.size() >= 63) throw Error(ErrorCode::kSpaceTooLarge, "strategy space beyond 2^62");
  }

  AgentId actor() const { return actor_; }
  const std::vector<AgentId>& candidates() const { return candidates_; }
  std::uint64_t size() const { return std::uint64_t{1} << candidates_.size(); }

  Strategy at(std::uint64_t mask) const {
    Strategy s{actor_, {}};
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      if (mask >> i & 1) s.targets.push_back(candidates_[i]);
    }
    return s;
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Strategy;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const StrategySpace* space, std::uint64_t mask) : space_(space), mask_(mask) {}
    Strategy operator*() const { return space_->at(mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++mask_;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    const StrategySpace* space_ = nullptr;
    std::uint64_t mask_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

 private:
  AgentId actor_;
  std::vector<AgentId> candidates_;
};

// Every S'_u within S_u ∪ N_k(u)\{u}, neighborhoods taken before the move;
// targets already linked to u by someone else's edge are excluded.
inline StrategySpace local_strategy_space(const Network& net, const GameConfig& cfg, AgentId u) {
  return StrategySpace(u, local_candidates(net, cfg, u));
}

namespace detail {

// (cost, |targets|, targets) ordering used by all exhaustive solvers.
inline bool better_strategy(std::int64_t cost_a, const std::vector<AgentId>& a, std::int64_t cost_b,
                            const std::vector<AgentId>& b) {
  if (cost_a != cost_b) return cost_a < cost_b;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct StrategyScan {
  std::int64_t best = ResponseEvaluator::kInfinite;
  std::vector<AgentId> chosen;
  std::vector<std::vector<AgentId>> optima;  // all minimizers, when collected
};

// Enumerates every subset of `candidates`. The edge price alone gives a lower
// bound that skips the BFS for hopeless subsets.
inline StrategyScan scan_strategies(ResponseEvaluator& eval, const std::vector<AgentId>& candidates, std::size_t n,
                                    Mode mode, bool collect) {
  StrategyScan scan;
  const std::int64_t min_dist = n <= 1 ? 0 : (mode == Mode::kSum ? static_cast<std::int64_t>(n) - 1 : 1);
  std::vector<AgentId> targets;
  const std::uint64_t total = std::uint64_t{1} << candidates.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const auto count = static_cast<std::size_t>(std::popcount(mask));
    if (scan.best != ResponseEvaluator::kInfinite && eval.scaled(count, min_dist) > scan.best) continue;
    targets.clear();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (mask >> i & 1) targets.push_back(candidates[i]);
    }
    const std::int64_t cost = eval.scaled_cost(targets);
    if (cost == ResponseEvaluator::kInfinite) continue;
    if (scan.best == ResponseEvaluator::kInfinite || better_strategy(cost, targets, scan.best, scan.chosen)) {
      if (collect && cost < scan.best) scan.optima.clear();
      scan.best = cost;
      scan.chosen = targets;
      if (collect) scan.optima.push_back(targets);
    } else if (collect && cost == scan.best) {
      scan.optima.push_back(targets);
    }
  }
  if (collect) {
    std::sort(scan.optima.begin(), scan.optima.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
  }
  return scan;
}

inline void check_budget(std::size_t candidates, std::size_t budget) {
  if (candidates > budget) {
    throw Error(ErrorCode::kSpaceTooLarge, std::to_string(candidates) + " candidate targets exceed the budget of " +
                                               std::to_string(budget));
  }
}

inline StrategyResponse solve(const Network& net, const GameConfig& cfg, AgentId u,
                              const std::vector<AgentId>& candidates) {
  ResponseEvaluator eval(net, u, cfg);
  const auto scan = scan_strategies(eval, candidates, net.size(), cfg.mode, false);
  if (scan.best == ResponseEvaluator::kInfinite) {
    // Every option disconnects u; keep the current strategy.
    return {current_strategy(net, u), Cost::infinite()};
  }
  return {{u, scan.chosen}, eval.to_cost(scan.best)};
}

}  // namespace detail

// Exhaustive minimum over the k-local strategy space. Ties: fewest targets,
// then the lexicographically smallest target list.
inline StrategyResponse best_k_local_response(const Network& net, const GameConfig& cfg, AgentId u,
                                              std::size_t budget = kDefaultSpaceBudget) {
  const auto candidates = local_candidates(net, cfg, u);
  detail::check_budget(candidates.size(), budget);
  return detail::solve(net, cfg, u, candidates);
}

// Exhaustive minimum over every S'_u ⊆ V\{u}; k is ignored.
inline StrategyResponse best_global_response(const Network& net, const GameConfig& cfg, AgentId u) {
  if (net.size() > kGlobalAgentLimit) {
    throw Error(ErrorCode::kSpaceTooLarge, "global best response limited to n <= " + std::to_string(kGlobalAgentLimit));
  }
  return detail::solve(net, cfg, u, detail::strategy_candidates(net, u, -1));
}

inline StrategyResponse best_global_response(const Network& net, const Rational& alpha, AgentId u) {
  return best_global_response(net, make_config(alpha, 1, Mode::kSum), u);
}

// All cost-minimal k-local strategies of u, provided they strictly improve on
// the current cost; empty otherwise. Sorted in tie-break order.
inline std::vector<Strategy> optimal_k_local_responses(const Network& net, const GameConfig& cfg, AgentId u,
                                                       std::size_t budget = kDefaultSpaceBudget) {
  const auto candidates = local_candidates(net, cfg, u);
  detail::check_budget(candidates.size(), budget);
  detail::ResponseEvaluator eval(net, u, cfg);
  const std::vector<AgentId> owned(net.strategy(u).begin(), net.strategy(u).end());
  const std::int64_t now = eval.scaled_cost(owned);
  auto scan = detail::scan_strategies(eval, candidates, net.size(), cfg.mode, true);
  std::vector<Strategy> result;
  if (scan.best == detail::ResponseEvaluator::kInfinite || scan.best >= now) return result;
  for (auto& t : scan.optima) result.push_back({u, std::move(t)});
  return result;
}

namespace detail {

struct MoveScan {
  std::int64_t now = ResponseEvaluator::kInfinite;
  std::int64_t best = ResponseEvaluator::kInfinite;
  std::vector<GreedyMove> optima;  // strictly improving minimizers in tie order
};

inline MoveScan scan_moves(const Network& net, const GameConfig& cfg, AgentId u, const std::vector<GreedyMove>& moves) {
  ResponseEvaluator eval(net, u, cfg);
  const std::vector<AgentId> owned(net.strategy(u).begin(), net.strategy(u).end());
  MoveScan scan;
  scan.now = eval.scaled_cost(owned);
  for (const auto& m : moves) {
    const std::int64_t cost = eval.scaled_cost(resulting_targets(net, m));
    if (cost == ResponseEvaluator::kInfinite) continue;
    if (scan.now != ResponseEvaluator::kInfinite && cost >= scan.now) continue;
    if (cost < scan.best) {
      scan.best = cost;
      scan.optima.clear();
    }
    if (cost == scan.best) scan.optima.push_back(m);
  }
  return scan;
}

inline std::optional<MoveResponse> best_move_of(const Network& net, const GameConfig& cfg, AgentId u,
                                                const std::vector<GreedyMove>& moves) {
  const auto scan = scan_moves(net, cfg, u, moves);
  if (scan.optima.empty()) return std::nullopt;
  return MoveResponse{scan.optima.front(), Cost(Rational(scan.best, cfg.alpha.denominator()))};
}

}  // namespace detail

// The best strictly improving k-local greedy move, if any. Ties: DELETE <
// SWAP < BUY, then ascending targets.
inline std::optional<MoveResponse> best_greedy_move(const Network& net, const GameConfig& cfg, AgentId u) {
  return detail::best_move_of(net, cfg, u, enumerate_greedy_moves(net, cfg, u));
}

inline std::optional<MoveResponse> best_global_greedy_move(const Network& net, const GameConfig& cfg, AgentId u) {
  return detail::best_move_of(net, cfg, u, enumerate_global_greedy_moves(net, u));
}

inline std::vector<GreedyMove> optimal_greedy_moves(const Network& net, const GameConfig& cfg, AgentId u) {
  return detail::scan_moves(net, cfg, u, enumerate_greedy_moves(net, cfg, u)).optima;
}

// Facility location view of u's k-local response: facilities are N_k(u)\{u},
// clients are V\{u}, and client v connects to facility x at d(v,x) + 1
// measured in the network without u.
struct UMFLInstance {
  AgentId agent = 0;
  Mode mode = Mode::kSum;
  std::vector<AgentId> facilities;  // ascending
  std::vector<AgentId> clients;     // ascending
  std::map<AgentId, Rational> opening_cost;
  std::vector<std::vector<Distance>> distance;  // [facility index][client index]

  std::size_t facility_index(AgentId x) const {
    auto it = std::lower_bound(facilities.begin(), facilities.end(), x);
    if (it == facilities.end() || *it != x) {
      throw Error(ErrorCode::kInvalidArgument, "agent " + std::to_string(x) + " is not a facility");
    }
    return static_cast<std::size_t>(it - facilities.begin());
  }
};

inline UMFLInstance build_umfl_instance(const Network& net, const GameConfig& cfg, AgentId u) {
  UMFLInstance inst;
  inst.agent = u;
  inst.mode = cfg.mode;
  inst.facilities = detail::reachable_others(net, u, cfg.k);
  for (AgentId v = 0; v < net.size(); ++v) {
    if (v != u) inst.clients.push_back(v);
  }
  Network without_u(net.size());
  for (const auto& e : net.edges()) {
    if (e.owner != u && e.other != u) without_u = without_u.with_edge(e.owner, e.other);
  }
  for (AgentId x : inst.facilities) {
    const bool in_owner = net.adjacent(u, x) && !net.owns(u, x);
    inst.opening_cost[x] = in_owner ? Rational(0) : cfg.alpha;
    const auto dist = detail::bfs(without_u, x);
    std::vector<Distance> row;
    row.reserve(inst.clients.size());
    for (AgentId v : inst.clients) {
      row.push_back(dist[v] == detail::kUnreached ? Distance::infinite() : Distance(dist[v] + 1));
    }
    inst.distance.push_back(std::move(row));
  }
  return inst;
}

// Opening cost of `open` plus every client's cheapest connection (summed, or
// maxed in max mode). Free facilities are always open.
inline Cost umfl_cost(const UMFLInstance& inst, std::span<const AgentId> open) {
  std::vector<std::size_t> opened;
  Rational opening{0};
  for (AgentId x : open) {
    const std::size_t i = inst.facility_index(x);
    if (std::find(opened.begin(), opened.end(), i) != opened.end()) continue;
    opened.push_back(i);
    opening += inst.opening_cost.at(x);
  }
  for (std::size_t i = 0; i < inst.facilities.size(); ++i) {
    if (inst.opening_cost.at(inst.facilities[i]).numerator() == 0 && std::find(opened.begin(), opened.end(), i) == opened.end()) {
      opened.push_back(i);
    }
  }
  std::int64_t connection = 0;
  for (std::size_t c = 0; c < inst.clients.size(); ++c) {
    Distance best = Distance::infinite();
    for (std::size_t i : opened) best = std::min(best, inst.distance[i][c]);
    if (best.is_infinite()) return Cost::infinite();
    connection = inst.mode == Mode::kSum ? connection + best.value() : std::max(connection, best.value());
  }
  return Cost(opening + connection);
}

}  // namespace ncg
