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

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ncg/config.hpp"
#include "ncg/cost.hpp"
#include "ncg/evaluator.hpp"
#include "ncg/moves.hpp"
#include "ncg/network.hpp"
#include "ncg/parallel.hpp"
#include "ncg/paths.hpp"

namespace ncg {

enum class Concept { kNE, kKNE, kGE, kKGE, kASE };

inline constexpr Concept kAllConcepts[] = {Concept::kNE, Concept::kKNE, Concept::kGE, Concept::kKGE, Concept::kASE};

inline std::string_view to_string(Concept c) {
  switch (c) {
    case Concept::kNE: return "NE";
    case Concept::kKNE: return "kNE";
    case Concept::kGE: return "GE";
    case Concept::kKGE: return "kGE";
    case Concept::kASE: return "ASE";
  }
  return "?";
}

inline Concept parse_concept(std::string_view text) {
  for (Concept c : kAllConcepts) {
    if (text == to_string(c)) return c;
  }
  if (text == "KNE" || text == "k-NE") return Concept::kKNE;
  if (text == "KGE" || text == "k-GE") return Concept::kKGE;
  throw Error(ErrorCode::kParseError, "unknown concept '" + std::string(text) + "'");
}

using Witness = std::variant<Strategy, GreedyMove>;

inline std::string describe(const Witness& w) {
  return std::visit([](const auto& x) { return describe(x); }, w);
}

struct Violation {
  AgentId agent = 0;
  Witness witness;
  Cost before;
  Cost after;
};

struct Verdict {
  std::optional<Violation> violation;  // lowest violating agent

  bool holds() const { return !violation.has_value(); }
};

namespace detail {

template <class Check>
Verdict first_violation(std::size_t n, Check&& check) {
  auto hit = parallel_find_first<Violation>(n, [&](std::size_t u) { return check(static_cast<AgentId>(u)); });
  if (!hit) return {};
  return {std::move(hit->second)};
}

inline std::optional<Violation> strategy_violation(const Network& net, const GameConfig& cfg, AgentId u,
                                                   const StrategyResponse& best) {
  const Cost now = agent_cost(net, cfg, u);
  if (best.cost < now) return Violation{u, best.strategy, now, best.cost};
  return std::nullopt;
}

inline std::optional<Violation> move_violation(const Network& net, const GameConfig& cfg, AgentId u,
                                               const std::optional<MoveResponse>& best) {
  if (!best) return std::nullopt;
  return Violation{u, best->move, agent_cost(net, cfg, u), best->cost};
}

// The cheapest own-edge swap of u by distance cost alone, if it strictly
// improves. Ties as for greedy moves.
inline std::optional<MoveResponse> best_own_swap(const Network& net, Mode mode, AgentId u) {
  std::vector<GreedyMove> swaps;
  for (const auto& m : enumerate_global_greedy_moves(net, u)) {
    if (m.kind == MoveKind::kSwap) swaps.push_back(m);
  }
  return best_move_of(net, make_config(Rational(1), 1, mode), u, swaps);
}

}  // namespace detail

inline Verdict is_k_ne(const Network& net, const GameConfig& cfg) {
  return detail::first_violation(net.size(), [&](AgentId u) {
    return detail::strategy_violation(net, cfg, u, best_k_local_response(net, cfg, u));
  });
}

inline Verdict is_k_ge(const Network& net, const GameConfig& cfg) {
  return detail::first_violation(net.size(), [&](AgentId u) {
    return detail::move_violation(net, cfg, u, best_greedy_move(net, cfg, u));
  });
}

inline Verdict is_ne(const Network& net, const GameConfig& cfg) {
  if (net.size() > kGlobalAgentLimit) {
    throw Error(ErrorCode::kSpaceTooLarge, "NE check limited to n <= " + std::to_string(kGlobalAgentLimit));
  }
  return detail::first_violation(net.size(), [&](AgentId u) {
    return detail::strategy_violation(net, cfg, u, best_global_response(net, cfg, u));
  });
}

inline Verdict is_ne(const Network& net, const Rational& alpha) { return is_ne(net, make_config(alpha, 1)); }

inline Verdict is_ge(const Network& net, const GameConfig& cfg) {
  return detail::first_violation(net.size(), [&](AgentId u) {
    return detail::move_violation(net, cfg, u, best_global_greedy_move(net, cfg, u));
  });
}

inline Verdict is_ge(const Network& net, const Rational& alpha) { return is_ge(net, make_config(alpha, 1)); }

// Own-edge swaps only; the edge price plays no role. Costs in the witness are
// distance costs.
inline Verdict is_ase(const Network& net, Mode mode = Mode::kSum) {
  return detail::first_violation(net.size(), [&](AgentId u) -> std::optional<Violation> {
    auto best = detail::best_own_swap(net, mode, u);
    if (!best) return std::nullopt;
    const Distance now = distance_cost(net, u, mode);
    return Violation{u, best->move, now.is_infinite() ? Cost::infinite() : Cost(Rational(now.value())), best->cost};
  });
}

inline Verdict check_concept(const Network& net, const GameConfig& cfg, Concept c) {
  switch (c) {
    case Concept::kNE: return is_ne(net, cfg);
    case Concept::kKNE: return is_k_ne(net, cfg);
    case Concept::kGE: return is_ge(net, cfg);
    case Concept::kKGE: return is_k_ge(net, cfg);
    case Concept::kASE: return is_ase(net, cfg.mode);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown concept");
}

enum class Scope { kLocalFull, kLocalGreedy, kGlobalFull, kGlobalGreedy };

inline std::string_view to_string(Scope s) {
  switch (s) {
    case Scope::kLocalFull: return "LOCAL_FULL";
    case Scope::kLocalGreedy: return "LOCAL_GREEDY";
    case Scope::kGlobalFull: return "GLOBAL_FULL";
    case Scope::kGlobalGreedy: return "GLOBAL_GREEDY";
  }
  return "?";
}

// Approximation factor beta >= 1, or INFINITE when some agent is disconnected
// but could reconnect.
struct Ratio {
  bool infinite = false;
  Rational value{1};

  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend bool operator<(const Ratio& a, const Ratio& b) {
    if (a.infinite || b.infinite) return !a.infinite && b.infinite;
    return a.value < b.value;
  }
};

inline std::string to_string(const Ratio& r) { return r.infinite ? "INFINITE" : format_rational(r.value); }

namespace detail {

inline Ratio cost_ratio(const Cost& now, const Cost& best) {
  if (best.is_infinite()) return {};
  if (now.is_infinite()) return {true, Rational(1)};
  if (best.value().numerator() == 0) return {};
  return {false, std::max(Rational(1), now.value() / best.value())};
}

inline Cost best_cost_in_scope(const Network& net, const GameConfig& cfg, AgentId u, Scope scope) {
  switch (scope) {
    case Scope::kLocalFull: return best_k_local_response(net, cfg, u).cost;
    case Scope::kGlobalFull: return best_global_response(net, cfg, u).cost;
    case Scope::kLocalGreedy:
    case Scope::kGlobalGreedy: {
      auto best = scope == Scope::kLocalGreedy ? best_greedy_move(net, cfg, u) : best_global_greedy_move(net, cfg, u);
      return best ? best->cost : agent_cost(net, cfg, u);
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown scope");
}

}  // namespace detail

// max over agents of cost_u / (cheapest finite cost reachable within scope).
inline Ratio approx_factor(const Network& net, const GameConfig& cfg, Scope scope) {
  auto per_agent = parallel_map<Ratio>(net.size(), [&](std::size_t u) {
    const auto a = static_cast<AgentId>(u);
    return detail::cost_ratio(agent_cost(net, cfg, a), detail::best_cost_in_scope(net, cfg, a, scope));
  });
  Ratio worst;
  for (const auto& r : per_agent) worst = std::max(worst, r);
  return worst;
}

struct EquilibriumReport {
  std::map<Concept, Verdict> verdicts;
  std::optional<Ratio> beta_local;   // LOCAL_FULL, when kNE was checked
  std::optional<Ratio> beta_global;  // GLOBAL_FULL, when NE was checked

  bool all_hold() const {
    for (const auto& [c, v] : verdicts) {
      if (!v.holds()) return false;
    }
    return true;
  }
};

inline EquilibriumReport certify(const Network& net, const GameConfig& cfg, std::span<const Concept> concepts) {
  EquilibriumReport report;
  for (Concept c : concepts) {
    if (report.verdicts.contains(c)) continue;
    report.verdicts[c] = check_concept(net, cfg, c);
    if (c == Concept::kKNE) {
      report.beta_local = report.verdicts[c].holds() ? Ratio{} : approx_factor(net, cfg, Scope::kLocalFull);
    }
    if (c == Concept::kNE) {
      report.beta_global = report.verdicts[c].holds() ? Ratio{} : approx_factor(net, cfg, Scope::kGlobalFull);
    }
  }
  return report;
}

inline EquilibriumReport certify(const Network& net, const GameConfig& cfg) { return certify(net, cfg, kAllConcepts); }

// Neighborhood growth facts that every k-local Nash equilibrium satisfies.
enum class BallLemma {
  kTwoBall,    // k >= 2: |N_2(v)| > n / (2 alpha) for every v
  kDichotomy,  // k >= 6, d <= k/3 - 1: some |N_{2d+3}(u)| > n/2, or every |N_{3d+3}(v)| >= m n / alpha
  kDoubling,   // k >= 4, alpha < n/2, d <= k/2 - 1: |N_d(u)| >= n/2 implies |N_{2d+1}(u)| >= n
};

inline std::string_view to_string(BallLemma l) {
  switch (l) {
    case BallLemma::kTwoBall: return "two-ball";
    case BallLemma::kDichotomy: return "dichotomy";
    case BallLemma::kDoubling: return "doubling";
  }
  return "?";
}

struct BallCheck {
  BallLemma lemma = BallLemma::kTwoBall;
  int d = 0;
  std::string branch;            // which inequality was evaluated
  std::optional<AgentId> agent;  // agent the inequality was evaluated at
  bool passed = false;
  std::string detail;
  bool binding = true;  // false for the single dichotomy branches, which are informational
};

struct BallLemmaReport {
  std::vector<BallCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks) {
      if (c.binding && !c.passed) return false;
    }
    return true;
  }
};

namespace detail {

// ball[r][v] = |N_r(v)| for r in [0, max_radius].
inline std::vector<std::vector<std::size_t>> ball_sizes(const Network& net, int max_radius) {
  std::vector<std::vector<std::size_t>> ball(max_radius + 1, std::vector<std::size_t>(net.size(), 0));
  for (AgentId v = 0; v < net.size(); ++v) {
    for (auto d : bfs(net, v)) {
      if (d == kUnreached || d > max_radius) continue;
      for (int r = d; r <= max_radius; ++r) ++ball[r][v];
    }
  }
  return ball;
}

}  // namespace detail

// Evaluates every applicable ball inequality. The dichotomy is reported per
// branch (first: "some agent", second: "every agent") together with a combined
// check that passes if either branch does.
inline BallLemmaReport check_ball_lemmas(const Network& net, const GameConfig& cfg) {
  if (cfg.k < 2) throw Error(ErrorCode::kPreconditionNotMet, "ball inequalities need k >= 2");
  if (cfg.mode != Mode::kSum) throw Error(ErrorCode::kPreconditionNotMet, "ball inequalities are stated for sum mode");
  if (!is_k_ne(net, cfg).holds()) throw Error(ErrorCode::kPreconditionNotMet, "network is not a k-local Nash equilibrium");

  const auto n = static_cast<std::int64_t>(net.size());
  const int k = cfg.k;
  const Rational& alpha = cfg.alpha;
  const auto ball = detail::ball_sizes(net, k + 3);
  BallLemmaReport report;

  for (AgentId v = 0; v < net.size(); ++v) {
    const auto size = static_cast<std::int64_t>(ball[2][v]);
    // |N_2| > n / (2 alpha)  <=>  2 alpha |N_2| > n
    const bool ok = 2 * alpha * size > n;
    report.checks.push_back({BallLemma::kTwoBall, 2, "every", v, ok,
                             "|N_2|=" + std::to_string(size) + " vs n/(2a)=" + format_rational(Rational(n) / (2 * alpha))});
  }

  if (k >= 6) {
    for (int d = 1; 3 * (d + 1) <= k; ++d) {
      std::size_t m = net.size();
      for (AgentId v = 0; v < net.size(); ++v) m = std::min(m, ball[d][v]);
      std::optional<AgentId> some;
      for (AgentId u = 0; u < net.size() && !some; ++u) {
        if (2 * static_cast<std::int64_t>(ball[2 * d + 3][u]) > n) some = u;
      }
      std::optional<AgentId> failing;
      for (AgentId v = 0; v < net.size() && !failing; ++v) {
        if (alpha * static_cast<std::int64_t>(ball[3 * d + 3][v]) < Rational(static_cast<std::int64_t>(m) * n)) {
          failing = v;
        }
      }
      report.checks.push_back({BallLemma::kDichotomy, d, "some |N_{2d+3}| > n/2", some, some.has_value(), "", false});
      report.checks.push_back({BallLemma::kDichotomy, d, "every |N_{3d+3}| >= m n/a", failing, !failing.has_value(),
                               "m=" + std::to_string(m), false});
      report.checks.push_back(
          {BallLemma::kDichotomy, d, "either", std::nullopt, some.has_value() || !failing.has_value(), ""});
    }
  }

  if (k >= 4 && 2 * alpha < n) {
    for (int d = 1; 2 * (d + 1) <= k; ++d) {
      for (AgentId u = 0; u < net.size(); ++u) {
        if (2 * static_cast<std::int64_t>(ball[d][u]) < n) continue;
        const auto reach = static_cast<std::int64_t>(ball[2 * d + 1][u]);
        report.checks.push_back({BallLemma::kDoubling, d, "|N_{2d+1}| >= n", u, reach >= n,
                                 "|N_d|=" + std::to_string(ball[d][u]) + " |N_{2d+1}|=" + std::to_string(reach)});
      }
    }
  }
  return report;
}

}  // namespace ncg
