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

#include <compare>
#include <cstdint>
#include <string>

#include "ncg/config.hpp"
#include "ncg/families.hpp"
#include "ncg/network.hpp"
#include "ncg/paths.hpp"

namespace ncg {

// Exact rational cost, or INFINITE for an agent that cannot reach everyone.
class Cost {
 public:
  Cost() = default;
  explicit Cost(Rational value) : value_(value) {}
  static Cost infinite() {
    Cost c;
    c.infinite_ = true;
    return c;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  const Rational& value() const {
    if (infinite_) throw Error(ErrorCode::kInvalidArgument, "value() of an infinite cost");
    return value_;
  }

  friend bool operator==(const Cost& a, const Cost& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Cost& a, const Cost& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend Cost operator+(const Cost& a, const Cost& b) {
    if (a.infinite_ || b.infinite_) return infinite();
    return Cost(a.value_ + b.value_);
  }

 private:
  Rational value_{0};
  bool infinite_ = false;
};

inline std::string to_string(const Cost& c) { return c.is_infinite() ? "INFINITE" : format_rational(c.value()); }

namespace detail {

// Sum or max of the finite entries of a BFS distance vector; INFINITE if any
// entry is unreached.
inline Distance aggregate(const std::vector<std::int32_t>& dist, Mode mode) {
  std::int64_t total = 0;
  for (auto d : dist) {
    if (d == kUnreached) return Distance::infinite();
    total = mode == Mode::kSum ? total + d : std::max<std::int64_t>(total, d);
  }
  return Distance(total);
}

inline Cost make_cost(const Rational& alpha, std::size_t edges, Distance dist) {
  if (dist.is_infinite()) return Cost::infinite();
  return Cost(alpha * static_cast<std::int64_t>(edges) + dist.value());
}

}  // namespace detail

// dist_u: sum (or max) of hop distances from u to every agent.
inline Distance distance_cost(const Network& net, AgentId u, Mode mode = Mode::kSum) {
  if (u >= net.size()) throw Error(ErrorCode::kInvalidArgument, "agent out of range");
  return detail::aggregate(detail::bfs(net, u), mode);
}

inline Cost agent_cost(const Network& net, const GameConfig& cfg, AgentId u) {
  return detail::make_cost(cfg.alpha, net.strategy(u).size(), distance_cost(net, u, cfg.mode));
}

inline Cost social_cost(const Network& net, const GameConfig& cfg) {
  Cost total;
  for (AgentId u = 0; u < net.size(); ++u) {
    total = total + agent_cost(net, cfg, u);
    if (total.is_infinite()) break;
  }
  return total;
}

// Social optimum of the Sum game: the spanning star for alpha >= 2, the
// complete network below that. Evaluated on the generated network.
inline Cost opt_cost(std::size_t n, const GameConfig& cfg) {
  if (cfg.mode != Mode::kSum) throw Error(ErrorCode::kNotSupported, "no social optimum characterization for max mode");
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "opt_cost needs n >= 2");
  const Network reference = cfg.alpha >= 2 ? families::star(n) : families::clique(n);
  return social_cost(reference, cfg);
}

inline Rational poa_ratio(const Network& net, const GameConfig& cfg) {
  const Cost social = social_cost(net, cfg);
  if (social.is_infinite()) throw Error(ErrorCode::kInfiniteRatio, "network is disconnected");
  return social.value() / opt_cost(net.size(), cfg).value();
}

}  // namespace ncg
