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

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "ncg/config.hpp"
#include "ncg/cost.hpp"
#include "ncg/network.hpp"

namespace ncg::detail {

// Evaluates candidate strategies of a single agent u against a fixed network.
// Costs are kept as integers scaled by the denominator of alpha:
//   scaled = num(alpha) * |S| + den(alpha) * dist.
// Only u's adjacency changes between candidates, so the BFS walks the original
// adjacency for every other agent (u itself is visited first and never again).
class ResponseEvaluator {
 public:
  static constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max();

  ResponseEvaluator(const Network& net, AgentId u, const GameConfig& cfg)
      : net_(&net),
        u_(u),
        mode_(cfg.mode),
        alpha_(cfg.alpha),
        fixed_(net.in_owners(u)),
        stamp_(net.size(), 0),
        dist_(net.size(), 0) {
    queue_.reserve(net.size());
  }

  AgentId agent() const { return u_; }
  const std::vector<AgentId>& fixed() const { return fixed_; }

  // dist_u when u's incident edges are exactly fixed() plus `targets`.
  std::int64_t distance(std::span<const AgentId> targets) { return distance_with(fixed_, targets); }

  // dist_u when u's incident edges are exactly `fixed` plus `targets`.
  std::int64_t distance_with(std::span<const AgentId> fixed, std::span<const AgentId> targets) {
    if (++current_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      current_ = 1;
    }
    queue_.clear();
    visit(u_, 0);
    for (AgentId v : fixed) visit(v, 1);
    for (AgentId v : targets) visit(v, 1);
    std::int64_t total = 0;
    for (std::size_t head = 1; head < queue_.size(); ++head) {
      const AgentId x = queue_[head];
      const std::int32_t dx = dist_[x];
      total = mode_ == Mode::kSum ? total + dx : std::max<std::int64_t>(total, dx);
      for (AgentId y : net_->neighbors(x)) visit(y, dx + 1);
    }
    return queue_.size() == net_->size() ? total : kInfinite;
  }

  std::int64_t scaled(std::size_t edges, std::int64_t dist) const {
    if (dist == kInfinite) return kInfinite;
    return alpha_.numerator() * static_cast<std::int64_t>(edges) + alpha_.denominator() * dist;
  }

  std::int64_t scaled_cost(std::span<const AgentId> targets) { return scaled(targets.size(), distance(targets)); }

  Cost to_cost(std::int64_t scaled_value) const {
    if (scaled_value == kInfinite) return Cost::infinite();
    return Cost(Rational(scaled_value, alpha_.denominator()));
  }

 private:
  void visit(AgentId v, std::int32_t d) {
    if (stamp_[v] == current_) return;
    stamp_[v] = current_;
    dist_[v] = d;
    queue_.push_back(v);
  }

  const Network* net_;
  AgentId u_;
  Mode mode_;
  Rational alpha_;
  std::vector<AgentId> fixed_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::int32_t> dist_;
  std::vector<AgentId> queue_;
  std::uint32_t current_ = 0;
};

}  // namespace ncg::detail
