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
#include <vector>

#include "ncg/network.hpp"

namespace ncg {

namespace detail {

inline constexpr std::int32_t kUnreached = -1;

// Breadth-first hop distances from `source`; unreachable agents get kUnreached.
// `max_depth` < 0 means unbounded.
inline void bfs(const Network& net, AgentId source, std::vector<std::int32_t>& dist,
                std::vector<AgentId>& queue, std::int32_t max_depth = -1) {
  dist.assign(net.size(), kUnreached);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const AgentId x = queue[head];
    if (max_depth >= 0 && dist[x] >= max_depth) continue;
    for (AgentId y : net.neighbors(x)) {
      if (dist[y] == kUnreached) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
}

inline std::vector<std::int32_t> bfs(const Network& net, AgentId source) {
  std::vector<std::int32_t> dist;
  std::vector<AgentId> queue;
  bfs(net, source, dist, queue);
  return dist;
}

}  // namespace detail

inline std::vector<Distance> shortest_paths(const Network& net, AgentId source) {
  if (source >= net.size()) throw Error(ErrorCode::kInvalidArgument, "source out of range");
  const auto raw = detail::bfs(net, source);
  std::vector<Distance> result;
  result.reserve(raw.size());
  for (auto d : raw) result.push_back(d == detail::kUnreached ? Distance::infinite() : Distance(d));
  return result;
}

// N_k(u): all agents within k hops of u, u included, ascending.
inline std::vector<AgentId> k_neighborhood(const Network& net, AgentId u, int k) {
  if (u >= net.size()) throw Error(ErrorCode::kInvalidArgument, "agent out of range");
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "negative radius");
  std::vector<std::int32_t> dist;
  std::vector<AgentId> queue;
  detail::bfs(net, u, dist, queue, k);
  std::vector<AgentId> result;
  for (AgentId v = 0; v < net.size(); ++v) {
    if (dist[v] != detail::kUnreached) result.push_back(v);
  }
  return result;
}

inline bool is_connected(const Network& net) {
  if (net.size() <= 1) return true;
  const auto dist = detail::bfs(net, 0);
  for (auto d : dist) {
    if (d == detail::kUnreached) return false;
  }
  return true;
}

// Eccentricity of u, INFINITE if some agent is unreachable.
inline Distance eccentricity(const Network& net, AgentId u) {
  std::int32_t worst = 0;
  for (auto d : detail::bfs(net, u)) {
    if (d == detail::kUnreached) return Distance::infinite();
    worst = std::max(worst, d);
  }
  return Distance(worst);
}

inline Distance diameter(const Network& net) {
  Distance worst(0);
  std::vector<std::int32_t> dist;
  std::vector<AgentId> queue;
  for (AgentId u = 0; u < net.size(); ++u) {
    detail::bfs(net, u, dist, queue);
    for (auto d : dist) {
      if (d == detail::kUnreached) return Distance::infinite();
      worst = std::max(worst, Distance(d));
    }
  }
  return worst;
}

}  // namespace ncg
