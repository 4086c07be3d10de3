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
#include <utility>
#include <vector>

#include "ncg/network.hpp"
#include "ncg/paths.hpp"

namespace ncg {

// Number of ownership-annotated networks on n agents: each pair is absent or
// owned by one of its two endpoints.
inline std::uint64_t network_count(std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * (n - 1) / 2; ++i) total *= 3;
  return total;
}

// Calls fn(net) for every ownership-annotated network on n agents (optionally
// only the connected ones) in a fixed order. Stops early if fn returns false.
template <class Fn>
void for_each_network(std::size_t n, bool connected_only, Fn&& fn) {
  std::vector<std::pair<AgentId, AgentId>> pairs;
  for (AgentId a = 0; a < n; ++a) {
    for (AgentId b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  std::vector<int> digit(pairs.size(), 0);
  std::vector<OwnedEdge> edges;
  while (true) {
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (digit[i] == 1) edges.push_back({pairs[i].first, pairs[i].second});
      if (digit[i] == 2) edges.push_back({pairs[i].second, pairs[i].first});
    }
    Network net = Network::from_edges(n, edges);
    if (!connected_only || is_connected(net)) {
      if (!fn(net)) return;
    }
    std::size_t i = 0;
    while (i < digit.size() && digit[i] == 2) digit[i++] = 0;
    if (i == digit.size()) return;
    ++digit[i];
  }
}

}  // namespace ncg
