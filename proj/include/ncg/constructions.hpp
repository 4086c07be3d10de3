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
#include <optional>
#include <string>
#include <vector>

#include "ncg/config.hpp"
#include "ncg/dynamics.hpp"
#include "ncg/equilibrium.hpp"
#include "ncg/families.hpp"
#include "ncg/moves.hpp"
#include "ncg/network.hpp"
#include "ncg/paths.hpp"

namespace ncg {

using families::balanced_clique;
using families::clique;
using families::complete_binary_tree;
using families::directed_cycle;
using families::ds_reduction;
using families::h_tree;
using families::kne_tree_instance;
using families::line;
using families::star;
using families::tree_star;

// A cycle a = c_0, c_1, ... with two pendants and an agent u owning a single
// edge to a, such that every swap of u within N_k(u) is non-improving while
// the (k+1)-local swap towards b_k strictly improves.
struct GkNontree {
  Network net;
  AgentId u = 0;
  AgentId a = 0;
  AgentId b_k = 0;      // end of the first arc, carries pendant b'
  AgentId b_prime = 0;
  AgentId d_prime = 0;  // pendant on the far side of the cycle
  std::vector<int> arcs;  // lengths a -> b_k -> f -> x -> a
};

namespace detail {

struct CycleLayout {
  std::vector<int> arcs;
  std::uint64_t cycle_owners = 0;  // bit i set: edge {c_i, c_{i+1}} owned by c_{i+1}
  bool b_pendant_owns = false;
  bool d_pendant_owns = false;
};

inline GkNontree build_gk(const CycleLayout& layout) {
  int length = 0;
  for (int arc : layout.arcs) length += arc;
  // u = 0, cycle c_i = 1 + i, then b', d'.
  const AgentId u = 0;
  auto c = [&](int i) { return static_cast<AgentId>(1 + (i % length)); };
  const AgentId b_prime = static_cast<AgentId>(1 + length);
  const AgentId d_prime = b_prime + 1;
  const int bk_index = layout.arcs[0];
  const int x_index = layout.arcs[0] + layout.arcs[1] + layout.arcs[2];
  std::vector<OwnedEdge> edges{{u, c(0)}};
  for (int i = 0; i < length; ++i) {
    if (layout.cycle_owners >> i & 1) edges.push_back({c(i + 1), c(i)});
    else edges.push_back({c(i), c(i + 1)});
  }
  edges.push_back(layout.b_pendant_owns ? OwnedEdge{b_prime, c(bk_index)} : OwnedEdge{c(bk_index), b_prime});
  edges.push_back(layout.d_pendant_owns ? OwnedEdge{d_prime, c(x_index)} : OwnedEdge{c(x_index), d_prime});
  GkNontree g;
  g.net = Network::from_edges(static_cast<std::size_t>(length) + 3, edges);
  g.u = u;
  g.a = c(0);
  g.b_k = c(bk_index);
  g.b_prime = b_prime;
  g.d_prime = d_prime;
  g.arcs = layout.arcs;
  return g;
}

// u's swaps within N_k are all non-improving and the swap a -> b_k improves.
inline bool gk_certified(const GkNontree& g, int k) {
  const GameConfig local = make_config(Rational(1), k);
  const Distance now = distance_cost(g.net, g.u);
  for (const auto& m : enumerate_greedy_moves(g.net, local, g.u)) {
    if (m.kind == MoveKind::kSwap && distance_cost(apply_move(g.net, m), g.u) < now) return false;
  }
  const auto reach = k_neighborhood(g.net, g.u, k);
  const auto wider = k_neighborhood(g.net, g.u, k + 1);
  if (std::binary_search(reach.begin(), reach.end(), g.b_k) || !std::binary_search(wider.begin(), wider.end(), g.b_k)) {
    return false;
  }
  return distance_cost(apply_move(g.net, GreedyMove::swap(g.u, g.a, g.b_k)), g.u) < now;
}

}  // namespace detail

// Searches arc lengths (first and last arc k, middle arcs k-1 first, then
// every pair up to 2k), cycle edge ownership and pendant ownership for an
// instance where u's pendants both sit at distance k+2 and the swap
// certification holds.
inline GkNontree gk_nontree(int k, std::size_t max_layouts = std::size_t{1} << 16) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "gk_nontree needs k >= 2");
  std::vector<std::pair<int, int>> middles{{k - 1, k - 1}};
  for (int total = 2; total <= 4 * k; ++total) {
    for (int mid1 = std::max(1, total - 2 * k); mid1 < total && mid1 <= 2 * k; ++mid1) {
      if (mid1 != k - 1 || total - mid1 != k - 1) middles.emplace_back(mid1, total - mid1);
    }
  }
  std::size_t tried = 0;
  for (auto [mid1, mid2] : middles) {
    const int length = 2 * k + mid1 + mid2;
    const std::uint64_t patterns = std::uint64_t{1} << std::min(length, 20);
    for (std::uint64_t owners = 0; owners < patterns; ++owners) {
      for (int pendants = 0; pendants < 4; ++pendants) {
        if (tried++ >= max_layouts) {
          throw Error(ErrorCode::kConstructionSearchFailed, "layout budget exhausted for k=" + std::to_string(k));
        }
        GkNontree g = detail::build_gk({{k, mid1, mid2, k}, owners, (pendants & 1) != 0, (pendants & 2) != 0});
        const auto dist = ncg::detail::bfs(g.net, g.u);
        if (dist[g.b_prime] != k + 2 || dist[g.d_prime] != k + 2) continue;
        if (detail::gk_certified(g, k)) return g;
      }
    }
  }
  throw Error(ErrorCode::kConstructionSearchFailed, "no certified instance for k=" + std::to_string(k));
}

}  // namespace ncg
