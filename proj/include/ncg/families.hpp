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

#include "ncg/config.hpp"
#include "ncg/network.hpp"

// Generators for the named network families. Wherever ownership is not
// dictated by the family, the lower index owns the edge.
namespace ncg::families {

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

inline std::size_t pow2(int e) { return std::size_t{1} << e; }

// Appends a complete binary tree of depth d whose agents start at `offset`
// (heap order: children of i are 2i+1, 2i+2). Parents own child edges.
inline void append_binary_tree(std::vector<OwnedEdge>& edges, AgentId offset, int d) {
  const std::size_t count = pow2(d + 1) - 1;
  for (std::size_t i = 1; i < count; ++i) {
    edges.push_back({static_cast<AgentId>(offset + (i - 1) / 2), static_cast<AgentId>(offset + i)});
  }
}

}  // namespace detail

inline Network line(std::size_t n) {
  detail::require(n >= 2, "line needs n >= 2");
  std::vector<OwnedEdge> edges;
  for (AgentId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Network::from_edges(n, edges);
}

// Agent 0 is the center and owns every edge.
inline Network star(std::size_t n) {
  detail::require(n >= 2, "star needs n >= 2");
  std::vector<OwnedEdge> edges;
  for (AgentId i = 1; i < n; ++i) edges.push_back({0, i});
  return Network::from_edges(n, edges);
}

inline Network clique(std::size_t n) {
  detail::require(n >= 2, "clique needs n >= 2");
  std::vector<OwnedEdge> edges;
  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Network::from_edges(n, edges);
}

// Complete network in which agent i owns the edges to i+1, ..., i+floor((n-1)/2)
// (mod n); for even n the antipodal edges go to the lower index. Every agent
// owns roughly half of its incident edges.
inline Network balanced_clique(std::size_t n) {
  detail::require(n >= 2, "clique needs n >= 2");
  std::vector<OwnedEdge> edges;
  const std::size_t half = (n - 1) / 2;
  for (AgentId i = 0; i < n; ++i) {
    for (std::size_t j = 1; j <= half; ++j) edges.push_back({i, static_cast<AgentId>((i + j) % n)});
  }
  if (n % 2 == 0) {
    for (AgentId i = 0; i < n / 2; ++i) edges.push_back({i, static_cast<AgentId>(i + n / 2)});
  }
  return Network::from_edges(n, edges);
}

// Agent i owns {i, i+1 mod n}.
inline Network directed_cycle(std::size_t n) {
  detail::require(n >= 3, "cycle needs n >= 3");
  std::vector<OwnedEdge> edges;
  for (AgentId i = 0; i < n; ++i) edges.push_back({i, static_cast<AgentId>((i + 1) % n)});
  return Network::from_edges(n, edges);
}

// 2^{d+1}-1 agents in heap order, root 0, parents own the edges.
inline Network complete_binary_tree(int d) {
  detail::require(d >= 1, "binary tree needs depth >= 1");
  std::vector<OwnedEdge> edges;
  detail::append_binary_tree(edges, 0, d);
  return Network::from_edges(detail::pow2(d + 1) - 1, edges);
}

// First leaf (heap order) of a complete binary tree of depth d.
inline AgentId first_leaf(int d) { return static_cast<AgentId>(detail::pow2(d) - 1); }

// Path u = 0, 1, ..., l = v (lower index owns), then v owns an edge to the
// root of a depth-d complete binary tree. For l = 0 the reference agent is v.
struct HTree {
  Network net;
  AgentId u = 0;
  AgentId v = 0;
  AgentId root = 0;
  int depth = 0;
};

inline HTree h_tree(int d, int l) {
  detail::require(d >= 0 && l >= 0, "h_tree needs d >= 0 and l >= 0");
  std::vector<OwnedEdge> edges;
  for (AgentId i = 0; i < static_cast<AgentId>(l); ++i) edges.push_back({i, i + 1});
  const auto v = static_cast<AgentId>(l);
  const AgentId root = v + 1;
  edges.push_back({v, root});
  detail::append_binary_tree(edges, root, d);
  const std::size_t n = static_cast<std::size_t>(l) + detail::pow2(d + 1);
  return {Network::from_edges(n, edges), 0, v, root, d};
}

// Depth-d binary tree (agents 0..2^{d+1}-2, root 0) joined by agent y, who
// owns edges to the root and to the star center z; z owns its l leaf edges.
struct TreeStar {
  Network net;
  AgentId root = 0;
  AgentId y = 0;
  AgentId z = 0;
  AgentId leaf = 0;  // a leaf of the binary tree
  int d = 0;
  int l = 0;

  // The agent at distance `hops` from `leaf` on its path towards z.
  AgentId towards_z(int hops) const {
    AgentId x = leaf;
    for (int i = 0; i < hops; ++i) {
      if (x == root) x = y;
      else if (x == y) x = z;
      else x = (x - 1) / 2;
    }
    return x;
  }
};

inline TreeStar tree_star(int d, int l) {
  detail::require(d >= 1 && l >= 1, "tree_star needs d >= 1 and l >= 1");
  std::vector<OwnedEdge> edges;
  detail::append_binary_tree(edges, 0, d);
  const auto y = static_cast<AgentId>(detail::pow2(d + 1) - 1);
  const AgentId z = y + 1;
  edges.push_back({y, 0});
  edges.push_back({y, z});
  for (int i = 1; i <= l; ++i) edges.push_back({z, z + static_cast<AgentId>(i)});
  const std::size_t n = detail::pow2(d + 1) + static_cast<std::size_t>(l) + 1;
  return {Network::from_edges(n, edges), 0, y, z, first_leaf(d), d, l};
}

struct PlainGraph {
  std::size_t n = 0;
  std::vector<std::pair<AgentId, AgentId>> edges;
};

struct DsReduction {
  Network net;
  AgentId hub = 0;
  Rational alpha{3, 2};
};

// The graph's edges (lower index owns) plus a hub agent n owning an edge to
// every vertex, priced at alpha = 3/2.
inline DsReduction ds_reduction(const PlainGraph& g) {
  std::vector<OwnedEdge> edges;
  for (auto [a, b] : g.edges) edges.push_back({std::min(a, b), std::max(a, b)});
  const auto hub = static_cast<AgentId>(g.n);
  for (AgentId v = 0; v < g.n; ++v) edges.push_back({hub, v});
  return {Network::from_edges(g.n + 1, edges), hub, Rational(3, 2)};
}

struct KneTreeInstance {
  Network net;
  GameConfig cfg;
};

// Complete binary tree of depth d priced at alpha = (k-1) n, which makes it a
// k-local Nash equilibrium.
inline KneTreeInstance kne_tree_instance(int d, int k) {
  detail::require(k >= 2 && k <= d, "kne_tree_instance needs 2 <= k <= d");
  Network net = complete_binary_tree(d);
  const auto n = static_cast<std::int64_t>(net.size());
  return {std::move(net), make_config(Rational((k - 1) * n), k, Mode::kSum)};
}

}  // namespace ncg::families
