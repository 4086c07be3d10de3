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

// Slow reference implementations used only by tests. Nothing here calls the
// library's BFS, evaluator or solvers; networks are handled as plain owner
// edge lists and distances come from Floyd-Warshall.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ncg/network.hpp"
#include "ncg/rational.hpp"

namespace oracle {

using ncg::AgentId;
using ncg::Rational;

inline constexpr std::int64_t kInf = -1;

struct Plain {
  std::size_t n = 0;
  std::vector<std::pair<AgentId, AgentId>> edges;  // (owner, other)
};

inline Plain plain(const ncg::Network& net) {
  Plain p{net.size(), {}};
  for (AgentId u = 0; u < net.size(); ++u) {
    for (AgentId v : net.strategy(u)) p.edges.emplace_back(u, v);
  }
  return p;
}

inline ncg::Network to_network(const Plain& p) {
  std::vector<ncg::OwnedEdge> edges;
  for (auto [a, b] : p.edges) edges.push_back({a, b});
  return ncg::Network::from_edges(p.n, edges);
}

inline std::vector<std::vector<std::int64_t>> all_pairs(const Plain& p) {
  const std::size_t n = p.n;
  const std::int64_t big = static_cast<std::int64_t>(n) + 1;
  std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, big));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [a, b] : p.edges) d[a][b] = d[b][a] = 1;
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
    }
  }
  for (auto& row : d) {
    for (auto& x : row) {
      if (x >= big) x = kInf;
    }
  }
  return d;
}

// Sum (or max) of distances from u, nullopt when someone is unreachable.
inline std::optional<std::int64_t> dist_cost(const Plain& p, AgentId u, bool max_mode = false) {
  const auto d = all_pairs(p);
  std::int64_t total = 0;
  for (std::size_t v = 0; v < p.n; ++v) {
    if (d[u][v] == kInf) return std::nullopt;
    total = max_mode ? std::max(total, d[u][v]) : total + d[u][v];
  }
  return total;
}

inline std::optional<Rational> cost(const Plain& p, const Rational& alpha, AgentId u, bool max_mode = false) {
  auto dist = dist_cost(p, u, max_mode);
  if (!dist) return std::nullopt;
  std::int64_t owned = 0;
  for (auto [a, b] : p.edges) owned += a == u;
  return alpha * owned + *dist;
}

inline std::vector<AgentId> owned_by(const Plain& p, AgentId u) {
  std::vector<AgentId> out;
  for (auto [a, b] : p.edges) {
    if (a == u) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Replaces u's owned edges by `targets`.
inline Plain with_targets(const Plain& p, AgentId u, const std::vector<AgentId>& targets) {
  Plain q{p.n, {}};
  for (auto e : p.edges) {
    if (e.first != u) q.edges.push_back(e);
  }
  for (AgentId t : targets) q.edges.emplace_back(u, t);
  return q;
}

inline Plain with_edge(Plain p, AgentId owner, AgentId other) {
  p.edges.emplace_back(owner, other);
  return p;
}

inline bool owned_towards(const Plain& p, AgentId owner, AgentId other) {
  for (auto [a, b] : p.edges) {
    if (a == owner && b == other) return true;
  }
  return false;
}

// Candidates for a radius-limited strategy: own targets plus everyone within
// `radius` hops except agents that already own an edge to u. radius < 0 means
// unlimited.
inline std::vector<AgentId> candidates(const Plain& p, AgentId u, int radius) {
  const auto d = all_pairs(p);
  std::vector<AgentId> out;
  for (AgentId w = 0; w < p.n; ++w) {
    if (w == u || owned_towards(p, w, u)) continue;
    const bool near = d[u][w] != kInf && (radius < 0 || d[u][w] <= radius);
    if (near || owned_towards(p, u, w)) out.push_back(w);
  }
  return out;
}

inline bool less_cost(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

// Minimum cost over every subset of the candidates.
inline std::optional<Rational> best_response_cost(const Plain& p, const Rational& alpha, AgentId u, int radius,
                                                  bool max_mode = false) {
  const auto cand = candidates(p, u, radius);
  std::optional<Rational> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cand.size()); ++mask) {
    std::vector<AgentId> t;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (mask >> i & 1) t.push_back(cand[i]);
    }
    auto c = cost(with_targets(p, u, t), alpha, u, max_mode);
    if (less_cost(c, best)) best = c;
  }
  return best;
}

// Every strategy reachable by one buy, delete or swap within `radius`.
inline std::vector<std::vector<AgentId>> greedy_targets(const Plain& p, AgentId u, int radius) {
  const auto own = owned_by(p, u);
  const auto d = all_pairs(p);
  std::vector<AgentId> fresh;
  for (AgentId w = 0; w < p.n; ++w) {
    if (w == u || d[u][w] == 1) continue;
    if (d[u][w] != kInf && (radius < 0 || d[u][w] <= radius)) fresh.push_back(w);
  }
  std::vector<std::vector<AgentId>> out;
  for (AgentId v : own) {
    auto t = own;
    std::erase(t, v);
    out.push_back(t);
    for (AgentId w : fresh) {
      auto s = t;
      s.push_back(w);
      out.push_back(s);
    }
  }
  for (AgentId w : fresh) {
    auto t = own;
    t.push_back(w);
    out.push_back(t);
  }
  return out;
}

inline std::optional<Rational> best_greedy_cost(const Plain& p, const Rational& alpha, AgentId u, int radius,
                                                bool max_mode = false) {
  std::optional<Rational> best;
  for (const auto& t : greedy_targets(p, u, radius)) {
    auto c = cost(with_targets(p, u, t), alpha, u, max_mode);
    if (less_cost(c, best)) best = c;
  }
  return best;
}

inline int min_dominating_set(std::size_t n, const std::vector<std::pair<AgentId, AgentId>>& edges) {
  int best = static_cast<int>(n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<char> covered(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1) covered[v] = 1;
    }
    for (auto [a, b] : edges) {
      if (mask >> a & 1) covered[b] = 1;
      if (mask >> b & 1) covered[a] = 1;
    }
    if (std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; })) {
      best = std::min(best, std::popcount(mask));
    }
  }
  return best;
}

// Random spanning tree plus extra edges, each with a random owner.
inline ncg::Network random_connected(std::size_t n, std::mt19937_64& rng, double extra = 0.25) {
  Plain p{n, {}};
  std::vector<std::vector<char>> linked(n, std::vector<char>(n, 0));
  auto add = [&](AgentId a, AgentId b) {
    if (rng() & 1) std::swap(a, b);
    p.edges.emplace_back(a, b);
    linked[a][b] = linked[b][a] = 1;
  };
  for (AgentId v = 1; v < n; ++v) add(v, static_cast<AgentId>(rng() % v));
  std::bernoulli_distribution coin(extra);
  for (AgentId a = 0; a < n; ++a) {
    for (AgentId b = a + 1; b < n; ++b) {
      if (!linked[a][b] && coin(rng)) add(a, b);
    }
  }
  return to_network(p);
}

inline ncg::Network random_tree(std::size_t n, std::mt19937_64& rng) { return random_connected(n, rng, 0.0); }

}  // namespace oracle
