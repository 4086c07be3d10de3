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
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncg/error.hpp"

namespace ncg {

// Agents are fixed labels 0..n-1; two networks are equal only if labels and
// owners agree.
using AgentId = std::uint32_t;

// Hop count or INFINITE. Addition with INFINITE is absorbing.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::int64_t hops) : hops_(hops) {}

  static constexpr Distance infinite() {
    Distance d;
    d.hops_ = kInfinite;
    return d;
  }

  constexpr bool is_infinite() const { return hops_ == kInfinite; }
  constexpr bool is_finite() const { return hops_ != kInfinite; }

  std::int64_t value() const {
    if (is_infinite()) throw Error(ErrorCode::kInvalidArgument, "value() of an infinite distance");
    return hops_;
  }

  friend constexpr Distance operator+(Distance a, Distance b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return Distance(a.hops_ + b.hops_);
  }

  // INFINITE compares greater than every finite distance.
  friend constexpr auto operator<=>(Distance a, Distance b) = default;
  friend constexpr bool operator==(Distance a, Distance b) = default;

 private:
  static constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max();
  std::int64_t hops_ = 0;
};

inline std::string to_string(Distance d) {
  return d.is_infinite() ? std::string("INFINITE") : std::to_string(d.value());
}

struct OwnedEdge {
  AgentId owner = 0;
  AgentId other = 0;

  friend auto operator<=>(const OwnedEdge&, const OwnedEdge&) = default;
};

// Undirected simple graph in which every edge has exactly one owner among
// its endpoints. The per-agent owned sets are the strategy vector.
class Network {
 public:
  Network() = default;
  explicit Network(std::size_t n) : owned_(n), adjacent_(n) {}

  // Rejects self-loops, out-of-range endpoints and pairs listed twice
  // (in either orientation).
  static Network from_edges(std::size_t n, std::span<const OwnedEdge> edges) {
    Network net(n);
    for (const auto& e : edges) net.add_edge_checked(e.owner, e.other);
    return net;
  }

  std::size_t size() const { return owned_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  // S_u, sorted ascending.
  std::span<const AgentId> strategy(AgentId u) const { return owned_.at(u); }
  // All incident agents, sorted ascending.
  std::span<const AgentId> neighbors(AgentId u) const { return adjacent_.at(u); }
  std::size_t degree(AgentId u) const { return adjacent_.at(u).size(); }

  // Agents that own an edge towards u.
  std::vector<AgentId> in_owners(AgentId u) const {
    std::vector<AgentId> result;
    for (AgentId v : adjacent_.at(u)) {
      if (!owns(u, v)) result.push_back(v);
    }
    return result;
  }

  bool adjacent(AgentId u, AgentId v) const {
    const auto& a = adjacent_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
  }

  // True iff u owns the edge {u, v}.
  bool owns(AgentId u, AgentId v) const {
    const auto& s = owned_.at(u);
    return std::binary_search(s.begin(), s.end(), v);
  }

  std::optional<AgentId> owner(AgentId u, AgentId v) const {
    if (owns(u, v)) return u;
    if (owns(v, u)) return v;
    return std::nullopt;
  }

  // Owner-annotated edge list sorted by (owner, other).
  std::vector<OwnedEdge> edges() const {
    std::vector<OwnedEdge> result;
    result.reserve(edge_count_);
    for (AgentId u = 0; u < size(); ++u) {
      for (AgentId v : owned_[u]) result.push_back({u, v});
    }
    return result;
  }

  // Copy in which u owns exactly `targets`; all other edges untouched.
  // Throws kInvalidStrategy on self-targets, duplicates, out-of-range ids or
  // targets that already own an edge towards u.
  Network with_strategy(AgentId u, std::span<const AgentId> targets) const {
    check_agent(u);
    Network next = *this;
    for (AgentId v : owned_[u]) next.erase_pair(u, v);
    for (AgentId v : targets) {
      if (v >= size() || v == u) {
        throw Error(ErrorCode::kInvalidStrategy, "agent " + std::to_string(u) + " cannot target " + std::to_string(v));
      }
      if (next.adjacent(u, v)) {
        throw Error(ErrorCode::kInvalidStrategy, "edge {" + std::to_string(u) + "," + std::to_string(v) +
                                                     "} already exists with owner " + std::to_string(v) +
                                                     " or target listed twice");
      }
      next.insert_pair(u, v);
    }
    return next;
  }

  Network with_edge(AgentId owner, AgentId other) const {
    Network next = *this;
    next.add_edge_checked(owner, other);
    return next;
  }

  Network without_edge(AgentId u, AgentId v) const {
    auto who = owner(u, v);
    if (!who) throw Error(ErrorCode::kInvalidArgument, "no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    Network next = *this;
    next.erase_pair(*who, *who == u ? v : u);
    return next;
  }

  friend bool operator==(const Network& a, const Network& b) { return a.owned_ == b.owned_; }

 private:
  void check_agent(AgentId u) const {
    if (u >= size()) throw Error(ErrorCode::kInvalidArgument, "agent " + std::to_string(u) + " out of range");
  }

  void add_edge_checked(AgentId owner, AgentId other) {
    if (owner >= size() || other >= size()) {
      throw Error(ErrorCode::kInvalidNetwork, "edge endpoint out of range: [" + std::to_string(owner) + "," +
                                                  std::to_string(other) + "] with n=" + std::to_string(size()));
    }
    if (owner == other) throw Error(ErrorCode::kInvalidNetwork, "self-loop at " + std::to_string(owner));
    if (adjacent(owner, other)) {
      throw Error(ErrorCode::kInvalidNetwork,
                  "duplicate edge {" + std::to_string(owner) + "," + std::to_string(other) + "}");
    }
    insert_pair(owner, other);
  }

  static void sorted_insert(std::vector<AgentId>& list, AgentId v) {
    list.insert(std::lower_bound(list.begin(), list.end(), v), v);
  }

  static void sorted_erase(std::vector<AgentId>& list, AgentId v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it != list.end() && *it == v) list.erase(it);
  }

  void insert_pair(AgentId owner, AgentId other) {
    sorted_insert(owned_[owner], other);
    sorted_insert(adjacent_[owner], other);
    sorted_insert(adjacent_[other], owner);
    ++edge_count_;
  }

  void erase_pair(AgentId owner, AgentId other) {
    sorted_erase(owned_[owner], other);
    sorted_erase(adjacent_[owner], other);
    sorted_erase(adjacent_[other], owner);
    --edge_count_;
  }

  std::vector<std::vector<AgentId>> owned_;
  std::vector<std::vector<AgentId>> adjacent_;
  std::size_t edge_count_ = 0;
};

}  // namespace ncg
