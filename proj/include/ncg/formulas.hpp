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
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncg/config.hpp"
#include "ncg/cost.hpp"
#include "ncg/families.hpp"
#include "ncg/network.hpp"
#include "ncg/paths.hpp"

// Closed-form distance sums on the tree and tree-star families, each paired
// with a BFS evaluation of the same quantity.
namespace ncg::formulas {

struct FormulaResult {
  std::int64_t closed_form = 0;
  std::int64_t oracle = 0;
  bool match = false;
};

namespace detail {

inline std::int64_t p2(int e) { return std::int64_t{1} << e; }

inline void require_even_depth(int d) {
  if (d < 2 || d % 2 != 0) throw Error(ErrorCode::kOddDepth, "depth must be even and >= 2, got " + std::to_string(d));
}

inline FormulaResult compare(std::int64_t closed_form, std::int64_t oracle) {
  return {closed_form, oracle, closed_form == oracle};
}

inline std::int64_t distance_sum(const Network& net, AgentId u) { return distance_cost(net, u, Mode::kSum).value(); }

}  // namespace detail

// Distance sum from u to v and to every agent of the hanging tree.
inline FormulaResult h_dist(int d, int l) {
  if (d < 0 || l < 0) throw Error(ErrorCode::kInvalidArgument, "h_dist needs d >= 0 and l >= 0");
  const auto h = families::h_tree(d, l);
  const auto dist = ncg::detail::bfs(h.net, h.u);
  std::int64_t oracle = dist[h.v];
  for (AgentId x = h.root; x < h.net.size(); ++x) oracle += dist[x];
  return detail::compare(detail::p2(d + 1) * (d + l) + 1, oracle);
}

// Distance sum of a leaf of the complete binary tree of depth d.
inline FormulaResult t_dist(int d) {
  detail::require_even_depth(d);
  const auto tree = families::complete_binary_tree(d);
  return detail::compare(detail::p2(d + 1) * (2 * d - 3) + d + 6, detail::distance_sum(tree, families::first_leaf(d)));
}

// Distance sum of a tree leaf in tree_star(d, l).
inline FormulaResult tree_star_leaf_dist(int d, int l) {
  detail::require_even_depth(d);
  if (l < 1) throw Error(ErrorCode::kInvalidArgument, "l must be positive");
  const auto g = families::tree_star(d, l);
  return detail::compare(detail::p2(d + 1) * (2 * d - 3) + 3 * d + std::int64_t{l} * (d + 3) + 9,
                         detail::distance_sum(g.net, g.leaf));
}

// The same leaf after buying an edge to the star center z.
inline FormulaResult after_buy_uz_dist(int d, int l) {
  detail::require_even_depth(d);
  const auto g = families::tree_star(d, l);
  const std::int64_t closed =
      detail::p2(d + 1) * d + d - 3 * detail::p2(d / 2 + 2) + detail::p2(d + 2) + 2 * std::int64_t{l} + 9;
  return detail::compare(closed, detail::distance_sum(g.net.with_edge(g.leaf, g.z), g.leaf));
}

// The same leaf after buying an edge to the bridge agent y.
inline FormulaResult after_buy_uy_dist(int d, int l) {
  detail::require_even_depth(d);
  const auto g = families::tree_star(d, l);
  const std::int64_t closed =
      3 * std::int64_t{l} + detail::p2(d + 1) * d + d - detail::p2(d / 2 + 3) + detail::p2(d + 1) + 9;
  return detail::compare(closed, detail::distance_sum(g.net.with_edge(g.leaf, g.y), g.leaf));
}

// Star size from which buying the edge to z is the leaf's best purchase.
inline std::int64_t l_min(int d) {
  detail::require_even_depth(d);
  return detail::p2(d + 1) - detail::p2(d / 2 + 2);
}

// Agents with the same open neighborhood ("twins") have the same distances to
// everyone else, so a purchase gain depends only on the twin classes of buyer
// and target. One buyer per class and one target per class (two members when
// both ends share a class) cover every value; on tree_star this collapses the
// l star leaves into a single class.
inline std::int64_t max_purchase_gain(const Network& net, int k) {
  const std::size_t n = net.size();
  std::map<std::vector<AgentId>, std::vector<AgentId>> by_neighborhood;
  for (AgentId v = 0; v < n; ++v) {
    std::vector<AgentId> key(net.neighbors(v).begin(), net.neighbors(v).end());
    std::sort(key.begin(), key.end());
    by_neighborhood[std::move(key)].push_back(v);
  }
  std::vector<std::vector<AgentId>> classes;
  for (auto& [key, members] : by_neighborhood) classes.push_back(std::move(members));

  std::unordered_map<AgentId, std::vector<std::int32_t>> rows;
  std::vector<AgentId> queue;
  auto row = [&](AgentId v) -> const std::vector<std::int32_t>& {
    auto it = rows.find(v);
    if (it == rows.end()) {
      it = rows.emplace(v, std::vector<std::int32_t>{}).first;
      ncg::detail::bfs(net, v, it->second, queue);
    }
    return it->second;
  };

  std::int64_t best = 0;
  for (const auto& buyers : classes) {
    const AgentId u = buyers.front();
    const auto& du = row(u);
    for (const auto& targets : classes) {
      const AgentId w = &targets == &buyers ? (targets.size() > 1 ? targets[1] : u) : targets.front();
      if (w == u || du[w] > k || du[w] < 2) continue;
      const auto& dw = row(w);
      std::int64_t gain = 0;
      for (std::size_t v = 0; v < n; ++v) gain += std::max(0, du[v] - dw[v] - 1);
      best = std::max(best, gain);
    }
  }
  return best;
}

struct DeltaResult {
  std::int64_t general_form = 0;           // the displayed formula for all k
  std::optional<std::int64_t> special_form;  // |V|-3 for k = 2, 2(|V|-7) for k = 3
  std::int64_t oracle = 0;                 // max k-local single purchase gain
};

// Maximum distance decrease by one k-local greedy purchase in tree_star(d, l).
// The oracle is authoritative; the closed forms are reported alongside it.
inline DeltaResult delta_max_decrease(int d, int k, int l) {
  if (k < 2 || k > d) throw Error(ErrorCode::kInvalidArgument, "delta needs 2 <= k <= d");
  if (l < detail::p2(d + 1)) throw Error(ErrorCode::kInvalidArgument, "delta needs l >= 2^(d+1)");
  const auto g = families::tree_star(d, l);
  const auto n = static_cast<std::int64_t>(g.net.size());
  const int up = (k + 1) / 2;
  const int down = k / 2;
  std::int64_t pow3 = 1;
  for (int i = 0; i < up + 1; ++i) pow3 *= 3;
  DeltaResult r;
  r.general_form = (k - 1) * (std::int64_t{l} + detail::p2(d + 1)) - 2 * k * (detail::p2(up) - 1) +
                   down * detail::p2(up + 2) - detail::p2(k + 2) + pow3 - 2;
  if (k == 2) r.special_form = n - 3;
  if (k == 3) r.special_form = 2 * (n - 7);
  r.oracle = max_purchase_gain(g.net, k);
  return r;
}

// Diameter bound for k-local Nash equilibria: alpha/(k-1) + 3k/2 + 1 when
// k^2 < 4 alpha, otherwise 2 sqrt(alpha).
struct DiamBound {
  enum class Kind { kLinear, kSqrt };

  Kind kind = Kind::kLinear;
  Rational alpha{1};
  Rational linear{0};  // the bound, for kLinear

  // diam <= bound, decided exactly.
  bool admits(std::int64_t diam) const {
    if (kind == Kind::kLinear) return Rational(diam) <= linear;
    return Rational(diam * diam) <= 4 * alpha;
  }

  // The bound as an exact rational when it is one (always for kLinear; for
  // kSqrt only if alpha is a rational square).
  std::optional<Rational> exact() const {
    if (kind == Kind::kLinear) return linear;
    auto root = [](std::int64_t x) -> std::optional<std::int64_t> {
      auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(x))));
      for (std::int64_t c = std::max<std::int64_t>(0, r - 1); c <= r + 1; ++c) {
        if (c * c == x) return c;
      }
      return std::nullopt;
    };
    auto num = root(alpha.numerator());
    auto den = root(alpha.denominator());
    if (!num || !den) return std::nullopt;
    return Rational(2 * *num, *den);
  }

  double approx() const {
    return kind == Kind::kLinear ? to_double(linear) : 2 * std::sqrt(to_double(alpha));
  }
};

inline DiamBound diam_bound(const Rational& alpha, int k) {
  if (k < 2 || alpha <= 0) throw Error(ErrorCode::kInvalidArgument, "diam_bound needs k >= 2 and alpha > 0");
  DiamBound b;
  b.alpha = alpha;
  if (Rational(k * k) < 4 * alpha) {
    b.kind = DiamBound::Kind::kLinear;
    b.linear = alpha / (k - 1) + Rational(3 * k, 2) + 1;
  } else {
    b.kind = DiamBound::Kind::kSqrt;
  }
  return b;
}

// n^(1 - eps (log2(k-3) - 1)), for reporting only. `constant` marks the
// regime eps >= 1/(log2(k-3) - 1), where the exponent is <= 0.
struct SublinearBound {
  double value = 0;
  double exponent = 0;
  bool constant = false;
};

inline SublinearBound sublinear_diameter_bound(double n, int k, double eps) {
  if (k < 6 || n < 4) throw Error(ErrorCode::kInvalidArgument, "bound needs k >= 6 and n >= 4");
  if (eps < 1 / std::log2(n) - 1e-12) throw Error(ErrorCode::kInvalidArgument, "bound needs eps >= 1/log2(n)");
  const double slope = std::log2(static_cast<double>(k - 3)) - 1;
  SublinearBound b;
  b.exponent = 1 - eps * slope;
  b.value = std::pow(n, b.exponent);
  b.constant = eps * slope >= 1 - 1e-12;
  return b;
}

// Which parameter range (if any) makes k-local and global Nash equilibria
// coincide. Ranges are checked in order; case 0 means none applies.
struct RegimeTag {
  int range = 0;
  std::string label;
  std::optional<double> eps;  // the eps used for range 3
};

inline RegimeTag regime_classifier(std::int64_t n, const Rational& alpha, int k) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "regime_classifier needs n >= 2");
  const double log_n = std::log2(static_cast<double>(n));
  const double a = to_double(alpha);
  if (alpha > 0 && alpha < 1 && k >= 2) return {1, "kNE=NE, PoA=O(1)", std::nullopt};
  // alpha <= sqrt(n/2)  <=>  2 alpha^2 <= n
  if (alpha >= 1 && 2 * alpha * alpha <= Rational(n) && k >= 6) return {2, "kNE=NE, PoA=O(1)", std::nullopt};
  if (alpha >= 1 && n >= 2) {
    const double eps = 1 - std::log2(a) / log_n;
    if (eps >= 1 / log_n - 1e-12 && eps > 0) {
      const double need = 4.667 * std::pow(3.0, std::ceil(1 / eps - 1e-12)) + 8;
      if (k >= need) return {3, "kNE=NE, PoA=O(3^ceil(1/eps))", eps};
    }
  }
  const double big = 12 * static_cast<double>(n) * log_n;
  if (alpha >= 1 && a <= big && k >= 2 * std::pow(5.0, 1 + std::sqrt(log_n)) + 24 * log_n + 3) {
    return {4, "kNE=NE, PoA=O(5^sqrt(log n) log n)", std::nullopt};
  }
  if (a >= big && k >= 2) return {5, "kNE=NE, PoA=O(1)", std::nullopt};
  return {0, "no range applies", std::nullopt};
}

}  // namespace ncg::formulas
