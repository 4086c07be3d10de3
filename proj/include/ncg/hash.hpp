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
#include <cstdio>
#include <string>

#include "ncg/network.hpp"

namespace ncg {

// 128-bit FNV-1a digest.
struct Digest {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  friend auto operator<=>(const Digest&, const Digest&) = default;

  std::string hex() const {
    char buf[33];
    std::snprintf(buf, sizeof(buf), "%016llx%016llx", static_cast<unsigned long long>(hi),
                  static_cast<unsigned long long>(lo));
    return buf;
  }
};

struct DigestHash {
  std::size_t operator()(const Digest& d) const noexcept { return static_cast<std::size_t>(d.lo ^ (d.hi * 0x9e3779b97f4a7c15ULL)); }
};

namespace detail {

class Fnv128 {
 public:
  void byte(std::uint8_t b) {
    state_ ^= b;
    state_ *= kPrime;
  }

  // Little-endian, independent of host byte order.
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) byte(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) byte(static_cast<std::uint8_t>(v >> (8 * i)));
  }

  Digest digest() const { return {static_cast<std::uint64_t>(state_ >> 64), static_cast<std::uint64_t>(state_)}; }

 private:
  static constexpr unsigned __int128 kPrime = (static_cast<unsigned __int128>(1) << 88) + 0x13b;
  unsigned __int128 state_ = (static_cast<unsigned __int128>(0x6c62272e07bb0142ULL) << 64) | 0x62b821756295c58dULL;
};

}  // namespace detail

// Digest of n followed by the (owner, other) edge list in sorted order.
inline Digest canonical_hash(const Network& net) {
  detail::Fnv128 h;
  h.u64(net.size());
  for (AgentId u = 0; u < net.size(); ++u) {
    for (AgentId v : net.strategy(u)) {
      h.u32(u);
      h.u32(v);
    }
  }
  return h.digest();
}

}  // namespace ncg
