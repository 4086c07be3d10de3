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

#include <string>
#include <string_view>

#include "ncg/error.hpp"
#include "ncg/rational.hpp"

namespace ncg {

enum class Mode { kSum, kMax };

inline std::string_view to_string(Mode m) { return m == Mode::kSum ? "sum" : "max"; }

inline Mode parse_mode(std::string_view text) {
  if (text == "sum" || text == "SUM") return Mode::kSum;
  if (text == "max" || text == "MAX") return Mode::kMax;
  throw Error(ErrorCode::kParseError, "unknown mode '" + std::string(text) + "'");
}

// Edge price, locality radius and distance aggregation.
struct GameConfig {
  Rational alpha{1};
  int k = 1;
  Mode mode = Mode::kSum;

  void validate() const {
    if (alpha <= 0) throw Error(ErrorCode::kInvalidArgument, "alpha must be positive, got " + format_rational(alpha));
    if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1, got " + std::to_string(k));
  }
};

inline GameConfig make_config(Rational alpha, int k, Mode mode = Mode::kSum) {
  GameConfig cfg{alpha, k, mode};
  cfg.validate();
  return cfg;
}

}  // namespace ncg
