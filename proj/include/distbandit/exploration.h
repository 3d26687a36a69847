// Copyright 2026 The distbandit Authors.
//
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

#ifndef DISTBANDIT_EXPLORATION_H_
#define DISTBANDIT_EXPLORATION_H_

#include <string>
#include <string_view>

namespace distbandit {

// Exploration function F(n) evaluated at the number n of samples a player
// knows about (all arms together).
//
//   Standard:    ln n + 3 ln ln n
//   Approximate: ln(2n)
//   Dklucb:      M (ln n + 3 ln ln n) / (1 + (M - 1) alpha)
//
// Every variant is clamped below at 0, which also covers n <= e where
// ln ln n is undefined or very negative.
struct ExplorationFunction {
  enum class Kind { kStandard, kApproximate, kDklucb };

  Kind kind = Kind::kStandard;
  int players = 1;     // Dklucb only.
  double alpha = 1.0;  // Dklucb only.

  static ExplorationFunction Standard() { return {Kind::kStandard}; }
  static ExplorationFunction Approximate() { return {Kind::kApproximate}; }
  // Requires players >= 1 and alpha in [0, 1].
  static ExplorationFunction Dklucb(int players, double alpha);

  friend bool operator==(const ExplorationFunction&,
                         const ExplorationFunction&) = default;
};

// M / (1 + (M - 1) alpha). Exactly 1.0 when M == 1 or alpha == 1.
double DklucbScale(int players, double alpha);

// F(n) for the given variant. `n` is real so the formulas can be checked at
// non-integer points; the simulator only passes integers. Requires n >= 1.
double ExplorationValue(const ExplorationFunction& f, double n);

// Config names: "standard" and "ln2t".
ExplorationFunction ParseExploration(std::string_view text);
std::string ToString(const ExplorationFunction& f);

}  // namespace distbandit

#endif  // DISTBANDIT_EXPLORATION_H_
