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

#include "distbandit/exploration.h"

#include <algorithm>
#include <cmath>

#include "distbandit/errors.h"

namespace distbandit {
namespace {

double StandardValue(double n) {
  const double log_n = std::log(n);
  if (log_n <= 0.0) return 0.0;
  return std::max(0.0, log_n + 3.0 * std::log(log_n));
}

}  // namespace

ExplorationFunction ExplorationFunction::Dklucb(int players, double alpha) {
  if (players < 1) throw PreconditionError("players must be >= 1");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha must lie in [0, 1]");
  }
  return {Kind::kDklucb, players, alpha};
}

double DklucbScale(int players, double alpha) {
  const double m = players;
  return m / (1.0 + (m - 1.0) * alpha);
}

double ExplorationValue(const ExplorationFunction& f, double n) {
  if (!(n >= 1.0)) throw PreconditionError("exploration argument must be >= 1");
  switch (f.kind) {
    case ExplorationFunction::Kind::kStandard:
      return StandardValue(n);
    case ExplorationFunction::Kind::kApproximate:
      return std::log(2.0 * n);
    case ExplorationFunction::Kind::kDklucb:
      return DklucbScale(f.players, f.alpha) * StandardValue(n);
  }
  return 0.0;
}

ExplorationFunction ParseExploration(std::string_view text) {
  if (text == "standard") return ExplorationFunction::Standard();
  if (text == "ln2t") return ExplorationFunction::Approximate();
  throw ConfigError("unknown exploration '" + std::string(text) +
                    "' (expected standard | ln2t)");
}

std::string ToString(const ExplorationFunction& f) {
  switch (f.kind) {
    case ExplorationFunction::Kind::kStandard:
      return "standard";
    case ExplorationFunction::Kind::kApproximate:
      return "ln2t";
    case ExplorationFunction::Kind::kDklucb:
      return "dklucb(M=" + std::to_string(f.players) +
             ", alpha=" + std::to_string(f.alpha) + ")";
  }
  return "?";
}

}  // namespace distbandit
