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

#ifndef DISTBANDIT_POLICY_H_
#define DISTBANDIT_POLICY_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "distbandit/arm_model.h"
#include "distbandit/exploration.h"

namespace distbandit {

// What one player knows, as per-arm sufficient statistics.
//
// known_count/known_sum cover every reward the player has seen, its own and
// those received at communication rounds. snapshot_count is the global
// per-arm count at the last communication round (0 before the first one).
// Invariants: known_sum <= known_count, snapshot_count <= known_count,
// total_known == sum of known_count.
struct PlayerView {
  std::vector<std::int64_t> known_count;
  std::vector<std::int64_t> known_sum;
  std::vector<std::int64_t> snapshot_count;
  std::int64_t total_known = 0;

  PlayerView() = default;
  explicit PlayerView(int num_arms)
      : known_count(num_arms, 0),
        known_sum(num_arms, 0),
        snapshot_count(num_arms, 0) {}

  int num_arms() const { return static_cast<int>(known_count.size()); }
  double empirical_mean(ArmId a) const {
    return static_cast<double>(known_sum[a]) /
           static_cast<double>(known_count[a]);
  }
  void Record(ArmId a, int reward) {
    ++known_count[a];
    known_sum[a] += reward;
    ++total_known;
  }

  friend bool operator==(const PlayerView&, const PlayerView&) = default;
};

struct PolicySpec {
  enum class Rule { kUcb, kKlUcb, kDklucb };

  Rule rule = Rule::kKlUcb;
  // Standard or Approximate. DKLUCB scales it by M / (1 + (M - 1) alpha).
  // Standard is evaluated at the number of samples the player knows;
  // Approximate, ln(2t), at the index t of the round being played.
  ExplorationFunction exploration = ExplorationFunction::Standard();
  // Communication-set density assumed by DKLUCB; ignored by the others.
  double alpha = 1.0;

  friend bool operator==(const PolicySpec&, const PolicySpec&) = default;
};

// Throws ConfigError if alpha is outside [0, 1] for DKLUCB.
void Validate(const PolicySpec& spec);

// mean + sqrt(f_value / (2 N)). Requires known_count(a) >= 1.
double UcbIndex(const PlayerView& view, ArmId a, double f_value);

// sup{q in (0, 1) : K'(mean, q) <= budget}, by bisection on [mean, 1] to an
// absolute width of 1e-9 (at most 64 halvings). Returns `mean` for a zero
// budget and 1 when mean == 1.
double KlUcbBound(double mean, double budget);

// Lower counterpart: the smallest q in [0, mean] with KL(mean, q) <= budget,
// found with the same bisection.
// Returns `mean` for a zero budget and 0 when mean == 0.
double KlLcbBound(double mean, double budget);

// KlUcbBound(empirical mean of a, f_value / denom). `denom` is known_count(a)
// for KL-UCB and the count prediction for DKLUCB. Requires denom > 0.
double KlUcbIndex(const PlayerView& view, ArmId a, double f_value,
                  double denom);

// DKLUCB's estimate of the global pull count of arm a:
//   N + (M - 1) min(N - N_snap, u),  u = N_snap / M * (1 / alpha - 1),
// where u is +infinity when alpha == 0. May be fractional.
double CountPrediction(const PlayerView& view, ArmId a, int players,
                       double alpha);

// Exploration value the policy uses in round `round` for a player who knows
// `known_samples` samples in total.
double PolicyExplorationValue(const PolicySpec& spec, int players,
                              std::int64_t known_samples, std::int64_t round);

// Index-maximizing arm for the player's choice in round `round` (>= 1).
// Arms with no samples win first, lowest index first; otherwise ties go to
// the lowest index. Throws ConfigError for K == 0.
ArmId SelectArm(const PlayerView& view, const PolicySpec& spec, int players,
                std::int64_t round);

// "ucb" | "klucb" | "dklucb".
PolicySpec::Rule ParseRule(std::string_view text);
std::string ToString(PolicySpec::Rule rule);

}  // namespace distbandit

#endif  // DISTBANDIT_POLICY_H_
