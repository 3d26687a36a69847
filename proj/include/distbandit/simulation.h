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

#ifndef DISTBANDIT_SIMULATION_H_
#define DISTBANDIT_SIMULATION_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "distbandit/arm_model.h"
#include "distbandit/policy.h"
#include "distbandit/rng.h"
#include "distbandit/schedule.h"

namespace distbandit {

struct RunConfig {
  BernoulliArmModel arms{std::vector<double>{0.5}};
  int players = 1;
  Round horizon = 1;
  CommunicationSchedule schedule = CommunicationSchedule::None();
  PolicySpec policy;
  std::uint64_t seed = 0;
  // Rounds at which global counts are recorded. Empty means powers of two
  // up to the horizon.
  std::vector<Round> checkpoints;
  int replications = 1;
};

// 1, 2, 4, ... <= horizon.
std::vector<Round> DefaultCheckpoints(Round horizon);
// The configured checkpoints, or the default ones when none are set.
std::vector<Round> EffectiveCheckpoints(const RunConfig& cfg);
// Throws ConfigError listing every violated constraint.
void Validate(const RunConfig& cfg);

// Full process state of one replication.
struct WorldState {
  Round round = 0;  // rounds completed so far
  std::vector<PlayerView> views;
  std::vector<std::int64_t> global_count;  // N_t(a)
  std::vector<std::int64_t> global_sum;
  std::vector<RewardStream> streams;  // [player][arm], row-major
  std::vector<ArmId> selections;      // arms pulled in the latest round

  RewardStream& stream(int player, ArmId a) {
    return streams[static_cast<std::size_t>(player) * global_count.size() + a];
  }

  // Fresh state at round 0 with streams derived from (cfg.seed, replication).
  WorldState(const RunConfig& cfg, std::uint64_t replication);
};

// Advances one round. Every player selects from its view as of the end of
// the previous round, then all rewards are drawn, then views are merged if
// the new round is a communication round. Requires state.round < horizon.
void Step(WorldState& state, const RunConfig& cfg);

// Sets every view's (count, sum) to the global totals and refreshes the
// snapshot counts. Global totals are unchanged; idempotent.
void MergeViews(WorldState& state);

// Global per-arm counts at each checkpoint of one replication.
struct CheckpointTable {
  std::vector<Round> checkpoints;
  int num_arms = 0;
  std::vector<std::int64_t> counts;  // row-major [checkpoint][arm]

  std::int64_t count(std::size_t checkpoint_index, ArmId a) const {
    return counts[checkpoint_index * num_arms + a];
  }
  friend bool operator==(const CheckpointTable&,
                         const CheckpointTable&) = default;
};

// Called after every round with the post-round state.
using RoundObserver = std::function<void(const WorldState&)>;

// Runs rounds 1..horizon. A pure function of (cfg, replication).
CheckpointTable RunOnce(const RunConfig& cfg, std::uint64_t replication,
                        const RoundObserver& observer = {});

// Monte Carlo summary over replications.
struct RunAggregate {
  std::vector<Round> checkpoints;
  int num_arms = 0;
  std::int64_t replications = 0;
  std::vector<double> mean;     // [checkpoint][arm] mean of N_t(a)
  std::vector<double> std_error;  // [checkpoint][arm] standard error
  std::vector<double> regret;   // [checkpoint]

  double mean_pulls(std::size_t ci, ArmId a) const {
    return mean[ci * num_arms + a];
  }
  double standard_error(std::size_t ci, ArmId a) const {
    return std_error[ci * num_arms + a];
  }
  // Position of checkpoint t; throws LookupError if t was not recorded.
  std::size_t checkpoint_index(Round t) const;
};

// Exact first and second moments of integer counts. Combining is
// associative and commutative, so any partition of the replications yields
// the same result bit for bit.
class MomentAccumulator {
 public:
  MomentAccumulator(std::vector<Round> checkpoints, int num_arms);

  void Add(const CheckpointTable& table);
  void Merge(const MomentAccumulator& other);
  RunAggregate Finish(const BernoulliArmModel& arms) const;

 private:
  std::vector<Round> checkpoints_;
  int num_arms_;
  std::int64_t n_ = 0;
  std::vector<std::int64_t> sum_;
  std::vector<__int128> sum_sq_;
};

// Aggregates RunOnce over replications 0..cfg.replications-1, fanning out
// over `threads` workers (0 picks the hardware concurrency).
RunAggregate RunMonteCarlo(const RunConfig& cfg, int threads = 0);

// Sum over arms of gap * mean N_t(a). Throws LookupError for an unrecorded t.
double Regret(const RunAggregate& aggregate, const BernoulliArmModel& arms,
              Round t);

}  // namespace distbandit

#endif  // DISTBANDIT_SIMULATION_H_
