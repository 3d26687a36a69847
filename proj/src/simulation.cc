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

#include "distbandit/simulation.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "distbandit/errors.h"

namespace distbandit {
namespace {

void AdvanceRound(WorldState& state, const RunConfig& cfg, bool communicate) {
  const int players = cfg.players;
  for (int p = 0; p < players; ++p) {
    state.selections[p] =
        SelectArm(state.views[p], cfg.policy, players, state.round + 1);
  }
  for (int p = 0; p < players; ++p) {
    const ArmId a = state.selections[p];
    const int reward = DrawBernoulli(state.stream(p, a), cfg.arms.mean(a));
    state.views[p].Record(a, reward);
    ++state.global_count[a];
    state.global_sum[a] += reward;
  }
  ++state.round;
  if (communicate) MergeViews(state);
}

}  // namespace

std::vector<Round> DefaultCheckpoints(Round horizon) {
  std::vector<Round> out;
  for (Round t = 1; t <= horizon; t *= 2) out.push_back(t);
  return out;
}

std::vector<Round> EffectiveCheckpoints(const RunConfig& cfg) {
  return cfg.checkpoints.empty() ? DefaultCheckpoints(cfg.horizon)
                                 : cfg.checkpoints;
}

void Validate(const RunConfig& cfg) {
  std::vector<std::string> errors;
  if (cfg.players < 1) errors.push_back("players must be >= 1");
  if (cfg.horizon < 1) errors.push_back("horizon must be >= 1");
  if (cfg.replications < 1) errors.push_back("replications must be >= 1");
  for (std::size_t i = 0; i < cfg.checkpoints.size(); ++i) {
    const Round t = cfg.checkpoints[i];
    if (t < 1 || t > cfg.horizon) {
      errors.push_back("checkpoint " + std::to_string(t) +
                       " is outside [1, horizon]");
    }
    if (i > 0 && t <= cfg.checkpoints[i - 1]) {
      errors.push_back("checkpoints must be strictly increasing");
    }
  }
  try {
    Validate(cfg.policy);
  } catch (const ConfigError& e) {
    errors.insert(errors.end(), e.errors().begin(), e.errors().end());
  }
  if (!errors.empty()) throw ConfigError(std::move(errors));
}

WorldState::WorldState(const RunConfig& cfg, std::uint64_t replication)
    : views(cfg.players, PlayerView(cfg.arms.num_arms())),
      global_count(cfg.arms.num_arms(), 0),
      global_sum(cfg.arms.num_arms(), 0),
      selections(cfg.players, 0) {
  const int k = cfg.arms.num_arms();
  streams.reserve(static_cast<std::size_t>(cfg.players) * k);
  for (int p = 0; p < cfg.players; ++p) {
    for (ArmId a = 0; a < k; ++a) {
      streams.push_back(MakeRewardStream(cfg.seed, replication, p, a));
    }
  }
}

void Step(WorldState& state, const RunConfig& cfg) {
  if (state.round >= cfg.horizon) {
    throw PreconditionError("step past the horizon");
  }
  AdvanceRound(state, cfg, cfg.schedule.IsCommRound(state.round + 1));
}

void MergeViews(WorldState& state) {
  std::int64_t total = 0;
  for (std::int64_t c : state.global_count) total += c;
  for (PlayerView& view : state.views) {
    view.known_count = state.global_count;
    view.known_sum = state.global_sum;
    view.snapshot_count = state.global_count;
    view.total_known = total;
  }
}

CheckpointTable RunOnce(const RunConfig& cfg, std::uint64_t replication,
                        const RoundObserver& observer) {
  Validate(cfg);
  const int k = cfg.arms.num_arms();
  CheckpointTable table;
  table.checkpoints = EffectiveCheckpoints(cfg);
  table.num_arms = k;
  table.counts.reserve(table.checkpoints.size() * k);

  std::vector<char> communicates(cfg.horizon + 1, 0);
  for (Round c : cfg.schedule.ElementsUpTo(cfg.horizon)) communicates[c] = 1;

  WorldState state(cfg, replication);
  std::size_t next_checkpoint = 0;
  for (Round t = 1; t <= cfg.horizon; ++t) {
    AdvanceRound(state, cfg, communicates[t] != 0);
    if (observer) observer(state);
    if (next_checkpoint < table.checkpoints.size() &&
        table.checkpoints[next_checkpoint] == t) {
      table.counts.insert(table.counts.end(), state.global_count.begin(),
                          state.global_count.end());
      ++next_checkpoint;
    }
  }
  return table;
}

std::size_t RunAggregate::checkpoint_index(Round t) const {
  const auto it = std::lower_bound(checkpoints.begin(), checkpoints.end(), t);
  if (it == checkpoints.end() || *it != t) {
    throw LookupError("round " + std::to_string(t) + " is not a checkpoint");
  }
  return static_cast<std::size_t>(it - checkpoints.begin());
}

MomentAccumulator::MomentAccumulator(std::vector<Round> checkpoints,
                                     int num_arms)
    : checkpoints_(std::move(checkpoints)),
      num_arms_(num_arms),
      sum_(checkpoints_.size() * num_arms, 0),
      sum_sq_(checkpoints_.size() * num_arms, 0) {}

void MomentAccumulator::Add(const CheckpointTable& table) {
  if (table.checkpoints != checkpoints_ || table.num_arms != num_arms_) {
    throw ShapeError("checkpoint table does not match the accumulator");
  }
  for (std::size_t i = 0; i < sum_.size(); ++i) {
    const std::int64_t c = table.counts[i];
    sum_[i] += c;
    sum_sq_[i] += static_cast<__int128>(c) * c;
  }
  ++n_;
}

void MomentAccumulator::Merge(const MomentAccumulator& other) {
  if (other.checkpoints_ != checkpoints_ || other.num_arms_ != num_arms_) {
    throw ShapeError("cannot merge accumulators of different shapes");
  }
  for (std::size_t i = 0; i < sum_.size(); ++i) {
    sum_[i] += other.sum_[i];
    sum_sq_[i] += other.sum_sq_[i];
  }
  n_ += other.n_;
}

RunAggregate MomentAccumulator::Finish(const BernoulliArmModel& arms) const {
  RunAggregate out;
  out.checkpoints = checkpoints_;
  out.num_arms = num_arms_;
  out.replications = n_;
  out.mean.resize(sum_.size(), 0.0);
  out.std_error.resize(sum_.size(), 0.0);
  const auto n = static_cast<double>(n_);
  for (std::size_t i = 0; i < sum_.size() && n_ > 0; ++i) {
    out.mean[i] = static_cast<double>(sum_[i]) / n;
    if (n_ > 1) {
      // n * sum(x^2) - (sum x)^2 is exact in 128-bit integers.
      const __int128 scaled = static_cast<__int128>(n_) * sum_sq_[i] -
                              static_cast<__int128>(sum_[i]) * sum_[i];
      const double variance = static_cast<double>(scaled) / (n * (n - 1.0));
      out.std_error[i] = std::sqrt(variance / n);
    }
  }
  out.regret.resize(checkpoints_.size(), 0.0);
  for (std::size_t ci = 0; ci < checkpoints_.size(); ++ci) {
    out.regret[ci] = Regret(out, arms, checkpoints_[ci]);
  }
  return out;
}

RunAggregate RunMonteCarlo(const RunConfig& cfg, int threads) {
  Validate(cfg);
  const auto checkpoints = EffectiveCheckpoints(cfg);
  const int k = cfg.arms.num_arms();
  if (threads <= 0) {
    threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  threads = std::min(threads, cfg.replications);

  std::vector<MomentAccumulator> partial(threads,
                                         MomentAccumulator(checkpoints, k));
  std::atomic<int> next{0};
  const auto work = [&](int w) {
    for (int r = next++; r < cfg.replications; r = next++) {
      partial[w].Add(RunOnce(cfg, static_cast<std::uint64_t>(r)));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  MomentAccumulator total(checkpoints, k);
  for (const auto& acc : partial) total.Merge(acc);
  return total.Finish(cfg.arms);
}

double Regret(const RunAggregate& aggregate, const BernoulliArmModel& arms,
              Round t) {
  const std::size_t ci = aggregate.checkpoint_index(t);
  double regret = 0.0;
  for (ArmId a = 0; a < aggregate.num_arms; ++a) {
    regret += arms.gap(a) * aggregate.mean_pulls(ci, a);
  }
  return regret;
}

}  // namespace distbandit
