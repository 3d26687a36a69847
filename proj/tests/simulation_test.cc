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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "distbandit/errors.h"
#include "distbandit/rng.h"
#include "distbandit/simulation.h"

namespace distbandit {
namespace {

using Counts = std::vector<std::int64_t>;

RunConfig Config(std::vector<double> means, int players, Round horizon,
                 CommunicationSchedule schedule,
                 PolicySpec::Rule rule = PolicySpec::Rule::kKlUcb) {
  RunConfig cfg;
  cfg.arms = BernoulliArmModel(std::move(means));
  cfg.players = players;
  cfg.horizon = horizon;
  cfg.schedule = std::move(schedule);
  cfg.policy.rule = rule;
  cfg.seed = 99;
  return cfg;
}

TEST_CASE("checkpoints") {
  CHECK(DefaultCheckpoints(1) == std::vector<Round>{1});
  CHECK(DefaultCheckpoints(20) == std::vector<Round>{1, 2, 4, 8, 16});
  auto cfg = Config({0.5}, 1, 10, CommunicationSchedule::None());
  CHECK(EffectiveCheckpoints(cfg) == std::vector<Round>{1, 2, 4, 8});
  cfg.checkpoints = {3, 10};
  CHECK(EffectiveCheckpoints(cfg) == std::vector<Round>{3, 10});
}

TEST_CASE("Validate collects every problem") {
  auto cfg = Config({0.5}, 0, 0, CommunicationSchedule::None(),
                    PolicySpec::Rule::kDklucb);
  cfg.replications = 0;
  cfg.policy.alpha = 2.0;
  try {
    Validate(cfg);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.errors().size() == 4);
  }
  cfg = Config({0.5}, 1, 10, CommunicationSchedule::None());
  cfg.checkpoints = {5, 5, 11};
  CHECK_THROWS_AS(Validate(cfg), ConfigError);
}

TEST_CASE("step and merge on degenerate arms") {
  // Arm 0 always pays 1, arm 1 never does, so every reward is known.
  const auto cfg = Config({1.0, 0.0}, 2, 4, CommunicationSchedule::OneShot(2));
  WorldState state(cfg, 0);

  Step(state, cfg);  // both players try arm 0
  CHECK(state.round == 1);
  CHECK(state.selections == std::vector<ArmId>{0, 0});
  CHECK(state.global_count == Counts{2, 0});
  CHECK(state.global_sum == Counts{2, 0});
  for (const auto& view : state.views) {
    CHECK(view.known_count == Counts{1, 0});
    CHECK(view.known_sum == Counts{1, 0});
    CHECK(view.snapshot_count == Counts{0, 0});
    CHECK(view.total_known == 1);
  }

  Step(state, cfg);  // both try arm 1, then round 2 communicates
  CHECK(state.selections == std::vector<ArmId>{1, 1});
  CHECK(state.global_count == Counts{2, 2});
  for (const auto& view : state.views) {
    CHECK(view.known_count == Counts{2, 2});
    CHECK(view.known_sum == Counts{2, 0});
    CHECK(view.snapshot_count == Counts{2, 2});
    CHECK(view.total_known == 4);
  }

  Step(state, cfg);  // arm 0 has the higher index now
  CHECK(state.selections == std::vector<ArmId>{0, 0});
  CHECK(state.views[0].known_count == Counts{3, 2});
  CHECK(state.views[0].snapshot_count == Counts{2, 2});
  Step(state, cfg);
  CHECK_THROWS_AS(Step(state, cfg), PreconditionError);
}

TEST_CASE("MergeViews is idempotent and leaves totals alone") {
  const auto cfg = Config({0.3, 0.6, 0.5}, 3, 50, CommunicationSchedule::None());
  WorldState state(cfg, 4);
  for (int i = 0; i < 50; ++i) Step(state, cfg);
  const Counts count = state.global_count;
  const Counts sum = state.global_sum;
  MergeViews(state);
  const auto once = state.views;
  MergeViews(state);
  CHECK(state.views == once);
  CHECK(state.global_count == count);
  CHECK(state.global_sum == sum);
  for (const auto& view : state.views) CHECK(view == once.front());
}

TEST_CASE("conservation over randomized configurations") {
  std::mt19937_64 gen(41);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const CommunicationSchedule schedules[] = {
      CommunicationSchedule::None(), CommunicationSchedule::Full(),
      CommunicationSchedule::OneShot(7), CommunicationSchedule::LinearGrid(5),
      CommunicationSchedule::ExponentialGrid(2),
      CommunicationSchedule::DoubleExponentialGrid(2, 1)};
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 1 + static_cast<int>(gen() % 4);
    std::vector<double> means(k);
    for (double& m : means) m = unit(gen);
    const int players = 1 + static_cast<int>(gen() % 4);
    const auto rule = static_cast<PolicySpec::Rule>(gen() % 3);
    auto cfg = Config(means, players, 200, schedules[gen() % 6], rule);
    cfg.policy.alpha = 0.5;
    cfg.seed = gen();
    std::int64_t violations = 0;
    RunOnce(cfg, trial, [&](const WorldState& s) {
      const std::int64_t total =
          std::accumulate(s.global_count.begin(), s.global_count.end(),
                          std::int64_t{0});
      violations += total != players * s.round;
      for (int a = 0; a < k; ++a) {
        violations += s.global_sum[a] > s.global_count[a];
      }
      for (const auto& view : s.views) {
        for (int a = 0; a < k; ++a) {
          violations += view.known_count[a] > s.global_count[a];
          violations += view.snapshot_count[a] > view.known_count[a];
          violations += view.known_sum[a] > view.known_count[a];
        }
        violations += view.total_known !=
                      std::accumulate(view.known_count.begin(),
                                      view.known_count.end(), std::int64_t{0});
      }
      if (cfg.schedule.IsCommRound(s.round)) {
        for (const auto& view : s.views) {
          violations += view.known_count != s.global_count;
          violations += view.known_sum != s.global_sum;
          violations += view.snapshot_count != s.global_count;
        }
      }
    });
    CHECK(violations == 0);
  }
}

TEST_CASE("a single arm gets every pull") {
  const auto cfg = Config({0.4}, 3, 100, CommunicationSchedule::Full());
  const auto table = RunOnce(cfg, 0);
  for (std::size_t i = 0; i < table.checkpoints.size(); ++i) {
    CHECK(table.count(i, 0) == 3 * table.checkpoints[i]);
  }
}

TEST_CASE("RunOnce is a pure function of (config, replication)") {
  auto cfg = Config({0.9, 0.8, 0.7}, 2, 500,
                    CommunicationSchedule::ExponentialGrid(2));
  const auto a = RunOnce(cfg, 3);
  CHECK(a == RunOnce(cfg, 3));
  CHECK(a.counts != RunOnce(cfg, 4).counts);
  cfg.seed = 100;
  CHECK(a.counts != RunOnce(cfg, 3).counts);
}

TEST_CASE("RunOnce and Step agree") {
  const auto cfg = Config({0.6, 0.5}, 2, 300, CommunicationSchedule::LinearGrid(7));
  WorldState state(cfg, 2);
  std::vector<Counts> stepped;
  for (Round t = 1; t <= cfg.horizon; ++t) {
    Step(state, cfg);
    stepped.push_back(state.global_count);
  }
  std::vector<Counts> observed;
  RunOnce(cfg, 2, [&](const WorldState& s) {
    observed.push_back(s.global_count);
  });
  CHECK(stepped == observed);
}

TEST_CASE("reward draws are unbiased") {
  // Bernoulli(p) frequencies over 200000 draws, within 3 standard errors.
  for (double p : {0.05, 0.5, 0.8, 0.9}) {
    auto stream = MakeRewardStream(1, 0, 0, 0);
    constexpr int kDraws = 200000;
    int hits = 0;
    for (int i = 0; i < kDraws; ++i) hits += DrawBernoulli(stream, p);
    const double se = std::sqrt(p * (1 - p) / kDraws);
    CHECK(std::abs(static_cast<double>(hits) / kDraws - p) < 3 * se);
  }
  auto stream = MakeRewardStream(7, 1, 2, 3);
  for (int i = 0; i < 1000; ++i) {
    CHECK(DrawBernoulli(stream, 0.0) == 0);
    CHECK(DrawBernoulli(stream, 1.0) == 1);
  }
}

TEST_CASE("stream seeds differ across every coordinate") {
  const auto base = DeriveStreamSeed(1, 0, 0, 0);
  CHECK(base != DeriveStreamSeed(2, 0, 0, 0));
  CHECK(base != DeriveStreamSeed(1, 1, 0, 0));
  CHECK(base != DeriveStreamSeed(1, 0, 1, 0));
  CHECK(base != DeriveStreamSeed(1, 0, 0, 1));
  CHECK(DeriveStreamSeed(1, 1, 0, 0) != DeriveStreamSeed(1, 0, 1, 0));
}

TEST_CASE("MomentAccumulator arithmetic") {
  const BernoulliArmModel arms({0.9, 0.8});
  MomentAccumulator acc({10}, 2);
  acc.Add(CheckpointTable{{10}, 2, {9, 1}});
  acc.Add(CheckpointTable{{10}, 2, {7, 3}});
  const auto agg = acc.Finish(arms);
  CHECK(agg.replications == 2);
  CHECK(agg.mean_pulls(0, 0) == 8.0);
  CHECK(agg.mean_pulls(0, 1) == 2.0);
  // Sample variance 2 (n - 1 denominator), standard error sqrt(2 / 2).
  CHECK(agg.standard_error(0, 1) == doctest::Approx(1.0));
  CHECK(Regret(agg, arms, 10) == doctest::Approx(0.2));
  CHECK_THROWS_AS(agg.checkpoint_index(11), LookupError);
  CHECK_THROWS_AS(Regret(agg, arms, 11), LookupError);

  MomentAccumulator single({10}, 2);
  single.Add(CheckpointTable{{10}, 2, {9, 1}});
  CHECK(single.Finish(arms).standard_error(0, 0) == 0.0);
}

TEST_CASE("moment merging is order independent") {
  std::mt19937_64 gen(8);
  std::vector<CheckpointTable> tables;
  for (int i = 0; i < 50; ++i) {
    const auto a = static_cast<std::int64_t>(gen() % 1000);
    tables.push_back(CheckpointTable{{1, 2}, 2, {a, 1000 - a, a / 2, 7}});
  }
  const BernoulliArmModel arms({0.9, 0.8});
  MomentAccumulator serial({1, 2}, 2);
  for (const auto& t : tables) serial.Add(t);
  MomentAccumulator left({1, 2}, 2), right({1, 2}, 2);
  for (std::size_t i = 0; i < tables.size(); ++i) {
    (i % 3 == 0 ? left : right).Add(tables[tables.size() - 1 - i]);
  }
  right.Merge(left);
  const auto x = serial.Finish(arms);
  const auto y = right.Finish(arms);
  CHECK(x.mean == y.mean);
  CHECK(x.std_error == y.std_error);
  CHECK(x.regret == y.regret);
}

TEST_CASE("Monte Carlo results do not depend on the thread count") {
  auto cfg = Config({0.9, 0.8}, 2, 256, CommunicationSchedule::ExponentialGrid(2),
                    PolicySpec::Rule::kUcb);
  cfg.replications = 40;
  const auto one = RunMonteCarlo(cfg, 1);
  for (int threads : {2, 3, 8}) {
    const auto many = RunMonteCarlo(cfg, threads);
    CHECK(one.mean == many.mean);
    CHECK(one.std_error == many.std_error);
    CHECK(one.regret == many.regret);
  }
  CHECK(one.replications == 40);
  // Mean over replications equals the mean of the individual runs.
  double total = 0.0;
  for (int r = 0; r < 40; ++r) {
    const auto table = RunOnce(cfg, r);
    total += static_cast<double>(table.count(table.checkpoints.size() - 1, 1));
  }
  CHECK(one.mean_pulls(one.checkpoints.size() - 1, 1) ==
        doctest::Approx(total / 40).epsilon(1e-15));
}

}  // namespace
}  // namespace distbandit
