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

// Configuration-driven experiments: several communication strategies run on
// one arm model, each written out as CSV.
//
// Config format: `key = value` lines, `#` comments, and optional
// `[strategy <name>]` sections. Top-level keys:
//
//   preset        figure1 (start from the preset; later keys override it)
//   means         comma-separated arm means in [0, 1]
//   players       M >= 1                      (default 1)
//   horizon       T >= 1
//   policy        ucb | klucb | dklucb        (default klucb)
//   exploration   standard | ln2t             (default standard)
//   alpha         density for dklucb          (default: density of schedule)
//   schedule      schedule grammar; defines a strategy named "default"
//   seed          unsigned 64-bit integer     (default 1)
//   replications  >= 1                        (default 1000)
//   checkpoints   comma-separated rounds      (default: powers of two)
//   out           output directory            (default results)
//   bounds        true | false                (default false)
//   threads       worker count, 0 = auto      (default 0)
//
// Strategy sections accept `schedule` (required) and may override
// `policy`, `exploration` and `alpha`.

#ifndef DISTBANDIT_EXPERIMENT_H_
#define DISTBANDIT_EXPERIMENT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "distbandit/policy.h"
#include "distbandit/schedule.h"
#include "distbandit/simulation.h"

namespace distbandit {

struct Strategy {
  std::string name;
  CommunicationSchedule schedule = CommunicationSchedule::None();
  PolicySpec policy;
};

struct ExperimentConfig {
  std::vector<double> means;
  int players = 1;
  Round horizon = 1;
  std::uint64_t seed = 1;
  int replications = 1000;
  std::vector<Round> checkpoints;  // empty: powers of two up to horizon
  std::vector<Strategy> strategies;
  std::filesystem::path out_dir = "results";
  bool bounds = false;
  int threads = 0;

  RunConfig ToRunConfig(const Strategy& strategy) const;
};

// Parses and validates a config document. Collects every problem before
// throwing ConfigError.
ExperimentConfig ParseConfig(std::string_view text);

// Two players, arms (0.9, 0.8), 2^16 rounds, UCB with ln(2t) exploration,
// checkpoints 2^4..2^16 and five strategies: no communication, full
// communication, A = {4096}, B = {16, 256, 4096}, C = {1, ..., 4096}.
ExperimentConfig Figure1Preset();

// Looks up a preset by name ("figure1"); throws ConfigError otherwise.
ExperimentConfig PresetByName(std::string_view name);

struct StrategyResult {
  std::string name;
  RunConfig run;
  RunAggregate aggregate;
};

struct ExperimentResult {
  std::vector<StrategyResult> strategies;
  std::vector<std::filesystem::path> files;
};

// Runs every strategy and writes, under cfg.out_dir:
//   <name>.csv           t,arm,mean_pulls,stderr,regret
//   combined.csv         strategy,t,arm,mean_pulls,stderr,regret
//   <name>_bounds.csv    t,arm,empirical_mean,leading_term,ratio (bounds only)
// Files are written to a temporary name and renamed into place. A summary,
// and the comparison tables when cfg.bounds is set, go to `log`.
// Throws IoError on filesystem failures.
ExperimentResult RunExperiment(const ExperimentConfig& cfg, std::ostream& log);

// Per-strategy CSV body (header included).
std::string FormatStrategyCsv(const RunAggregate& aggregate);

// "n/a (finite set)" for one-shot and explicit schedules, else the density.
std::string DescribeDensity(const CommunicationSchedule& schedule);

}  // namespace distbandit

#endif  // DISTBANDIT_EXPERIMENT_H_
