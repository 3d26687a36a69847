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

#include "distbandit/policy.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "distbandit/errors.h"
#include "distbandit/kl.h"

namespace distbandit {
namespace {

constexpr double kBisectionTolerance = 1e-9;
constexpr int kMaxBisectionSteps = 64;

}  // namespace

void Validate(const PolicySpec& spec) {
  if (spec.rule == PolicySpec::Rule::kDklucb &&
      !(spec.alpha >= 0.0 && spec.alpha <= 1.0)) {
    throw ConfigError("dklucb alpha must lie in [0, 1], got " +
                      std::to_string(spec.alpha));
  }
  if (spec.exploration.kind == ExplorationFunction::Kind::kDklucb) {
    throw ConfigError(
        "policy exploration must be standard or ln2t; dklucb scaling is "
        "applied by the rule");
  }
}

double UcbIndex(const PlayerView& view, ArmId a, double f_value) {
  return view.empirical_mean(a) +
         std::sqrt(f_value / (2.0 * static_cast<double>(view.known_count[a])));
}

double KlUcbBound(double mean, double budget) {
  if (mean >= 1.0) return 1.0;
  if (!(budget > 0.0)) return mean;
  double lo = mean;  // always feasible
  double hi = 1.0;   // infeasible for mean < 1
  for (int i = 0; i < kMaxBisectionSteps && hi - lo > kBisectionTolerance;
       ++i) {
    const double mid = 0.5 * (lo + hi);
    if (KlTruncated(mean, mid) <= budget) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double KlLcbBound(double mean, double budget) {
  if (mean <= 0.0) return 0.0;
  if (!(budget > 0.0)) return mean;
  double lo = 0.0;   // infeasible for mean > 0
  double hi = mean;  // always feasible
  for (int i = 0; i < kMaxBisectionSteps && hi - lo > kBisectionTolerance;
       ++i) {
    const double mid = 0.5 * (lo + hi);
    if (KlBernoulli(mean, mid) <= budget) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double KlUcbIndex(const PlayerView& view, ArmId a, double f_value,
                  double denom) {
  return KlUcbBound(view.empirical_mean(a), f_value / denom);
}

double CountPrediction(const PlayerView& view, ArmId a, int players,
                       double alpha) {
  const auto local = static_cast<double>(view.known_count[a]);
  const double increment =
      local - static_cast<double>(view.snapshot_count[a]);
  const double cap =
      alpha == 0.0 ? std::numeric_limits<double>::infinity()
                   : static_cast<double>(view.snapshot_count[a]) / players *
                         (1.0 / alpha - 1.0);
  return local + (players - 1) * std::min(increment, cap);
}

double PolicyExplorationValue(const PolicySpec& spec, int players,
                              std::int64_t known_samples, std::int64_t round) {
  const std::int64_t argument =
      spec.exploration.kind == ExplorationFunction::Kind::kApproximate
          ? round
          : known_samples;
  const double base =
      ExplorationValue(spec.exploration, static_cast<double>(argument));
  if (spec.rule != PolicySpec::Rule::kDklucb) return base;
  return DklucbScale(players, spec.alpha) * base;
}

ArmId SelectArm(const PlayerView& view, const PolicySpec& spec, int players,
                std::int64_t round) {
  const int k = view.num_arms();
  if (k == 0) throw ConfigError("cannot select from an empty arm set");
  for (ArmId a = 0; a < k; ++a) {
    if (view.known_count[a] == 0) return a;
  }
  const double f =
      PolicyExplorationValue(spec, players, view.total_known, round);
  ArmId best = 0;
  double best_index = -std::numeric_limits<double>::infinity();
  for (ArmId a = 0; a < k; ++a) {
    double index = 0.0;
    switch (spec.rule) {
      case PolicySpec::Rule::kUcb:
        index = UcbIndex(view, a, f);
        break;
      case PolicySpec::Rule::kKlUcb:
        index = KlUcbIndex(view, a, f,
                           static_cast<double>(view.known_count[a]));
        break;
      case PolicySpec::Rule::kDklucb:
        index = KlUcbIndex(view, a, f,
                           CountPrediction(view, a, players, spec.alpha));
        break;
    }
    if (index > best_index) {
      best_index = index;
      best = a;
    }
  }
  return best;
}

PolicySpec::Rule ParseRule(std::string_view text) {
  if (text == "ucb") return PolicySpec::Rule::kUcb;
  if (text == "klucb") return PolicySpec::Rule::kKlUcb;
  if (text == "dklucb") return PolicySpec::Rule::kDklucb;
  throw ConfigError("unknown policy '" + std::string(text) +
                    "' (expected ucb | klucb | dklucb)");
}

std::string ToString(PolicySpec::Rule rule) {
  switch (rule) {
    case PolicySpec::Rule::kUcb:
      return "ucb";
    case PolicySpec::Rule::kKlUcb:
      return "klucb";
    case PolicySpec::Rule::kDklucb:
      return "dklucb";
  }
  return "?";
}

}  // namespace distbandit
