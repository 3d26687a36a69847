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

#include "distbandit/analysis.h"

#include <cmath>
#include <cstdio>
#include <utility>

#include "distbandit/errors.h"
#include "distbandit/exploration.h"
#include "distbandit/kl.h"
#include "parse_util.h"

namespace distbandit {

double LowerBoundCoefficient(int players, double alpha, double mu_arm,
                             double mu_star) {
  if (players < 1) throw PreconditionError("players must be >= 1");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha must lie in [0, 1]");
  }
  return DklucbScale(players, alpha) / DInfBernoulli(mu_arm, mu_star);
}

std::string ToString(UpperBound bound) {
  switch (bound) {
    case UpperBound::kOneShot:
      return "one-shot over-exploration";
    case UpperBound::kDenseSchedule:
      return "dense schedule";
    case UpperBound::kDklucb:
      return "dklucb";
  }
  return "?";
}

double UpperBoundCoefficient(UpperBound bound, int players, double alpha,
                             double mu_arm, double mu_star) {
  const double inverse_kl = 1.0 / DInfBernoulli(mu_arm, mu_star);
  if (bound != UpperBound::kDklucb) return inverse_kl;
  if (players < 1) throw PreconditionError("players must be >= 1");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha must lie in [0, 1]");
  }
  return DklucbScale(players, alpha) * inverse_kl;
}

std::vector<double> UpperBoundCurve(UpperBound bound, int players,
                                    double alpha, double mu_arm, double mu_star,
                                    std::span<const Round> checkpoints) {
  const double coefficient =
      UpperBoundCoefficient(bound, players, alpha, mu_arm, mu_star);
  std::vector<double> curve;
  curve.reserve(checkpoints.size());
  for (Round t : checkpoints) {
    curve.push_back(coefficient * std::log(static_cast<double>(t)));
  }
  return curve;
}

BoundReport MakeBoundReport(const BernoulliArmModel& model, UpperBound bound,
                            int players, double alpha,
                            std::vector<Round> checkpoints) {
  BoundReport report;
  report.bound = bound;
  report.players = players;
  report.alpha = alpha;
  report.checkpoints = std::move(checkpoints);
  for (ArmId a = 0; a < model.num_arms(); ++a) {
    if (!model.is_suboptimal(a)) continue;
    ArmBound arm;
    arm.arm = a;
    arm.lower_coefficient =
        LowerBoundCoefficient(players, alpha, model.mean(a), model.best_mean());
    arm.upper_coefficient = UpperBoundCoefficient(
        bound, players, alpha, model.mean(a), model.best_mean());
    arm.leading_term = UpperBoundCurve(bound, players, alpha, model.mean(a),
                                       model.best_mean(), report.checkpoints);
    report.arms.push_back(std::move(arm));
  }
  return report;
}

BoundChoice ChooseBound(const RunConfig& cfg) {
  if (cfg.policy.rule == PolicySpec::Rule::kDklucb) {
    return {UpperBound::kDklucb, cfg.policy.alpha};
  }
  if (cfg.schedule.kind() == CommunicationSchedule::Kind::kOneShot) {
    return {UpperBound::kOneShot, 1.0};
  }
  return {UpperBound::kDenseSchedule, 1.0};
}

std::vector<ComparisonRow> Compare(const RunAggregate& aggregate,
                                   const BoundReport& report,
                                   double flag_threshold) {
  if (aggregate.checkpoints != report.checkpoints) {
    throw ShapeError("aggregate and bound report have different checkpoints");
  }
  std::vector<ComparisonRow> rows;
  for (std::size_t ci = 0; ci < report.checkpoints.size(); ++ci) {
    for (const ArmBound& arm : report.arms) {
      if (arm.arm >= aggregate.num_arms) {
        throw ShapeError("bound report names an arm the aggregate lacks");
      }
      ComparisonRow row;
      row.t = report.checkpoints[ci];
      row.arm = arm.arm;
      row.empirical_mean = aggregate.mean_pulls(ci, arm.arm);
      row.leading_term = arm.leading_term[ci];
      // ln 1 = 0 makes the first checkpoint's ratio infinite or undefined.
      row.ratio = row.empirical_mean / row.leading_term;
      row.flagged = row.ratio > flag_threshold;
      rows.push_back(row);
    }
  }
  return rows;
}

void WriteComparisonCsv(std::ostream& out,
                        std::span<const ComparisonRow> rows) {
  using internal::FormatDouble;
  out << "t,arm,empirical_mean,leading_term,ratio\n";
  for (const ComparisonRow& row : rows) {
    out << row.t << ',' << row.arm + 1 << ',' << FormatDouble(row.empirical_mean)
        << ',' << FormatDouble(row.leading_term) << ','
        << FormatDouble(row.ratio) << '\n';
  }
}

void PrintComparisonTable(std::ostream& out, const std::string& title,
                          std::span<const ComparisonRow> rows) {
  out << title << " (leading term only; o(ln T) slack not included)\n";
  char line[128];
  std::snprintf(line, sizeof(line), "%10s %4s %14s %14s %9s\n", "t", "arm",
                "empirical", "leading_term", "ratio");
  out << line;
  for (const ComparisonRow& row : rows) {
    std::snprintf(line, sizeof(line), "%10lld %4d %14.3f %14.3f %9.3f%s\n",
                  static_cast<long long>(row.t), row.arm + 1,
                  row.empirical_mean, row.leading_term, row.ratio,
                  row.flagged ? "  *" : "");
    out << line;
  }
}

}  // namespace distbandit
