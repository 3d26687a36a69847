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

#ifndef DISTBANDIT_ANALYSIS_H_
#define DISTBANDIT_ANALYSIS_H_

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "distbandit/arm_model.h"
#include "distbandit/schedule.h"
#include "distbandit/simulation.h"

namespace distbandit {

// Asymptotic lower bound on E[N_T(a)] / ln T for any consistent policy under
// a schedule of density alpha:
//   M / (1 + (M - 1) alpha) * 1 / D_inf(mu_arm, mu_star).
// Requires 0 < mu_arm < mu_star < 1.
double LowerBoundCoefficient(int players, double alpha, double mu_arm,
                             double mu_star);

// Which asymptotic upper bound a configuration falls under. All three have
// the form coefficient * ln T + o(ln T).
enum class UpperBound {
  kOneShot,        // KL-UCB, single round at ceil(T^(1/M)); coefficient 1/KL
  kDenseSchedule,  // KL-UCB, density 1; coefficient 1/KL
  kDklucb,         // DKLUCB, any density; coefficient M/(1+(M-1)alpha)/KL
};

std::string ToString(UpperBound bound);

// Leading coefficient of the upper bound; `alpha` only matters for kDklucb.
double UpperBoundCoefficient(UpperBound bound, int players, double alpha,
                             double mu_arm, double mu_star);

// coefficient * ln t at each checkpoint. The o(ln T) remainder has no finite
// constant and is left out.
std::vector<double> UpperBoundCurve(UpperBound bound, int players,
                                    double alpha, double mu_arm, double mu_star,
                                    std::span<const Round> checkpoints);

struct ArmBound {
  ArmId arm = 0;
  double lower_coefficient = 0.0;
  double upper_coefficient = 0.0;
  std::vector<double> leading_term;  // per checkpoint
};

// Theoretical curves for every suboptimal arm of a model.
struct BoundReport {
  UpperBound bound = UpperBound::kDenseSchedule;
  int players = 1;
  double alpha = 1.0;
  std::vector<Round> checkpoints;
  std::vector<ArmBound> arms;
};

// Arms must have means strictly inside (0, 1) for suboptimal arms and the
// best mean must be below 1, as D_inf requires.
BoundReport MakeBoundReport(const BernoulliArmModel& model, UpperBound bound,
                            int players, double alpha,
                            std::vector<Round> checkpoints);

// The bound a run configuration falls under: DKLUCB -> kDklucb, one-shot
// schedule -> kOneShot, anything else -> kDenseSchedule. Also returns the
// alpha used for the curve.
struct BoundChoice {
  UpperBound bound;
  double alpha;
};
BoundChoice ChooseBound(const RunConfig& cfg);

struct ComparisonRow {
  Round t = 0;
  ArmId arm = 0;
  double empirical_mean = 0.0;
  double leading_term = 0.0;
  double ratio = 0.0;  // empirical / leading term
  bool flagged = false;
};

// Per-checkpoint, per-suboptimal-arm ratio of the Monte Carlo mean to the
// leading term. Rows whose ratio exceeds `flag_threshold` are flagged; the
// flag is informational. Throws ShapeError if checkpoints differ.
std::vector<ComparisonRow> Compare(const RunAggregate& aggregate,
                                   const BoundReport& report,
                                   double flag_threshold = 1.5);

// Header "t,arm,empirical_mean,leading_term,ratio"; arms numbered from 1.
void WriteComparisonCsv(std::ostream& out,
                        std::span<const ComparisonRow> rows);
// Aligned human-readable table, labelled "leading term only".
void PrintComparisonTable(std::ostream& out, const std::string& title,
                          std::span<const ComparisonRow> rows);

}  // namespace distbandit

#endif  // DISTBANDIT_ANALYSIS_H_
