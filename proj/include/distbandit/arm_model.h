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

#ifndef DISTBANDIT_ARM_MODEL_H_
#define DISTBANDIT_ARM_MODEL_H_

#include <span>
#include <vector>

namespace distbandit {

// Arms are identified by their zero-based position. User-facing output
// (CSV, tables) numbers them from 1.
using ArmId = int;

// Fixed Bernoulli arm means together with the best mean and per-arm gaps.
class BernoulliArmModel {
 public:
  // Throws DomainError if a mean lies outside [0, 1] and PreconditionError
  // if `means` is empty.
  explicit BernoulliArmModel(std::vector<double> means);

  int num_arms() const { return static_cast<int>(means_.size()); }
  double mean(ArmId a) const { return means_[a]; }
  double gap(ArmId a) const { return gaps_[a]; }
  double best_mean() const { return best_mean_; }
  std::span<const double> means() const { return means_; }
  std::span<const double> gaps() const { return gaps_; }

  bool is_suboptimal(ArmId a) const { return gaps_[a] > 0.0; }

 private:
  std::vector<double> means_;
  std::vector<double> gaps_;
  double best_mean_ = 0.0;
};

}  // namespace distbandit

#endif  // DISTBANDIT_ARM_MODEL_H_
