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

#include "distbandit/arm_model.h"

#include <algorithm>
#include <string>
#include <utility>

#include "distbandit/errors.h"

namespace distbandit {

BernoulliArmModel::BernoulliArmModel(std::vector<double> means)
    : means_(std::move(means)) {
  if (means_.empty()) {
    throw PreconditionError("arm model needs at least one arm");
  }
  for (std::size_t a = 0; a < means_.size(); ++a) {
    if (!(means_[a] >= 0.0 && means_[a] <= 1.0)) {
      throw DomainError("mean of arm " + std::to_string(a + 1) + " = " +
                        std::to_string(means_[a]) + " is outside [0, 1]");
    }
  }
  best_mean_ = *std::max_element(means_.begin(), means_.end());
  gaps_.reserve(means_.size());
  for (double m : means_) gaps_.push_back(best_mean_ - m);
}

}  // namespace distbandit
