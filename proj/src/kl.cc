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

#include "distbandit/kl.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "distbandit/errors.h"

namespace distbandit {
namespace {

void CheckProbability(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(std::string(name) + " = " + std::to_string(x) +
                      " is not a probability in [0, 1]");
  }
}

// x ln(x / y) with 0 ln(0 / y) = 0.
double XLogXOverY(double x, double y) {
  if (x == 0.0) return 0.0;
  if (y == 0.0) return std::numeric_limits<double>::infinity();
  return x * std::log(x / y);
}

}  // namespace

double KlBernoulli(double p, double q) {
  CheckProbability(p, "p");
  CheckProbability(q, "q");
  if (p == q) return 0.0;
  // Rounding can push the sum a hair below zero when p and q are close.
  return std::max(0.0, XLogXOverY(p, q) + XLogXOverY(1.0 - p, 1.0 - q));
}

double KlTruncated(double p, double q) {
  CheckProbability(p, "p");
  CheckProbability(q, "q");
  if (p > q) return 0.0;
  return KlBernoulli(p, q);
}

double DInfBernoulli(double mu_arm, double mu_star) {
  CheckProbability(mu_arm, "mu_arm");
  CheckProbability(mu_star, "mu_star");
  if (!(mu_arm > 0.0 && mu_arm < mu_star && mu_star < 1.0)) {
    throw PreconditionError("D_inf needs 0 < mu_arm < mu_star < 1, got (" +
                            std::to_string(mu_arm) + ", " +
                            std::to_string(mu_star) + ")");
  }
  return KlBernoulli(mu_arm, mu_star);
}

}  // namespace distbandit
