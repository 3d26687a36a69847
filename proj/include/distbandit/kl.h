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

#ifndef DISTBANDIT_KL_H_
#define DISTBANDIT_KL_H_

namespace distbandit {

// KL divergence between Bernoulli(p) and Bernoulli(q), in nats.
//
// Uses 0 ln 0 = 0 and 0 ln(0/0) = 0, so boundary empirical means are
// admissible. Returns +infinity when q is 0 or 1 and p != q. Throws
// DomainError if either argument lies outside [0, 1].
double KlBernoulli(double p, double q);

// Left-truncated divergence: 0 when p > q, KlBernoulli(p, q) otherwise.
double KlTruncated(double p, double q);

// Bernoulli specialization of the minimal divergence D_inf: the smallest
// KL divergence from Bernoulli(mu_arm) to any Bernoulli with mean above
// mu_star, which is KlBernoulli(mu_arm, mu_star).
// Requires 0 < mu_arm < mu_star < 1 (PreconditionError otherwise).
double DInfBernoulli(double mu_arm, double mu_star);

}  // namespace distbandit

#endif  // DISTBANDIT_KL_H_
