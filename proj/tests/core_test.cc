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
#include <limits>
#include <random>

#include "distbandit/arm_model.h"
#include "distbandit/errors.h"
#include "distbandit/exploration.h"
#include "distbandit/kl.h"

namespace distbandit {
namespace {

// Values computed with 40-digit mpmath from the closed form.
constexpr double kKl08_09 = 0.04440300758688229825;
constexpr double kKl01_09 = 1.757779661868975506;

TEST_CASE("KlBernoulli golden values") {
  CHECK(KlBernoulli(0.5, 0.5) == 0.0);
  CHECK(KlBernoulli(0.8, 0.9) == doctest::Approx(kKl08_09).epsilon(1e-13));
  CHECK(KlBernoulli(0.1, 0.9) == doctest::Approx(kKl01_09).epsilon(1e-13));
  CHECK(KlBernoulli(0.0, 0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("KlBernoulli boundary conventions") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(KlBernoulli(0.3, 0.0) == inf);
  CHECK(KlBernoulli(0.3, 1.0) == inf);
  CHECK(KlBernoulli(0.0, 0.0) == 0.0);
  CHECK(KlBernoulli(1.0, 1.0) == 0.0);
  CHECK(KlBernoulli(0.0, 1.0) == inf);
  CHECK(KlBernoulli(1.0, 0.5) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("KlBernoulli rejects non-probabilities") {
  CHECK_THROWS_AS(KlBernoulli(-0.1, 0.5), DomainError);
  CHECK_THROWS_AS(KlBernoulli(0.5, 1.5), DomainError);
  CHECK_THROWS_AS(KlBernoulli(std::nan(""), 0.5), DomainError);
  CHECK_THROWS_AS(KlTruncated(0.5, -1.0), DomainError);
}

TEST_CASE("KlBernoulli properties over random pairs") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double p = unit(gen);
    const double q = unit(gen);
    CHECK(KlBernoulli(p, p) == 0.0);
    if (p != q && q > 0.0 && q < 1.0) CHECK(KlBernoulli(p, q) > 0.0);
    // Closed forms at the endpoints of p.
    CHECK(KlBernoulli(0.0, q) ==
          doctest::Approx(-std::log1p(-q)).epsilon(1e-12));
    if (q > 0.0) {
      CHECK(KlBernoulli(1.0, q) == doctest::Approx(-std::log(q)).epsilon(1e-12));
    }
    // Strictly increasing in q on [p, 1).
    const double q1 = p + (1.0 - p) * unit(gen);
    const double q2 = q1 + (1.0 - q1) * unit(gen);
    if (q1 < q2 && q2 < 1.0 && q2 - q1 > 1e-9) {
      CHECK(KlBernoulli(p, q1) < KlBernoulli(p, q2));
    }
  }
}

TEST_CASE("KlTruncated branches") {
  CHECK(KlTruncated(0.9, 0.8) == 0.0);
  CHECK(KlTruncated(0.8, 0.9) == KlBernoulli(0.8, 0.9));
  CHECK(KlTruncated(0.5, 0.5) == 0.0);
}

TEST_CASE("DInfBernoulli") {
  CHECK(DInfBernoulli(0.8, 0.9) == doctest::Approx(kKl08_09).epsilon(1e-13));
  CHECK(DInfBernoulli(0.1, 0.9) == doctest::Approx(kKl01_09).epsilon(1e-13));
  CHECK_THROWS_AS(DInfBernoulli(0.9, 0.9), PreconditionError);
  CHECK_THROWS_AS(DInfBernoulli(0.95, 0.9), PreconditionError);
  CHECK_THROWS_AS(DInfBernoulli(0.0, 0.9), PreconditionError);
  CHECK_THROWS_AS(DInfBernoulli(0.5, 1.0), PreconditionError);
}

TEST_CASE("ExplorationValue formulas") {
  const auto standard = ExplorationFunction::Standard();
  CHECK(ExplorationValue(standard, std::exp(1.0)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ExplorationValue(ExplorationFunction::Approximate(), 8) ==
        doctest::Approx(2.772588722239781237).epsilon(1e-14));
  CHECK(ExplorationValue(ExplorationFunction::Dklucb(2, 1.0), 100) ==
        doctest::Approx(9.186709063411794695).epsilon(1e-14));
  CHECK(ExplorationValue(ExplorationFunction::Dklucb(3, 0.0), 100) ==
        doctest::Approx(3 * 9.186709063411794695).epsilon(1e-14));
}

TEST_CASE("ExplorationValue is clamped at small arguments") {
  const auto standard = ExplorationFunction::Standard();
  CHECK(ExplorationValue(standard, 1) == 0.0);
  CHECK(ExplorationValue(standard, 2) == 0.0);  // ln 2 + 3 ln ln 2 < 0
  CHECK(ExplorationValue(ExplorationFunction::Dklucb(4, 0.3), 1) == 0.0);
  CHECK(ExplorationValue(standard, 3) > 0.0);
  CHECK_THROWS_AS(ExplorationValue(standard, 0.5), PreconditionError);
}

TEST_CASE("ExplorationValue monotone from 3 on, and Dklucb(M=1) == Standard") {
  const ExplorationFunction variants[] = {
      ExplorationFunction::Standard(), ExplorationFunction::Approximate(),
      ExplorationFunction::Dklucb(2, 0.5), ExplorationFunction::Dklucb(5, 0.0)};
  for (const auto& f : variants) {
    double previous = ExplorationValue(f, 3);
    for (int n = 4; n < 5000; ++n) {
      const double v = ExplorationValue(f, n);
      CHECK(v >= previous);
      previous = v;
    }
  }
  for (double alpha : {0.0, 0.25, 1.0}) {
    const auto single = ExplorationFunction::Dklucb(1, alpha);
    for (int n = 1; n < 2000; ++n) {
      CHECK(ExplorationValue(single, n) ==
            ExplorationValue(ExplorationFunction::Standard(), n));
    }
  }
}

TEST_CASE("DklucbScale") {
  CHECK(DklucbScale(1, 0.3) == 1.0);
  CHECK(DklucbScale(7, 1.0) == 1.0);
  CHECK(DklucbScale(5, 0.0) == 5.0);
  CHECK(DklucbScale(2, 0.5) == doctest::Approx(4.0 / 3.0));
  CHECK_THROWS_AS(ExplorationFunction::Dklucb(0, 0.5), PreconditionError);
  CHECK_THROWS_AS(ExplorationFunction::Dklucb(2, 1.5), DomainError);
}

TEST_CASE("ParseExploration") {
  CHECK(ParseExploration("standard") == ExplorationFunction::Standard());
  CHECK(ParseExploration("ln2t") == ExplorationFunction::Approximate());
  CHECK_THROWS_AS(ParseExploration("ln3t"), ConfigError);
}

TEST_CASE("BernoulliArmModel") {
  const BernoulliArmModel model({0.3, 0.9, 0.8, 0.9});
  CHECK(model.num_arms() == 4);
  CHECK(model.best_mean() == 0.9);
  CHECK(model.gap(0) == doctest::Approx(0.6));
  CHECK(model.gap(1) == 0.0);
  CHECK(model.gap(3) == 0.0);
  CHECK(model.is_suboptimal(2));
  CHECK_FALSE(model.is_suboptimal(1));
  for (double g : model.gaps()) CHECK(g >= 0.0);

  CHECK_THROWS_AS(BernoulliArmModel({0.9, 1.2}), DomainError);
  CHECK_THROWS_AS(BernoulliArmModel(std::vector<double>{}), PreconditionError);
}

}  // namespace
}  // namespace distbandit
