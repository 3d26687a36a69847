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

#include "distbandit/schedule.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "distbandit/errors.h"
#include "parse_util.h"

namespace distbandit {
namespace {

// Grid points at or above this value end the sequence.
constexpr double kMaxGridPoint = 9.0e18;

}  // namespace

CommunicationSchedule CommunicationSchedule::None() {
  CommunicationSchedule s;
  s.kind_ = Kind::kNone;
  return s;
}

CommunicationSchedule CommunicationSchedule::Full() {
  CommunicationSchedule s;
  s.kind_ = Kind::kFull;
  return s;
}

CommunicationSchedule CommunicationSchedule::OneShot(Round round) {
  if (round < 1) {
    throw PreconditionError("one-shot round must be >= 1, got " +
                            std::to_string(round));
  }
  CommunicationSchedule s;
  s.kind_ = Kind::kOneShot;
  s.int_param_ = round;
  return s;
}

CommunicationSchedule CommunicationSchedule::LinearGrid(Round d) {
  if (d < 1) {
    throw PreconditionError("linear grid step must be >= 1, got " +
                            std::to_string(d));
  }
  CommunicationSchedule s;
  s.kind_ = Kind::kLinearGrid;
  s.int_param_ = d;
  return s;
}

CommunicationSchedule CommunicationSchedule::ExponentialGrid(double q) {
  if (!(q > 1.0) || !std::isfinite(q)) {
    throw PreconditionError("exponential grid ratio must be > 1");
  }
  CommunicationSchedule s;
  s.kind_ = Kind::kExponentialGrid;
  s.q_ = q;
  return s;
}

CommunicationSchedule CommunicationSchedule::DoubleExponentialGrid(double q,
                                                                   double eps) {
  if (!(q > 1.0) || !std::isfinite(q)) {
    throw PreconditionError("double-exponential grid base must be > 1");
  }
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw PreconditionError("double-exponential grid eps must be > 0");
  }
  CommunicationSchedule s;
  s.kind_ = Kind::kDoubleExponentialGrid;
  s.q_ = q;
  s.eps_ = eps;
  return s;
}

CommunicationSchedule CommunicationSchedule::Explicit(
    std::vector<Round> rounds) {
  if (rounds.empty()) {
    throw PreconditionError("explicit schedule needs at least one round");
  }
  for (std::size_t i = 0; i < rounds.size(); ++i) {
    if (rounds[i] < 1) {
      throw PreconditionError("explicit rounds must be >= 1");
    }
    if (i > 0 && rounds[i] <= rounds[i - 1]) {
      throw PreconditionError("explicit rounds must be strictly increasing");
    }
  }
  CommunicationSchedule s;
  s.kind_ = Kind::kExplicit;
  s.rounds_ = std::move(rounds);
  return s;
}

bool CommunicationSchedule::is_finite() const {
  switch (kind_) {
    case Kind::kNone:
    case Kind::kOneShot:
    case Kind::kExplicit:
      return true;
    default:
      return false;
  }
}

template <typename Visit>
void CommunicationSchedule::ForEachGridElement(Visit visit) const {
  Round previous = 0;
  for (int k = 1;; ++k) {
    double point = 0.0;
    if (kind_ == Kind::kExponentialGrid) {
      point = std::pow(q_, k);
    } else {
      point = std::pow(q_, std::pow(1.0 + eps_, k));
    }
    if (!(point < kMaxGridPoint)) return;
    const Round element = std::llround(point);
    if (element <= previous) continue;
    previous = element;
    if (!visit(element)) return;
  }
}

bool CommunicationSchedule::IsCommRound(Round t) const {
  if (t < 1) return false;
  switch (kind_) {
    case Kind::kNone:
      return false;
    case Kind::kFull:
      return true;
    case Kind::kOneShot:
      return t == int_param_;
    case Kind::kLinearGrid:
      return t % int_param_ == 0;
    case Kind::kExplicit:
      return std::binary_search(rounds_.begin(), rounds_.end(), t);
    case Kind::kExponentialGrid:
    case Kind::kDoubleExponentialGrid:
      return LastCommAtOrBefore(t) == t;
  }
  return false;
}

Round CommunicationSchedule::LastCommAtOrBefore(Round t) const {
  if (t < 1) return 0;
  switch (kind_) {
    case Kind::kNone:
      return 0;
    case Kind::kFull:
      return t;
    case Kind::kOneShot:
      return t >= int_param_ ? int_param_ : 0;
    case Kind::kLinearGrid:
      return (t / int_param_) * int_param_;
    case Kind::kExplicit: {
      const auto it = std::upper_bound(rounds_.begin(), rounds_.end(), t);
      return it == rounds_.begin() ? 0 : *std::prev(it);
    }
    case Kind::kExponentialGrid:
    case Kind::kDoubleExponentialGrid: {
      Round last = 0;
      ForEachGridElement([&](Round c) {
        if (c > t) return false;
        last = c;
        return true;
      });
      return last;
    }
  }
  return 0;
}

std::int64_t CommunicationSchedule::CountUpTo(Round n) const {
  if (n < 1) return 0;
  switch (kind_) {
    case Kind::kNone:
      return 0;
    case Kind::kFull:
      return n;
    case Kind::kOneShot:
      return n >= int_param_ ? 1 : 0;
    case Kind::kLinearGrid:
      return n / int_param_;
    case Kind::kExplicit:
      return std::upper_bound(rounds_.begin(), rounds_.end(), n) -
             rounds_.begin();
    case Kind::kExponentialGrid:
    case Kind::kDoubleExponentialGrid: {
      std::int64_t count = 0;
      ForEachGridElement([&](Round c) {
        if (c > n) return false;
        ++count;
        return true;
      });
      return count;
    }
  }
  return 0;
}

std::vector<Round> CommunicationSchedule::ElementsUpTo(Round limit) const {
  std::vector<Round> out;
  if (limit < 1) return out;
  switch (kind_) {
    case Kind::kNone:
      break;
    case Kind::kFull:
      out.reserve(static_cast<std::size_t>(limit));
      for (Round t = 1; t <= limit; ++t) out.push_back(t);
      break;
    case Kind::kOneShot:
      if (int_param_ <= limit) out.push_back(int_param_);
      break;
    case Kind::kLinearGrid:
      for (Round t = int_param_; t <= limit; t += int_param_) out.push_back(t);
      break;
    case Kind::kExplicit:
      for (Round r : rounds_) {
        if (r > limit) break;
        out.push_back(r);
      }
      break;
    case Kind::kExponentialGrid:
    case Kind::kDoubleExponentialGrid:
      ForEachGridElement([&](Round c) {
        if (c > limit) return false;
        out.push_back(c);
        return true;
      });
      break;
  }
  return out;
}

std::vector<Round> CommunicationSchedule::FirstElements(
    std::size_t count) const {
  std::vector<Round> out;
  switch (kind_) {
    case Kind::kNone:
      break;
    case Kind::kFull:
    case Kind::kLinearGrid: {
      const Round step = kind_ == Kind::kFull ? 1 : int_param_;
      for (std::size_t k = 1; k <= count; ++k) {
        out.push_back(static_cast<Round>(k) * step);
      }
      break;
    }
    case Kind::kOneShot:
      if (count > 0) out.push_back(int_param_);
      break;
    case Kind::kExplicit:
      out.assign(rounds_.begin(),
                 rounds_.begin() +
                     static_cast<std::ptrdiff_t>(std::min(count, rounds_.size())));
      break;
    case Kind::kExponentialGrid:
    case Kind::kDoubleExponentialGrid:
      if (count == 0) break;
      ForEachGridElement([&](Round c) {
        out.push_back(c);
        return out.size() < count;
      });
      break;
  }
  return out;
}

DensityResult Density(const CommunicationSchedule& s,
                      std::optional<std::size_t> burn_in) {
  using Kind = CommunicationSchedule::Kind;
  switch (s.kind()) {
    case Kind::kNone:
      return {0.0, false};
    case Kind::kFull:
    case Kind::kLinearGrid:
    case Kind::kExponentialGrid:
      return {1.0, false};
    case Kind::kDoubleExponentialGrid:
      return {1.0 / (1.0 + s.epsilon()), false};
    case Kind::kOneShot:
      throw InsufficientDataError(
          "density of a one-shot schedule is undefined (single element)");
    case Kind::kExplicit:
      break;
  }
  const auto& rounds = s.explicit_rounds();
  if (rounds.size() < 2) {
    throw InsufficientDataError(
        "density estimate needs at least two explicit rounds");
  }
  const std::size_t last_pair = rounds.size() - 2;
  const std::size_t start = std::min(burn_in.value_or(rounds.size() / 4),
                                     last_pair);
  double density = std::numeric_limits<double>::infinity();
  for (std::size_t k = start; k <= last_pair; ++k) {
    const double ratio = std::log(static_cast<double>(rounds[k])) /
                         std::log(static_cast<double>(rounds[k + 1]));
    density = std::min(density, ratio);
  }
  return {density, true};
}

std::int64_t CeilIntegerRoot(std::int64_t n, int k) {
  if (n < 1 || k < 1) throw PreconditionError("CeilIntegerRoot needs n, k >= 1");
  // r^k >= n, with saturation so large r never overflows.
  const auto reaches = [&](std::int64_t r) {
    __int128 acc = 1;
    for (int i = 0; i < k; ++i) {
      acc *= r;
      if (acc >= n) return true;
    }
    return acc >= n;
  };
  auto r = static_cast<std::int64_t>(
      std::ceil(std::pow(static_cast<double>(n), 1.0 / k)));
  r = std::max<std::int64_t>(r, 1);
  while (r > 1 && reaches(r - 1)) --r;
  while (!reaches(r)) ++r;
  return r;
}

CommunicationSchedule OverExplorationSchedule(std::int64_t horizon,
                                              int players) {
  if (horizon < 1 || players < 1) {
    throw PreconditionError("over-exploration needs horizon, players >= 1");
  }
  return CommunicationSchedule::OneShot(CeilIntegerRoot(horizon, players));
}

CountingBoundReport CheckCountingBound(const CommunicationSchedule& s,
                                       Round n_max, double tolerance,
                                       int points) {
  if (n_max < 16) throw PreconditionError("n_max must be >= 16");
  const DensityResult density = Density(s);
  if (!(density.value > 0.0 && density.value < 1.0)) {
    throw NotApplicableError(
        "counting bound needs 0 < alpha < 1, got alpha = " +
        std::to_string(density.value));
  }
  CountingBoundReport report;
  report.alpha = density.value;
  report.alpha_estimated = density.estimated;
  const double log_inv_alpha = std::log(1.0 / density.value);
  const double span = std::log(static_cast<double>(n_max) / 16.0);
  points = std::max(points, 2);
  Round previous = 0;
  for (int i = 0; i < points; ++i) {
    Round n = i + 1 == points
                  ? n_max
                  : std::llround(16.0 * std::exp(span * i / (points - 1)));
    if (n <= previous) continue;
    previous = n;
    CountingBoundRow row;
    row.n = n;
    row.count = s.CountUpTo(n);
    row.reference = std::log(std::log(static_cast<double>(n))) / log_inv_alpha;
    row.ratio = row.count / row.reference;
    report.rows.push_back(row);
  }
  report.tail_ratio = report.rows.back().ratio;
  report.tail_ok = report.tail_ratio >= 1.0 - tolerance;
  return report;
}

CommunicationSchedule ParseSchedule(std::string_view text) {
  using internal::ParseDouble;
  using internal::ParseInt;
  text = internal::Trim(text);
  const std::string original(text);
  const auto fail = [&](const std::string& why) -> ConfigError {
    return ConfigError("invalid schedule '" + original + "': " + why);
  };
  const std::size_t colon = text.find(':');
  const std::string_view head = internal::Trim(text.substr(0, colon));
  const std::string_view args =
      colon == std::string_view::npos ? std::string_view{}
                                      : text.substr(colon + 1);
  const bool has_args = colon != std::string_view::npos;

  try {
    if (head == "none" || head == "full") {
      if (has_args) throw fail("takes no arguments");
      return head == "none" ? CommunicationSchedule::None()
                            : CommunicationSchedule::Full();
    }
    if (head == "oneshot" || head == "linear") {
      const auto value = ParseInt(args);
      if (!has_args || !value) throw fail("expected an integer argument");
      if (*value < 1) throw fail("rounds are numbered from 1");
      return head == "oneshot" ? CommunicationSchedule::OneShot(*value)
                               : CommunicationSchedule::LinearGrid(*value);
    }
    if (head == "exp") {
      const auto q = ParseDouble(args);
      if (!has_args || !q) throw fail("expected exp:<q>");
      if (!(*q > 1.0)) throw fail("q must be > 1");
      return CommunicationSchedule::ExponentialGrid(*q);
    }
    if (head == "doubleexp") {
      const auto parts = internal::Split(args, ',');
      if (!has_args || parts.size() != 2) throw fail("expected doubleexp:<q>,<eps>");
      const auto q = ParseDouble(parts[0]);
      const auto eps = ParseDouble(parts[1]);
      if (!q || !eps) throw fail("expected doubleexp:<q>,<eps>");
      if (!(*q > 1.0)) throw fail("q must be > 1");
      if (!(*eps > 0.0)) throw fail("eps must be > 0");
      return CommunicationSchedule::DoubleExponentialGrid(*q, *eps);
    }
    if (head == "explicit") {
      if (!has_args) throw fail("expected explicit:<r1>,<r2>,...");
      std::vector<Round> rounds;
      for (std::string_view part : internal::Split(args, ',')) {
        const auto r = ParseInt(part);
        if (!r) throw fail("'" + std::string(part) + "' is not an integer");
        if (*r < 1) throw fail("rounds are numbered from 1");
        if (!rounds.empty() && *r <= rounds.back()) {
          throw fail("rounds must be strictly increasing");
        }
        rounds.push_back(*r);
      }
      return CommunicationSchedule::Explicit(std::move(rounds));
    }
  } catch (const PreconditionError& e) {
    throw fail(e.what());
  }
  throw fail(
      "expected none | full | oneshot:<r> | linear:<d> | exp:<q> | "
      "doubleexp:<q>,<eps> | explicit:<r1>,<r2>,...");
}

std::string ToString(const CommunicationSchedule& s) {
  using Kind = CommunicationSchedule::Kind;
  using internal::FormatDouble;
  switch (s.kind()) {
    case Kind::kNone:
      return "none";
    case Kind::kFull:
      return "full";
    case Kind::kOneShot:
      return "oneshot:" + std::to_string(s.one_shot_round());
    case Kind::kLinearGrid:
      return "linear:" + std::to_string(s.linear_step());
    case Kind::kExponentialGrid:
      return "exp:" + FormatDouble(s.ratio());
    case Kind::kDoubleExponentialGrid:
      return "doubleexp:" + FormatDouble(s.ratio()) + "," +
             FormatDouble(s.epsilon());
    case Kind::kExplicit: {
      std::string out = "explicit:";
      const auto& rounds = s.explicit_rounds();
      for (std::size_t i = 0; i < rounds.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(rounds[i]);
      }
      return out;
    }
  }
  return "?";
}

}  // namespace distbandit
