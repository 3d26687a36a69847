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

#ifndef DISTBANDIT_SCHEDULE_H_
#define DISTBANDIT_SCHEDULE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace distbandit {

// Rounds are numbered from 1. Round 0 stands for "before the first round".
using Round = std::int64_t;

// The set of communication rounds: at the end of each of them every player
// learns everything the other players know.
//
// Grid families are infinite and generated lazily. Real grid points are
// rounded to the nearest integer; points that do not exceed the previous
// element are dropped, so elements are always strictly increasing. Points
// beyond the int64 range end the sequence.
class CommunicationSchedule {
 public:
  enum class Kind {
    kNone,
    kFull,
    kOneShot,
    kLinearGrid,             // {d, 2d, 3d, ...}
    kExponentialGrid,        // {q, q^2, q^3, ...}
    kDoubleExponentialGrid,  // {q^(1+eps), q^((1+eps)^2), ...}
    kExplicit,
  };

  // Never communicates.
  static CommunicationSchedule None();
  // Communicates at the end of every round.
  static CommunicationSchedule Full();
  // Requires round >= 1.
  static CommunicationSchedule OneShot(Round round);
  // Requires d >= 1.
  static CommunicationSchedule LinearGrid(Round d);
  // Requires q > 1.
  static CommunicationSchedule ExponentialGrid(double q);
  // Requires q > 1 and eps > 0.
  static CommunicationSchedule DoubleExponentialGrid(double q, double eps);
  // Requires a non-empty, strictly increasing list of rounds >= 1.
  static CommunicationSchedule Explicit(std::vector<Round> rounds);

  Kind kind() const { return kind_; }
  bool is_finite() const;

  // Parameters; only meaningful for the matching kind.
  Round one_shot_round() const { return int_param_; }
  Round linear_step() const { return int_param_; }
  double ratio() const { return q_; }
  double epsilon() const { return eps_; }
  const std::vector<Round>& explicit_rounds() const { return rounds_; }

  // t in C. Requires t >= 1.
  bool IsCommRound(Round t) const;
  // l(t): the largest communication round u <= t, or 0 if there is none.
  Round LastCommAtOrBefore(Round t) const;
  // Z(n) = |C intersected with {1..n}|.
  std::int64_t CountUpTo(Round n) const;
  // All elements <= limit, ascending.
  std::vector<Round> ElementsUpTo(Round limit) const;
  // The first `count` elements (fewer if the set is smaller).
  std::vector<Round> FirstElements(std::size_t count) const;

  friend bool operator==(const CommunicationSchedule&,
                         const CommunicationSchedule&) = default;

 private:
  CommunicationSchedule() = default;

  // Lazily walks grid elements in order; stops when `visit` returns false.
  template <typename Visit>
  void ForEachGridElement(Visit visit) const;

  Kind kind_ = Kind::kNone;
  Round int_param_ = 0;
  double q_ = 0.0;
  double eps_ = 0.0;
  std::vector<Round> rounds_;
};

// Result of a density query. `estimated` marks a finite-prefix proxy for the
// liminf rather than an exact value.
struct DensityResult {
  double value = 0.0;
  bool estimated = false;
};

// alpha(C) = liminf_k ln(C_k) / ln(C_{k+1}).
//
// Closed forms: None -> 0, Full/LinearGrid/ExponentialGrid -> 1,
// DoubleExponentialGrid(q, eps) -> 1 / (1 + eps). Explicit sets return the
// minimum consecutive log-ratio over pairs starting at index >= burn_in
// (default: a quarter of the list), flagged estimated. One-shot and
// single-element explicit sets throw InsufficientDataError.
DensityResult Density(const CommunicationSchedule& s,
                      std::optional<std::size_t> burn_in = std::nullopt);

// The one-shot schedule communicating at ceil(horizon^(1/players)).
// Requires horizon >= 1 and players >= 1.
CommunicationSchedule OverExplorationSchedule(std::int64_t horizon,
                                              int players);

// Smallest integer r >= 1 with r^k >= n, computed exactly.
std::int64_t CeilIntegerRoot(std::int64_t n, int k);

struct CountingBoundRow {
  Round n = 0;
  std::int64_t count = 0;  // Z(n)
  double reference = 0.0;  // ln ln n / ln(1 / alpha)
  double ratio = 0.0;      // count / reference
};

struct CountingBoundReport {
  double alpha = 0.0;
  bool alpha_estimated = false;
  std::vector<CountingBoundRow> rows;  // log-spaced n, ascending, ends at n_max
  double tail_ratio = 0.0;
  bool tail_ok = false;  // tail_ratio >= 1 - tolerance
};

// Tabulates Z(n) against ln ln n / ln(1/alpha) for log-spaced n in
// [16, n_max]. Throws NotApplicableError unless 0 < alpha < 1 and
// PreconditionError if n_max < 16.
CountingBoundReport CheckCountingBound(const CommunicationSchedule& s,
                                       Round n_max, double tolerance = 0.05,
                                       int points = 25);

// Grammar: none | full | oneshot:<r> | linear:<d> | exp:<q> |
//          doubleexp:<q>,<eps> | explicit:<r1>,<r2>,...
// Throws ConfigError on malformed input.
CommunicationSchedule ParseSchedule(std::string_view text);
std::string ToString(const CommunicationSchedule& s);

}  // namespace distbandit

#endif  // DISTBANDIT_SCHEDULE_H_
