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

#ifndef DISTBANDIT_RNG_H_
#define DISTBANDIT_RNG_H_

#include <cstdint>
#include <random>

namespace distbandit {

// Reward streams are std::mt19937_64 engines. Each (seed, replication,
// player, arm) gets its own engine whose seed is derived by chaining the
// SplitMix64 finalizer over the four values, so every replication and every
// player is individually replayable. Keying by arm as well means the i-th
// pull of arm a by player p sees the same reward under every schedule and
// policy (common random numbers), which sharpens strategy comparisons.
using RewardStream = std::mt19937_64;

// SplitMix64 output function (Steele, Lea & Flood, 2014).
constexpr std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t DeriveStreamSeed(std::uint64_t seed,
                                         std::uint64_t replication,
                                         std::uint64_t player,
                                         std::uint64_t arm) {
  std::uint64_t h = SplitMix64(seed);
  h = SplitMix64(h ^ replication);
  h = SplitMix64(h ^ (player + 0x632be59bd9b4e019ULL));
  h = SplitMix64(h ^ (arm + 0x8cb92ba72f3d8dd7ULL));
  return h;
}

inline RewardStream MakeRewardStream(std::uint64_t seed,
                                     std::uint64_t replication,
                                     std::uint64_t player, std::uint64_t arm) {
  return RewardStream(DeriveStreamSeed(seed, replication, player, arm));
}

// Uniform double in [0, 1) from the top 53 bits; platform independent,
// unlike std::uniform_real_distribution.
inline double UniformUnit(RewardStream& stream) {
  return static_cast<double>(stream() >> 11) * 0x1.0p-53;
}

inline int DrawBernoulli(RewardStream& stream, double mean) {
  return UniformUnit(stream) < mean ? 1 : 0;
}

}  // namespace distbandit

#endif  // DISTBANDIT_RNG_H_
