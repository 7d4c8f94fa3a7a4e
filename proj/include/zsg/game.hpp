// Copyright 2026 The zsgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zsg/interval.hpp"
#include "zsg/rng.hpp"

namespace zsg {

// A strategy profile: one value per player, index i <-> player i.
using Profile = std::vector<double>;

using PayoffFn = std::function<double(std::span<const double>)>;

// An n-player zero-sum game (n >= 3) with one alien. Players 0..n-2 form
// Group 1: they share one strategy interval and, when the game is declared
// symmetric, one payoff form up to relabeling. Player n-1 is the alien with
// its own payoff and interval.
//
// Symmetry and the zero-sum identity are declared by the constructor and
// then checked by sampling (validate_zero_sum / validate_group1_symmetry):
// quasi-concavity-style structural assumptions cannot be cheaply certified,
// so sampling validation stands in for them.
//
// Immutable after construction; all operations on games are pure.
struct GameDefinition {
  int n;
  Interval group1_interval;
  Interval alien_interval;
  std::vector<PayoffFn> payoffs;  // size n, profile -> payoff of player i
  std::string label;
  bool group1_symmetric;  // declared; validated by sampling

  GameDefinition(int n_, Interval group1, Interval alien,
                 std::vector<PayoffFn> payoffs_, std::string label_,
                 bool group1_symmetric_);

  int alien() const noexcept { return n - 1; }
  bool in_group1(int player) const noexcept {
    return player >= 0 && player < n - 1;
  }
  const Interval& interval_of(int player) const noexcept {
    return player == alien() ? alien_interval : group1_interval;
  }
};

// Throws std::invalid_argument when the player index is out of range.
void check_player_index(const GameDefinition& game, int player);

// Throws std::domain_error naming the offending player when a coordinate
// lies outside its strategy interval (or the length is wrong).
void check_profile(const GameDefinition& game, std::span<const double> s);

// u_player(s), after validating the index and the profile. Deterministic
// and side-effect free: equal inputs give bit-identical outputs.
double evaluate_payoff(const GameDefinition& game, int player,
                       std::span<const double> s);

struct ZeroSumCheck {
  double max_residual = 0.0;  // max |sum_i u_i(s)| over the samples
  Profile worst_profile;      // profile attaining it
};

// Evaluates the zero-sum residual at `samples` seeded pseudo-random
// profiles. samples >= 1.
ZeroSumCheck validate_zero_sum(const GameDefinition& game, int samples,
                               std::uint64_t seed);

// Max over sampled profiles and Group-1 pairs (i, j) of
// |u_i(s) - u_j(s with s_i and s_j swapped)|. Zero (to rounding) for games
// whose Group-1 players are genuinely interchangeable. When `pair` is
// given, only that pair is probed.
double validate_group1_symmetry(
    const GameDefinition& game, int samples, std::uint64_t seed,
    std::optional<std::pair<int, int>> pair = std::nullopt);

// Seeded uniform draw from the game's strategy box.
Profile random_profile(const GameDefinition& game, SplitMix64& rng);

}  // namespace zsg
