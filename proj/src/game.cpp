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

#include "zsg/game.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace zsg {

GameDefinition::GameDefinition(int n_, Interval group1, Interval alien,
                               std::vector<PayoffFn> payoffs_,
                               std::string label_, bool group1_symmetric_)
    : n(n_),
      group1_interval(group1),
      alien_interval(alien),
      payoffs(std::move(payoffs_)),
      label(std::move(label_)),
      group1_symmetric(group1_symmetric_) {
  if (n < 3) {
    throw std::invalid_argument("GameDefinition: need n >= 3 players");
  }
  if (static_cast<int>(payoffs.size()) != n) {
    throw std::invalid_argument(
        "GameDefinition: payoff count must equal player count");
  }
  for (const auto& u : payoffs) {
    if (!u) throw std::invalid_argument("GameDefinition: empty payoff function");
  }
}

void check_player_index(const GameDefinition& game, int player) {
  if (player < 0 || player >= game.n) {
    std::ostringstream os;
    os << "player index " << player << " out of range [0, " << game.n << ")";
    throw std::invalid_argument(os.str());
  }
}

void check_profile(const GameDefinition& game, std::span<const double> s) {
  if (static_cast<int>(s.size()) != game.n) {
    std::ostringstream os;
    os << "profile has " << s.size() << " entries, game has " << game.n
       << " players";
    throw std::domain_error(os.str());
  }
  for (int i = 0; i < game.n; ++i) {
    const Interval& iv = game.interval_of(i);
    if (!std::isfinite(s[i]) || !iv.contains(s[i])) {
      std::ostringstream os;
      os << "strategy " << s[i] << " of player " << i << " outside ["
         << iv.lo << ", " << iv.hi << "]";
      throw std::domain_error(os.str());
    }
  }
}

double evaluate_payoff(const GameDefinition& game, int player,
                       std::span<const double> s) {
  check_player_index(game, player);
  check_profile(game, s);
  return game.payoffs[player](s);
}

Profile random_profile(const GameDefinition& game, SplitMix64& rng) {
  Profile s(game.n);
  for (int i = 0; i < game.n; ++i) {
    const Interval& iv = game.interval_of(i);
    s[i] = rng.uniform(iv.lo, iv.hi);
  }
  return s;
}

ZeroSumCheck validate_zero_sum(const GameDefinition& game, int samples,
                               std::uint64_t seed) {
  if (samples < 1) {
    throw std::invalid_argument("validate_zero_sum: samples must be >= 1");
  }
  SplitMix64 rng(seed);
  ZeroSumCheck check;
  for (int k = 0; k < samples; ++k) {
    Profile s = random_profile(game, rng);
    double sum = 0.0;
    for (int i = 0; i < game.n; ++i) sum += game.payoffs[i](s);
    if (std::abs(sum) >= check.max_residual) {
      check.max_residual = std::abs(sum);
      check.worst_profile = s;
    }
  }
  return check;
}

double validate_group1_symmetry(const GameDefinition& game, int samples,
                                std::uint64_t seed,
                                std::optional<std::pair<int, int>> pair) {
  if (samples < 1) {
    throw std::invalid_argument(
        "validate_group1_symmetry: samples must be >= 1");
  }
  if (pair) {
    if (!game.in_group1(pair->first) || !game.in_group1(pair->second) ||
        pair->first == pair->second) {
      throw std::invalid_argument(
          "validate_group1_symmetry: pair must be two distinct Group-1 "
          "players");
    }
  }

  SplitMix64 rng(seed);
  const int g = game.n - 1;  // Group-1 size
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    Profile s = random_profile(game, rng);
    int i, j;
    if (pair) {
      i = pair->first;
      j = pair->second;
    } else {
      i = static_cast<int>(rng.below(static_cast<std::uint64_t>(g)));
      j = static_cast<int>(rng.below(static_cast<std::uint64_t>(g - 1)));
      if (j >= i) ++j;
    }
    Profile swapped = s;
    std::swap(swapped[i], swapped[j]);
    const double diff =
        std::abs(game.payoffs[i](s) - game.payoffs[j](swapped));
    worst = std::max(worst, diff);
  }
  return worst;
}

}  // namespace zsg
