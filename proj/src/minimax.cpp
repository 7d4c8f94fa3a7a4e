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

#include "zsg/minimax.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace zsg {

namespace {

void check_group1_player(const GameDefinition& game, int i) {
  if (!game.in_group1(i)) {
    std::ostringstream os;
    os << "player " << i << " is not in Group 1 (players 0.." << game.n - 2
       << ")";
    throw std::invalid_argument(os.str());
  }
}

void check_group1_value(const GameDefinition& game, double s,
                        const char* what) {
  if (!std::isfinite(s) || !game.group1_interval.contains(s)) {
    std::ostringstream os;
    os << what << " " << s << " outside Group-1 interval ["
       << game.group1_interval.lo << ", " << game.group1_interval.hi << "]";
    throw std::domain_error(os.str());
  }
}

// Profile scratch shared by one nested optimization. Group-1 entries are
// fixed up front; only coordinates i and n-1 vary during the search.
Profile pinned_profile(const GameDefinition& game,
                       std::span<const double> group1_values) {
  if (static_cast<int>(group1_values.size()) != game.n - 1) {
    throw std::invalid_argument(
        "pinned Group-1 strategies must have n-1 entries");
  }
  Profile s(game.n, 0.0);
  for (int j = 0; j + 1 < game.n; ++j) {
    check_group1_value(game, group1_values[j], "pinned strategy");
    s[j] = group1_values[j];
  }
  return s;
}

}  // namespace

OptResult inner_min_over_alien(const GameDefinition& game, int i,
                               std::span<const double> group1_values,
                               double s_i, const MinimaxOptions& opt) {
  check_group1_player(game, i);
  check_group1_value(game, s_i, "strategy");

  Profile s = pinned_profile(game, group1_values);
  s[i] = s_i;
  const auto& u = game.payoffs[i];
  const int alien = game.alien();
  auto objective = [&](double sn) {
    s[alien] = sn;
    return u(s);
  };
  return minimize_unimodal(objective, game.alien_interval.lo,
                           game.alien_interval.hi, opt.xtol_inner);
}

OptResult inner_min_over_alien(const GameDefinition& game, int i,
                               double s_pinned, double s_i,
                               const MinimaxOptions& opt) {
  check_group1_value(game, s_pinned, "pinned strategy");
  const std::vector<double> pinned(game.n - 1, s_pinned);
  return inner_min_over_alien(game, i, pinned, s_i, opt);
}

OptResult maximin(const GameDefinition& game, int i,
                  std::span<const double> group1_values,
                  const MinimaxOptions& opt) {
  check_group1_player(game, i);

  Profile s = pinned_profile(game, group1_values);
  const auto& u = game.payoffs[i];
  const int alien = game.alien();
  const Interval& alien_iv = game.alien_interval;

  auto value_of_inner_min = [&](double si) {
    s[i] = si;
    auto objective = [&](double sn) {
      s[alien] = sn;
      return u(s);
    };
    return minimize_unimodal(objective, alien_iv.lo, alien_iv.hi,
                             opt.xtol_inner)
        .value;
  };
  return maximize_unimodal(value_of_inner_min, game.group1_interval.lo,
                           game.group1_interval.hi, opt.effective_outer());
}

OptResult maximin(const GameDefinition& game, int i, double s_pinned,
                  const MinimaxOptions& opt) {
  check_group1_value(game, s_pinned, "pinned strategy");
  const std::vector<double> pinned(game.n - 1, s_pinned);
  return maximin(game, i, pinned, opt);
}

OptResult minimax(const GameDefinition& game, int i,
                  std::span<const double> group1_values,
                  const MinimaxOptions& opt) {
  check_group1_player(game, i);

  Profile s = pinned_profile(game, group1_values);
  const auto& u = game.payoffs[i];
  const int alien = game.alien();
  const Interval& own_iv = game.group1_interval;

  auto value_of_inner_max = [&](double sn) {
    s[alien] = sn;
    auto objective = [&](double si) {
      s[i] = si;
      return u(s);
    };
    return maximize_unimodal(objective, own_iv.lo, own_iv.hi, opt.xtol_inner)
        .value;
  };
  return minimize_unimodal(value_of_inner_max, game.alien_interval.lo,
                           game.alien_interval.hi, opt.effective_outer());
}

OptResult minimax(const GameDefinition& game, int i, double s_pinned,
                  const MinimaxOptions& opt) {
  check_group1_value(game, s_pinned, "pinned strategy");
  const std::vector<double> pinned(game.n - 1, s_pinned);
  return minimax(game, i, pinned, opt);
}

PairMinimaxReport check_sion(const GameDefinition& game, int i,
                             double s_pinned, double value_tol,
                             const MinimaxOptions& opt) {
  if (!(value_tol > 0.0)) {
    throw std::invalid_argument("check_sion: value_tol must be positive");
  }

  const OptResult lower = maximin(game, i, s_pinned, opt);
  const OptResult upper = minimax(game, i, s_pinned, opt);

  PairMinimaxReport r;
  r.player = i;
  r.pinned = s_pinned;
  r.maximin_arg = lower.arg;
  r.maximin_value = lower.value;
  r.minimax_arg = upper.arg;
  r.minimax_value = upper.value;
  r.gap = upper.value - lower.value;
  r.sion_holds = std::abs(r.gap) <= value_tol;
  r.any_boundary = lower.at_boundary || upper.at_boundary;
  r.any_plateau = lower.plateau || upper.plateau;
  if (r.any_boundary) {
    r.status = SionStatus::InconclusiveBoundary;
  } else {
    r.status = r.sion_holds ? SionStatus::Holds : SionStatus::Fails;
  }
  return r;
}

}  // namespace zsg
