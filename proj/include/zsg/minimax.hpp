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

// Nested maximin / minimax of a Group-1 player's payoff against the alien,
// with the remaining Group-1 players pinned. Only the (Group-1 player,
// alien) pairing is computed: the analogous equalities for the alien's own
// payoff, or between two Group-1 players, are intentionally not asserted
// anywhere — they need not hold.

#include <span>

#include "zsg/game.hpp"
#include "zsg/scalar_opt.hpp"

namespace zsg {

struct MinimaxOptions {
  double xtol_inner = 1e-9;  // inner scalar optimizations
  double xtol_outer = 1e-7;  // outer loop of the nested optimization

  // Inner loops must be at least 100x tighter than outer loops, or inner
  // noise destroys the outer problem's unimodality.
  double effective_outer() const {
    return xtol_outer < 100.0 * xtol_inner ? 100.0 * xtol_inner : xtol_outer;
  }
};

enum class SionStatus { Holds, Fails, InconclusiveBoundary };

struct PairMinimaxReport {
  int player = 0;        // Group-1 player i
  double pinned = 0.0;   // common strategy of the other Group-1 players
  double maximin_arg = 0.0;
  double maximin_value = 0.0;  // max_{s_i} min_{s_n} u_i
  double minimax_arg = 0.0;
  double minimax_value = 0.0;  // min_{s_n} max_{s_i} u_i
  double gap = 0.0;            // minimax_value - maximin_value
  bool sion_holds = false;     // |gap| <= value_tol
  SionStatus status = SionStatus::Fails;  // downgraded on boundary argopts
  bool any_boundary = false;
  bool any_plateau = false;
};

// min over the alien's strategy of u_i, with Group-1 players != i at
// s_pinned and player i at s_i. i must be in Group 1; strategies must lie
// in the Group-1 interval.
OptResult inner_min_over_alien(const GameDefinition& game, int i,
                               double s_pinned, double s_i,
                               const MinimaxOptions& opt = {});

// Per-player pinning variant: group1_values holds one strategy per Group-1
// player; entry i is replaced by s_i.
OptResult inner_min_over_alien(const GameDefinition& game, int i,
                               std::span<const double> group1_values,
                               double s_i, const MinimaxOptions& opt = {});

// max_{s_i} min_{s_n} u_i with the other Group-1 players pinned.
OptResult maximin(const GameDefinition& game, int i, double s_pinned,
                  const MinimaxOptions& opt = {});
OptResult maximin(const GameDefinition& game, int i,
                  std::span<const double> group1_values,
                  const MinimaxOptions& opt = {});

// min_{s_n} max_{s_i} u_i with the other Group-1 players pinned.
OptResult minimax(const GameDefinition& game, int i, double s_pinned,
                  const MinimaxOptions& opt = {});
OptResult minimax(const GameDefinition& game, int i,
                  std::span<const double> group1_values,
                  const MinimaxOptions& opt = {});

// Computes both sides and assembles the equality report. value_tol > 0.
// Boundary argopts downgrade the verdict to InconclusiveBoundary: when an
// optimum sits on the interval edge the interior-uniqueness premise behind
// the equality is suspect.
PairMinimaxReport check_sion(const GameDefinition& game, int i,
                             double s_pinned, double value_tol,
                             const MinimaxOptions& opt = {});

}  // namespace zsg
