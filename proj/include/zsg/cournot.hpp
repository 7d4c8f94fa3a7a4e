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

// Four-firm relative-profit Cournot oligopoly: firms A..D sell a homogeneous
// good with linear inverse demand a - (x_A+x_B+x_C+x_D), constant marginal
// costs and zero fixed cost, and each maximizes its profit minus the average
// of its rivals' profits. Relative profits sum to zero identically, making
// this the analytic reference game: every optimum below has a closed form,
// which the numerical modules are checked against.

#include <array>
#include <span>

#include "zsg/game.hpp"

namespace zsg {

enum class Firm { A = 0, B = 1, C = 2, D = 3 };

struct CournotParams {
  double a;                  // demand intercept
  std::array<double, 4> c;   // marginal costs c_A..c_D

  CournotParams(double a_, std::array<double, 4> c_);
};

// Relative profit of one firm at an output profile (no interval checks).
double relative_profit(const CournotParams& p, Firm firm,
                       std::span<const double> x);

// d(relative profit of firm)/d(own output), the first-order condition lhs.
double own_output_foc(const CournotParams& p, Firm firm,
                      std::span<const double> x);

// 4-player GameDefinition over [0, a] per firm, alien = firm D. Declared
// Group-1 symmetric iff c_A = c_B = c_C.
GameDefinition build_game(const CournotParams& p);

// Closed-form Nash outputs: x_A = (2a - 5c_A + c_B + c_C + c_D)/8 and
// cyclic permutations.
std::array<double, 4> nash_closed_form(const CournotParams& p);

// True iff every closed-form Nash output is nonnegative.
bool nonneg_equilibrium(const CournotParams& p);

// argmax over own output of the min over x_D of the firm's relative profit:
// (2a - 3c_firm + c_D)/8, independent of the other two firms' outputs.
// Defined for firms A..C only (against the alien D).
double maximin_closed_form(const CournotParams& p, Firm firm);

// argmin over x_D of the max over the firm's own output of its relative
// profit, given the other two Group-1 outputs:
// (6a - 3c_firm - 3c_D - 8x_other1 - 8x_other2)/8. Firms A..C only.
double minimax_closed_form(const CournotParams& p, Firm firm, double x_other1,
                           double x_other2);

// With c_A = c_B = c_C, the maximin outputs of A, B, C coincide with their
// Nash outputs, and the minimax output of D under equal pinning at that
// value coincides with D's Nash output.
struct CoincidenceReport {
  std::array<double, 3> maximin_abc;
  std::array<double, 4> nash;
  double minimax_d_at_equal_pinning;
  double max_deviation;  // worst |closed form - closed form| across checks
  bool pass;
};

// Requires c_A == c_B == c_C exactly.
CoincidenceReport one_alien_coincidence(const CournotParams& p);

// With two symmetric pairs (c_A = c_B, c_C = c_D, c_A != c_D) the maximin
// output of firm A differs from its Nash output by |c_D - c_A|/8 > 0:
// the one-alien coincidence does not extend to two aliens.
struct CounterexampleReport {
  double nash_group1;     // (a - 2c_A + c_D)/4
  double maximin_group1;  // (2a - 3c_A + c_D)/8
  double gap;             // |nash_group1 - maximin_group1|
  bool equivalence_fails; // gap > 0
};

// Requires c_A == c_B, c_C == c_D, c_A != c_D exactly.
CounterexampleReport two_alien_counterexample(const CournotParams& p);

}  // namespace zsg
