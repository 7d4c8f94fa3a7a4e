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

// Nash equilibria that are symmetric in Group 1, found two independent ways:
//
//   1. damped best-response iteration on the pair (common Group-1 strategy,
//      alien strategy);
//   2. a fixed point s~ of the symmetric maximin map s -> argmax_{s_i}
//      min_{s_n} u_i(s,..,s_i,..,s,s_n), completed by the alien's best
//      response s^_n = argmax_{s_n} u_n(s~,..,s~,s_n).
//
// For a zero-sum game with one alien the two routes must agree; the
// verify_* operations check that numerically, in both directions.

#include <string>
#include <vector>

#include "zsg/game.hpp"
#include "zsg/minimax.hpp"
#include "zsg/scalar_opt.hpp"

namespace zsg {

struct SymmetricEquilibrium {
  double group1_strategy = 0.0;  // common strategy of players 0..n-2
  double alien_strategy = 0.0;
  double group1_payoff = 0.0;    // payoff of a representative Group-1 player
  double alien_payoff = 0.0;     // = -(n-1) * group1_payoff when symmetric
  double residual = 0.0;  // max_i |best_response(i).arg - profile[i]|
  int iterations = 0;
  bool converged = false;

  Profile profile(int n) const {
    Profile s(n, group1_strategy);
    s[n - 1] = alien_strategy;
    return s;
  }
};

struct NashOptions {
  double damping = 0.5;       // in (0, 1]; 1 = undamped best response
  double move_tol = 1e-7;     // stop when both updates move less than this
  int max_iter = 500;
  double residual_tol = 1e-5; // final best-response residual for "converged"
  double xtol = 1e-9;         // best-response searches
};

// argmax over player i's interval of u_i with the other coordinates of s
// held fixed.
OptResult best_response(const GameDefinition& game, int i,
                        std::span<const double> s, double xtol = 1e-9);

// Damped simultaneous best-response iteration constrained to profiles
// (g, ..., g, d). Non-convergence is reported, not thrown: the result
// carries converged = false when the iteration fails to settle or the
// final all-player best-response residual exceeds residual_tol.
SymmetricEquilibrium solve_nash_symmetric(const GameDefinition& game,
                                          double init_group1,
                                          double init_alien,
                                          const NashOptions& opt = {});

// Midpoint-initialized convenience overload.
SymmetricEquilibrium solve_nash_symmetric(const GameDefinition& game,
                                          const NashOptions& opt = {});

// The map s -> maximin(game, representative player, pinned = s).arg.
double symmetric_maximin_map(const GameDefinition& game, double s,
                             const MinimaxOptions& opt = {});

struct FixedPointResult {
  double s = 0.0;         // s~ with |map(s~) - s~| <= tol
  double residual = 0.0;  // |map(s) - s| at the returned point
  int iterations = 0;     // map evaluations spent
  bool at_boundary = false;
};

// Locates s~ with |symmetric_maximin_map(s) - s| <= tol. The map sends the
// Group-1 interval into itself, so map(lo)-lo >= 0 >= map(hi)-hi and
// bisection applies; if the sign structure is degenerate a damped iteration
// from the midpoint is tried instead. Throws SolverFault with the last
// bracket when neither locates a fixed point within max_iter.
FixedPointResult find_symmetric_fixed_point(const GameDefinition& game,
                                            double tol = 1e-6,
                                            int max_iter = 200,
                                            const MinimaxOptions& opt = {});

struct ConstructOptions {
  double agree_tol = 1e-7;     // the two s^_n computations must agree
  double residual_tol = 1e-5;  // best-response residual for "converged"
  double xtol = 1e-9;
};

// Theorem-2 construction: completes the fixed point s~ with the alien
// strategy s^_n, computed BOTH as argmax_{s_n} u_n(s~,...,s~,s_n) and as
// argmin_{s_n} u_i(s~,...,s~,s_n). The zero-sum identity plus Group-1
// symmetry force the two to coincide; disagreement beyond agree_tol throws
// SolverFault. The returned equilibrium's residual comes from best
// responses of ALL players at (s~, ..., s~, s^_n).
SymmetricEquilibrium construct_nash_from_fixed_point(
    const GameDefinition& game, double s_tilde,
    const ConstructOptions& opt = {});

// Same, keeping the intermediate values for reporting.
struct ConstructedNash {
  SymmetricEquilibrium eq;
  double alien_argmax = 0.0;    // argmax_{s_n} u_n
  double group1_argmin = 0.0;   // argmin_{s_n} u_i
  double agreement_gap = 0.0;   // |difference|
};
ConstructedNash construct_nash_details(const GameDefinition& game,
                                       double s_tilde,
                                       const ConstructOptions& opt = {});

enum class TheoremDirection { NashImpliesSion, SionImpliesNash };

struct CheckEntry {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  bool pass = false;
};

struct TheoremReport {
  TheoremDirection direction;
  std::vector<CheckEntry> entries;
  bool pass = false;  // iff every entry passes

  void add(std::string name, double lhs, double rhs, double tol);
};

// With the other Group-1 players pinned at the equilibrium strategy, checks
// for a representative Group-1 player that (a) maximin and minimax values
// agree, (b) the maximin argument is the equilibrium Group-1 strategy,
// (c) the minimax argument is the equilibrium alien strategy, and (d) the
// equilibrium payoff equals the common value. Requires eq.converged.
TheoremReport verify_theorem1(const GameDefinition& game,
                              const SymmetricEquilibrium& eq,
                              double tol = 1e-5,
                              const MinimaxOptions& opt = {});

struct VerifyOptions {
  double tol = 1e-5;          // componentwise route agreement + theorem checks
  NashOptions nash;
  double fixed_point_tol = 1e-6;
  int fixed_point_max_iter = 200;
  ConstructOptions construct;
  MinimaxOptions minimax;
};

struct EquivalenceOutcome {
  SymmetricEquilibrium nash_route;
  bool fixed_point_found = false;
  FixedPointResult fixed_point;
  SymmetricEquilibrium fixed_point_route;
  double alien_argmax = 0.0;
  double group1_argmin = 0.0;
  TheoremReport nash_implies_sion{TheoremDirection::NashImpliesSion, {}, false};
  TheoremReport sion_implies_nash{TheoremDirection::SionImpliesNash, {}, false};
  bool pass = false;
  std::string diagnostics;  // populated when a route fails
};

// Runs both routes independently and checks that they agree componentwise
// within tol, bundling the theorem checks in each direction. A failing
// route marks the outcome failed with diagnostics instead of throwing.
EquivalenceOutcome verify_equivalence(const GameDefinition& game,
                                      const VerifyOptions& opt = {});

}  // namespace zsg
