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

#include "zsg/equilibrium.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "zsg/errors.hpp"

namespace zsg {

namespace {

double residual_over_all_players(const GameDefinition& game,
                                 std::span<const double> profile,
                                 double xtol) {
  double worst = 0.0;
  for (int i = 0; i < game.n; ++i) {
    const OptResult br = best_response(game, i, profile, xtol);
    worst = std::max(worst, std::abs(br.arg - profile[i]));
  }
  return worst;
}

}  // namespace

OptResult best_response(const GameDefinition& game, int i,
                        std::span<const double> s, double xtol) {
  check_player_index(game, i);
  check_profile(game, s);

  Profile scratch(s.begin(), s.end());
  const auto& u = game.payoffs[i];
  const Interval& iv = game.interval_of(i);
  auto objective = [&](double si) {
    scratch[i] = si;
    return u(scratch);
  };
  return maximize_unimodal(objective, iv.lo, iv.hi, xtol);
}

SymmetricEquilibrium solve_nash_symmetric(const GameDefinition& game,
                                          double init_group1,
                                          double init_alien,
                                          const NashOptions& opt) {
  if (!(opt.damping > 0.0 && opt.damping <= 1.0)) {
    throw std::invalid_argument(
        "solve_nash_symmetric: damping must lie in (0, 1]");
  }
  if (!(opt.move_tol > 0.0) || opt.max_iter < 1) {
    throw std::invalid_argument(
        "solve_nash_symmetric: need move_tol > 0 and max_iter >= 1");
  }
  if (!game.group1_interval.contains(init_group1)) {
    throw std::domain_error(
        "solve_nash_symmetric: Group-1 start outside its interval");
  }
  if (!game.alien_interval.contains(init_alien)) {
    throw std::domain_error(
        "solve_nash_symmetric: alien start outside its interval");
  }

  const int alien = game.alien();
  double g = init_group1;
  double d = init_alien;
  Profile s(game.n, g);
  s[alien] = d;

  bool settled = false;
  int it = 0;
  while (it < opt.max_iter) {
    ++it;
    for (int j = 0; j < alien; ++j) s[j] = g;
    s[alien] = d;
    // simultaneous update: both responses taken at the current point
    const double brg = best_response(game, 0, s, opt.xtol).arg;
    const double brd = best_response(game, alien, s, opt.xtol).arg;
    const double ng = (1.0 - opt.damping) * g + opt.damping * brg;
    const double nd = (1.0 - opt.damping) * d + opt.damping * brd;
    const double moved = std::max(std::abs(ng - g), std::abs(nd - d));
    g = ng;
    d = nd;
    if (moved < opt.move_tol) {
      settled = true;
      break;
    }
  }

  SymmetricEquilibrium eq;
  eq.group1_strategy = g;
  eq.alien_strategy = d;
  eq.iterations = it;

  Profile final_profile(game.n, g);
  final_profile[alien] = d;
  eq.group1_payoff = game.payoffs[0](final_profile);
  eq.alien_payoff = game.payoffs[alien](final_profile);
  eq.residual = residual_over_all_players(game, final_profile, opt.xtol);
  eq.converged = settled && eq.residual <= opt.residual_tol;
  return eq;
}

SymmetricEquilibrium solve_nash_symmetric(const GameDefinition& game,
                                          const NashOptions& opt) {
  return solve_nash_symmetric(game, game.group1_interval.midpoint(),
                              game.alien_interval.midpoint(), opt);
}

double symmetric_maximin_map(const GameDefinition& game, double s,
                             const MinimaxOptions& opt) {
  if (!game.group1_interval.contains(s)) {
    throw std::domain_error(
        "symmetric_maximin_map: value outside the Group-1 interval");
  }
  return maximin(game, 0, s, opt).arg;
}

FixedPointResult find_symmetric_fixed_point(const GameDefinition& game,
                                            double tol, int max_iter,
                                            const MinimaxOptions& opt) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument(
        "find_symmetric_fixed_point: tol must be positive");
  }
  if (max_iter < 1) {
    throw std::invalid_argument(
        "find_symmetric_fixed_point: max_iter must be >= 1");
  }

  const Interval& iv = game.group1_interval;
  int evals = 0;
  auto displacement = [&](double s) {
    ++evals;
    return symmetric_maximin_map(game, s, opt) - s;
  };

  auto finish = [&](double s, double g) {
    FixedPointResult r;
    r.s = s;
    r.residual = std::abs(g);
    r.iterations = evals;
    const double edge = opt.effective_outer();
    r.at_boundary = (s - iv.lo) <= edge || (iv.hi - s) <= edge;
    return r;
  };

  double a = iv.lo, b = iv.hi;
  double ga = displacement(a);
  double gb = displacement(b);
  if (std::abs(ga) <= tol) return finish(a, ga);
  if (std::abs(gb) <= tol) return finish(b, gb);

  if ((ga > 0.0) != (gb > 0.0)) {
    // bisection on map(s) - s
    while (evals < max_iter) {
      const double m = 0.5 * (a + b);
      const double gm = displacement(m);
      if (std::abs(gm) <= tol) return finish(m, gm);
      if ((gm > 0.0) == (ga > 0.0)) {
        a = m;
        ga = gm;
      } else {
        b = m;
        gb = gm;
      }
      if (b - a <= 1e-13 * iv.width()) break;
    }
    std::ostringstream os;
    os << "find_symmetric_fixed_point: bisection exhausted after " << evals
       << " map evaluations; last bracket [" << a << ", " << b
       << "] with displacements " << ga << ", " << gb;
    throw SolverFault(os.str());
  }

  // No sign change (degenerate sampling of the endpoints): damp the map
  // from the midpoint and hope it contracts.
  double s = iv.midpoint();
  double g = displacement(s);
  while (evals < max_iter) {
    if (std::abs(g) <= tol) return finish(s, g);
    s = iv.clamp(s + 0.5 * g);
    g = displacement(s);
  }
  std::ostringstream os;
  os << "find_symmetric_fixed_point: damped iteration exhausted after "
     << evals << " map evaluations; stopped at s = " << s
     << " with displacement " << g;
  throw SolverFault(os.str());
}

ConstructedNash construct_nash_details(const GameDefinition& game,
                                       double s_tilde,
                                       const ConstructOptions& opt) {
  if (!game.group1_interval.contains(s_tilde)) {
    throw std::domain_error(
        "construct_nash_from_fixed_point: s~ outside the Group-1 interval");
  }

  const int alien = game.alien();
  Profile s(game.n, s_tilde);

  auto alien_payoff_of = [&](double sn) {
    s[alien] = sn;
    return game.payoffs[alien](s);
  };
  auto group1_payoff_of = [&](double sn) {
    s[alien] = sn;
    return game.payoffs[0](s);
  };

  const Interval& iv = game.alien_interval;
  ConstructedNash out;
  out.alien_argmax =
      maximize_unimodal(alien_payoff_of, iv.lo, iv.hi, opt.xtol).arg;
  out.group1_argmin =
      minimize_unimodal(group1_payoff_of, iv.lo, iv.hi, opt.xtol).arg;
  out.agreement_gap = std::abs(out.alien_argmax - out.group1_argmin);
  if (out.agreement_gap > opt.agree_tol) {
    std::ostringstream os;
    os << "construct_nash_from_fixed_point: argmax_{s_n} u_n = "
       << out.alien_argmax << " and argmin_{s_n} u_i = " << out.group1_argmin
       << " disagree by " << out.agreement_gap
       << "; zero-sum identity or Group-1 symmetry is violated";
    throw SolverFault(os.str());
  }

  SymmetricEquilibrium& eq = out.eq;
  eq.group1_strategy = s_tilde;
  eq.alien_strategy = out.alien_argmax;

  Profile p(game.n, s_tilde);
  p[alien] = eq.alien_strategy;
  eq.group1_payoff = game.payoffs[0](p);
  eq.alien_payoff = game.payoffs[alien](p);
  eq.residual = residual_over_all_players(game, p, opt.xtol);
  eq.converged = eq.residual <= opt.residual_tol;
  eq.iterations = 0;
  return out;
}

SymmetricEquilibrium construct_nash_from_fixed_point(
    const GameDefinition& game, double s_tilde, const ConstructOptions& opt) {
  return construct_nash_details(game, s_tilde, opt).eq;
}

void TheoremReport::add(std::string name, double lhs, double rhs,
                        double tol) {
  CheckEntry e;
  e.name = std::move(name);
  e.lhs = lhs;
  e.rhs = rhs;
  e.gap = std::abs(lhs - rhs);
  e.pass = e.gap <= tol;
  entries.push_back(std::move(e));
  pass = true;
  for (const CheckEntry& entry : entries) pass = pass && entry.pass;
}

TheoremReport verify_theorem1(const GameDefinition& game,
                              const SymmetricEquilibrium& eq, double tol,
                              const MinimaxOptions& opt) {
  if (!eq.converged) {
    throw std::invalid_argument(
        "verify_theorem1: requires a converged equilibrium");
  }

  const OptResult lower = maximin(game, 0, eq.group1_strategy, opt);
  const OptResult upper = minimax(game, 0, eq.group1_strategy, opt);
  const Profile p = eq.profile(game.n);
  const double eq_payoff = game.payoffs[0](p);

  TheoremReport r{TheoremDirection::NashImpliesSion, {}, false};
  r.add("maximin_value_equals_minimax_value", lower.value, upper.value, tol);
  r.add("maximin_arg_equals_group1_strategy", lower.arg, eq.group1_strategy,
        tol);
  r.add("minimax_arg_equals_alien_strategy", upper.arg, eq.alien_strategy,
        tol);
  r.add("equilibrium_payoff_equals_common_value", eq_payoff, lower.value,
        tol);
  return r;
}

EquivalenceOutcome verify_equivalence(const GameDefinition& game,
                                      const VerifyOptions& opt) {
  EquivalenceOutcome out;
  out.nash_route = solve_nash_symmetric(game, opt.nash);

  // Direction 1: a (numerical) Nash equilibrium implies the pairwise
  // maximin/minimax equalities at the equilibrium pinning.
  if (out.nash_route.converged) {
    out.nash_implies_sion =
        verify_theorem1(game, out.nash_route, opt.tol, opt.minimax);
  } else {
    out.nash_implies_sion.direction = TheoremDirection::NashImpliesSion;
    out.nash_implies_sion.add("nash_route_converged", out.nash_route.residual,
                              0.0, opt.nash.residual_tol);
    std::ostringstream os;
    os << "best-response route did not converge (residual "
       << out.nash_route.residual << " after " << out.nash_route.iterations
       << " iterations); ";
    out.diagnostics += os.str();
  }

  // Direction 2: the fixed point of the maximin map yields a profile that
  // must itself be a Nash equilibrium and agree with the solver's.
  TheoremReport& t2 = out.sion_implies_nash;
  t2.direction = TheoremDirection::SionImpliesNash;
  try {
    out.fixed_point = find_symmetric_fixed_point(
        game, opt.fixed_point_tol, opt.fixed_point_max_iter, opt.minimax);
    const ConstructedNash built =
        construct_nash_details(game, out.fixed_point.s, opt.construct);
    out.fixed_point_found = true;
    out.fixed_point_route = built.eq;
    out.alien_argmax = built.alien_argmax;
    out.group1_argmin = built.group1_argmin;

    t2.add("fixed_point_residual", out.fixed_point.residual, 0.0,
           opt.fixed_point_tol);
    t2.add("alien_argmax_equals_group1_argmin", built.alien_argmax,
           built.group1_argmin, opt.construct.agree_tol);
    t2.add("construction_residual", built.eq.residual, 0.0,
           opt.construct.residual_tol);
    t2.add("route_agreement_group1", out.nash_route.group1_strategy,
           built.eq.group1_strategy, opt.tol);
    t2.add("route_agreement_alien", out.nash_route.alien_strategy,
           built.eq.alien_strategy, opt.tol);
  } catch (const SolverFault& fault) {
    t2.add("fixed_point_route_completed", 1.0, 0.0, 0.5);  // recorded failure
    out.diagnostics += fault.what();
  } catch (const EvalFault& fault) {
    t2.add("fixed_point_route_completed", 1.0, 0.0, 0.5);
    out.diagnostics += fault.what();
  }

  out.pass = out.nash_implies_sion.pass && out.sion_implies_nash.pass;
  return out;
}

}  // namespace zsg
