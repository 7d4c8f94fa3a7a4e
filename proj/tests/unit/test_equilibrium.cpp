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

#include <doctest.h>

#include "zsg/cournot.hpp"
#include "zsg/rng.hpp"

using namespace zsg;

namespace {

GameDefinition one_alien_game() {
  return build_game(CournotParams(10.0, {1, 1, 1, 2}));
}

GameDefinition symmetric_game() {
  return build_game(CournotParams(10.0, {1, 1, 1, 1}));
}

GameDefinition two_alien_game() {
  return build_game(CournotParams(10.0, {1, 1, 2, 2}));
}

// one-alien parameter draw with every relevant optimum strictly interior
CournotParams interior_one_alien_draw(SplitMix64& rng) {
  for (;;) {
    const double a = rng.uniform(5.0, 12.0);
    const double c = rng.uniform(0.05, a / 6.0);
    const double cd = rng.uniform(0.05, a / 6.0);
    const CournotParams p(a, {c, c, c, cd});
    const auto nash = nash_closed_form(p);
    bool interior = true;
    for (double xi : nash) {
      interior = interior && xi >= 0.05 && xi <= a - 0.05;
    }
    const double mm = maximin_closed_form(p, Firm::A);
    interior = interior && mm >= 0.05 && mm <= a - 0.05;
    if (interior) return p;
  }
}

}  // namespace

TEST_CASE("best_response") {
  SUBCASE("symmetric instance") {
    const GameDefinition g = symmetric_game();
    const OptResult r = best_response(g, 0, Profile{2.0, 2.25, 2.25, 2.25});
    CHECK(std::abs(r.arg - 2.25) <= 1e-6);
  }
  SUBCASE("alien instance") {
    const GameDefinition g = one_alien_game();
    const OptResult r = best_response(g, 3, Profile{2.375, 2.375, 2.375, 1.0});
    CHECK(std::abs(r.arg - 1.625) <= 1e-6);
  }
  SUBCASE("index and profile validation") {
    const GameDefinition g = symmetric_game();
    CHECK_THROWS_AS(best_response(g, 9, Profile{2, 2, 2, 2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(best_response(g, 0, Profile{2, 2, 2, 12.0}),
                    std::domain_error);
  }
}

TEST_CASE("solve_nash_symmetric") {
  SUBCASE("symmetric costs settle at the all-equal equilibrium") {
    const SymmetricEquilibrium eq = solve_nash_symmetric(symmetric_game());
    CHECK(eq.converged);
    CHECK(std::abs(eq.group1_strategy - 2.25) <= 1e-5);
    CHECK(std::abs(eq.alien_strategy - 2.25) <= 1e-5);
    CHECK(std::abs(eq.group1_payoff) <= 1e-8);
  }
  SUBCASE("one-alien costs settle at the closed-form equilibrium") {
    const GameDefinition g = one_alien_game();
    const SymmetricEquilibrium eq = solve_nash_symmetric(g);
    CHECK(eq.converged);
    CHECK(std::abs(eq.group1_strategy - 2.375) <= 1e-5);
    CHECK(std::abs(eq.alien_strategy - 1.625) <= 1e-5);
    CHECK(eq.residual <= 1e-5);
    CHECK(eq.group1_payoff == doctest::Approx(29.0 / 48.0).epsilon(1e-7));
    CHECK(eq.alien_payoff == doctest::Approx(-1.8125).epsilon(1e-7));
    // zero-sum ties the alien payoff to the common Group-1 payoff
    CHECK(std::abs(eq.alien_payoff + 3.0 * eq.group1_payoff) <= 1e-8);

    // converged means nobody can improve, in value or in argument
    const Profile p = eq.profile(g.n);
    for (int i = 0; i < g.n; ++i) {
      const OptResult br = best_response(g, i, p);
      CHECK(std::abs(br.value - g.payoffs[i](p)) <= 1e-6);
      CHECK(std::abs(br.arg - p[i]) <= 1e-5);
    }
  }
  SUBCASE("two aliens: the symmetric iteration rests, but firm C deviates") {
    const SymmetricEquilibrium eq = solve_nash_symmetric(two_alien_game());
    CHECK_FALSE(eq.converged);
    CHECK(eq.residual > 0.1);
    CHECK(std::abs(eq.group1_strategy - 2.375) <= 1e-4);
    CHECK(std::abs(eq.alien_strategy - 1.625) <= 1e-4);
  }
  SUBCASE("argument validation") {
    const GameDefinition g = symmetric_game();
    NashOptions bad;
    bad.damping = 0.0;
    CHECK_THROWS_AS(solve_nash_symmetric(g, 2.0, 2.0, bad),
                    std::invalid_argument);
    bad.damping = 1.5;
    CHECK_THROWS_AS(solve_nash_symmetric(g, 2.0, 2.0, bad),
                    std::invalid_argument);
    CHECK_THROWS_AS(solve_nash_symmetric(g, -1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(solve_nash_symmetric(g, 2.0, 11.0), std::domain_error);
  }
  SUBCASE("undamped iteration is also accepted") {
    NashOptions opt;
    opt.damping = 1.0;
    opt.max_iter = 2000;
    const SymmetricEquilibrium eq =
        solve_nash_symmetric(one_alien_game(), 2.0, 2.0, opt);
    // damping 1 may oscillate; if it converges it must hit the same point
    if (eq.converged) {
      CHECK(std::abs(eq.group1_strategy - 2.375) <= 1e-4);
    }
  }
}

TEST_CASE("symmetric_maximin_map") {
  const GameDefinition g = one_alien_game();
  // For this family the map is constant in the pinning
  CHECK(std::abs(symmetric_maximin_map(g, 1.0) - 2.375) <= 1e-5);
  CHECK(std::abs(symmetric_maximin_map(g, 2.375) - 2.375) <= 1e-5);
  CHECK_THROWS_AS(symmetric_maximin_map(g, -0.5), std::domain_error);
}

TEST_CASE("find_symmetric_fixed_point") {
  SUBCASE("one-alien reference instance") {
    const FixedPointResult fp = find_symmetric_fixed_point(one_alien_game());
    CHECK(std::abs(fp.s - 2.375) <= 1e-5);
    CHECK(fp.residual <= 1e-6);
    CHECK_FALSE(fp.at_boundary);
  }
  SUBCASE("symmetric instance") {
    const FixedPointResult fp = find_symmetric_fixed_point(symmetric_game());
    CHECK(std::abs(fp.s - 2.25) <= 1e-5);
  }
  SUBCASE("clipped interval pushes the fixed point to the boundary") {
    const CournotParams p(10.0, {1, 1, 1, 2});
    std::vector<PayoffFn> payoffs;
    for (int i = 0; i < 4; ++i) {
      payoffs.push_back([p, i](std::span<const double> x) {
        return relative_profit(p, static_cast<Firm>(i), x);
      });
    }
    const GameDefinition clipped(4, Interval(0.0, 1.0), Interval(0.0, 10.0),
                                 std::move(payoffs), "clipped", true);
    const FixedPointResult fp = find_symmetric_fixed_point(clipped);
    CHECK(fp.at_boundary);
    CHECK(std::abs(fp.s - 1.0) <= 1e-4);
  }
  SUBCASE("argument validation") {
    CHECK_THROWS_AS(find_symmetric_fixed_point(symmetric_game(), 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(find_symmetric_fixed_point(symmetric_game(), 1e-6, 0),
                    std::invalid_argument);
  }
}

TEST_CASE("construct_nash_from_fixed_point") {
  SUBCASE("one-alien reference instance") {
    const ConstructedNash built =
        construct_nash_details(one_alien_game(), 2.375);
    CHECK(std::abs(built.eq.alien_strategy - 1.625) <= 1e-5);
    CHECK(built.agreement_gap <= 1e-7);
    CHECK(built.eq.residual <= 1e-5);
    CHECK(built.eq.converged);
  }
  SUBCASE("symmetric instance lands on the all-equal profile") {
    const SymmetricEquilibrium eq =
        construct_nash_from_fixed_point(symmetric_game(), 2.25);
    CHECK(std::abs(eq.group1_strategy - 2.25) <= 1e-6);
    CHECK(std::abs(eq.alien_strategy - 2.25) <= 1e-5);
    CHECK(eq.residual <= 1e-5);
  }
  SUBCASE("s~ must lie in the Group-1 interval") {
    CHECK_THROWS_AS(construct_nash_from_fixed_point(symmetric_game(), -1.0),
                    std::domain_error);
  }
}

TEST_CASE("verify_theorem1") {
  SUBCASE("one alien: all four checks pass at the solved equilibrium") {
    const GameDefinition g = one_alien_game();
    const SymmetricEquilibrium eq = solve_nash_symmetric(g);
    REQUIRE(eq.converged);
    const TheoremReport r = verify_theorem1(g, eq, 1e-5);
    CHECK(r.pass);
    REQUIRE(r.entries.size() == 4);
    for (const CheckEntry& e : r.entries) {
      CAPTURE(e.name);
      CHECK(e.pass);
    }
  }
  SUBCASE("two aliens: the maximin output misses the Nash output by 1/8") {
    const GameDefinition g = two_alien_game();
    // the would-be equilibrium under the one-alien framing: firms A and B
    // at their true Nash output, firm D at its true Nash output
    SymmetricEquilibrium claimed;
    claimed.group1_strategy = 2.5;
    claimed.alien_strategy = 1.75;
    claimed.converged = true;
    const TheoremReport r = verify_theorem1(g, claimed, 1e-5);
    CHECK_FALSE(r.pass);
    REQUIRE(r.entries.size() == 4);
    CHECK(r.entries[1].name == "maximin_arg_equals_group1_strategy");
    CHECK_FALSE(r.entries[1].pass);
    CHECK(r.entries[1].gap == doctest::Approx(0.125).epsilon(1e-3));
  }
  SUBCASE("requires a converged equilibrium") {
    SymmetricEquilibrium eq;
    eq.converged = false;
    CHECK_THROWS_AS(verify_theorem1(one_alien_game(), eq, 1e-5),
                    std::invalid_argument);
  }
}

TEST_CASE("counterexample regression: maximin vs Nash gap is exactly 1/8") {
  const GameDefinition g = two_alien_game();
  const double nash_a = nash_closed_form(CournotParams(10.0, {1, 1, 2, 2}))[0];
  const OptResult mm = maximin(g, 0, nash_a);
  CHECK(std::abs(std::abs(mm.arg - nash_a) - 0.125) <= 1e-4);
}

TEST_CASE("verify_equivalence") {
  SUBCASE("one-alien reference instance passes both directions") {
    const EquivalenceOutcome out = verify_equivalence(one_alien_game());
    CHECK(out.pass);
    CHECK(out.nash_implies_sion.pass);
    CHECK(out.sion_implies_nash.pass);
    CHECK(std::abs(out.nash_route.group1_strategy -
                   out.fixed_point_route.group1_strategy) <= 1e-5);
    CHECK(std::abs(out.nash_route.alien_strategy -
                   out.fixed_point_route.alien_strategy) <= 1e-5);
  }
  SUBCASE("randomized one-alien family") {
    SplitMix64 rng(17);
    for (int draw = 0; draw < 20; ++draw) {
      const CournotParams p = interior_one_alien_draw(rng);
      CAPTURE(p.a);
      CAPTURE(p.c[0]);
      CAPTURE(p.c[3]);
      const EquivalenceOutcome out = verify_equivalence(build_game(p));
      CHECK(out.pass);
      CHECK(std::abs(out.nash_route.group1_strategy -
                     out.fixed_point_route.group1_strategy) <= 1e-5);
      CHECK(std::abs(out.nash_route.alien_strategy -
                     out.fixed_point_route.alien_strategy) <= 1e-5);
    }
  }
  SUBCASE("fully symmetric family gives the all-equal profile") {
    const EquivalenceOutcome out = verify_equivalence(symmetric_game());
    CHECK(out.pass);
    CHECK(std::abs(out.nash_route.group1_strategy -
                   out.nash_route.alien_strategy) <= 1e-5);
  }
  SUBCASE("two aliens: the equivalence fails and is reported, not thrown") {
    const EquivalenceOutcome out = verify_equivalence(two_alien_game());
    CHECK_FALSE(out.pass);
    CHECK_FALSE(out.nash_implies_sion.pass);
    CHECK_FALSE(out.diagnostics.empty());
    // the fixed-point construction completes but is not a Nash equilibrium
    CHECK(out.fixed_point_found);
    CHECK_FALSE(out.fixed_point_route.converged);
  }
}
