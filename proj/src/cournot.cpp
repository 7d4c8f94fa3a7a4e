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

#include "zsg/cournot.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace zsg {

namespace {

void require_group1_firm(Firm firm) {
  if (firm == Firm::D) {
    throw std::invalid_argument(
        "maximin/minimax closed forms are defined for firms A..C against "
        "the alien D");
  }
}

}  // namespace

CournotParams::CournotParams(double a_, std::array<double, 4> c_)
    : a(a_), c(c_) {
  if (!std::isfinite(a) || !(a > 0.0)) {
    throw std::invalid_argument("CournotParams: demand intercept must be > 0");
  }
  for (double ci : c) {
    if (!std::isfinite(ci) || ci < 0.0 || ci >= a) {
      throw std::invalid_argument(
          "CournotParams: marginal costs must satisfy 0 <= c < a");
    }
  }
}

double relative_profit(const CournotParams& p, Firm firm,
                       std::span<const double> x) {
  const double price = p.a - (x[0] + x[1] + x[2] + x[3]);
  double absolute[4];
  double total = 0.0;
  for (int j = 0; j < 4; ++j) {
    absolute[j] = (price - p.c[j]) * x[j];
    total += absolute[j];
  }
  const int i = static_cast<int>(firm);
  // own profit minus the average of the rivals': written via the shared
  // total so the four payoffs cancel to rounding when summed
  return absolute[i] - (total - absolute[i]) / 3.0;
}

double own_output_foc(const CournotParams& p, Firm firm,
                      std::span<const double> x) {
  const int i = static_cast<int>(firm);
  const double rivals = x[0] + x[1] + x[2] + x[3] - x[i];
  return p.a - 2.0 * x[i] - rivals - p.c[i] + rivals / 3.0;
}

GameDefinition build_game(const CournotParams& p) {
  std::vector<PayoffFn> payoffs;
  payoffs.reserve(4);
  for (int i = 0; i < 4; ++i) {
    payoffs.push_back([p, i](std::span<const double> x) {
      return relative_profit(p, static_cast<Firm>(i), x);
    });
  }

  std::ostringstream label;
  label << "cournot4(a=" << p.a << ", c=[" << p.c[0] << ", " << p.c[1] << ", "
        << p.c[2] << ", " << p.c[3] << "])";

  const bool symmetric = p.c[0] == p.c[1] && p.c[1] == p.c[2];
  return GameDefinition(4, Interval(0.0, p.a), Interval(0.0, p.a),
                        std::move(payoffs), label.str(), symmetric);
}

std::array<double, 4> nash_closed_form(const CournotParams& p) {
  const double sum = p.c[0] + p.c[1] + p.c[2] + p.c[3];
  std::array<double, 4> x{};
  for (int i = 0; i < 4; ++i) {
    x[i] = (2.0 * p.a - 5.0 * p.c[i] + (sum - p.c[i])) / 8.0;
  }
  return x;
}

bool nonneg_equilibrium(const CournotParams& p) {
  for (double xi : nash_closed_form(p)) {
    if (xi < 0.0) return false;
  }
  return true;
}

double maximin_closed_form(const CournotParams& p, Firm firm) {
  require_group1_firm(firm);
  return (2.0 * p.a - 3.0 * p.c[static_cast<int>(firm)] + p.c[3]) / 8.0;
}

double minimax_closed_form(const CournotParams& p, Firm firm, double x_other1,
                           double x_other2) {
  require_group1_firm(firm);
  return (6.0 * p.a - 3.0 * p.c[static_cast<int>(firm)] - 3.0 * p.c[3] -
          8.0 * x_other1 - 8.0 * x_other2) /
         8.0;
}

CoincidenceReport one_alien_coincidence(const CournotParams& p) {
  if (!(p.c[0] == p.c[1] && p.c[1] == p.c[2])) {
    throw std::invalid_argument(
        "one_alien_coincidence: requires c_A == c_B == c_C exactly");
  }

  CoincidenceReport r{};
  r.nash = nash_closed_form(p);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    r.maximin_abc[i] = maximin_closed_form(p, static_cast<Firm>(i));
    worst = std::max(worst, std::abs(r.maximin_abc[i] - r.nash[i]));
  }
  const double pin = r.maximin_abc[0];
  r.minimax_d_at_equal_pinning = minimax_closed_form(p, Firm::A, pin, pin);
  worst = std::max(worst, std::abs(r.minimax_d_at_equal_pinning - r.nash[3]));

  r.max_deviation = worst;
  r.pass = worst <= 1e-12;
  return r;
}

CounterexampleReport two_alien_counterexample(const CournotParams& p) {
  if (!(p.c[0] == p.c[1] && p.c[2] == p.c[3] && p.c[0] != p.c[3])) {
    throw std::invalid_argument(
        "two_alien_counterexample: requires c_A == c_B, c_C == c_D and "
        "c_A != c_D exactly");
  }

  CounterexampleReport r{};
  r.nash_group1 = (p.a - 2.0 * p.c[0] + p.c[3]) / 4.0;
  r.maximin_group1 = (2.0 * p.a - 3.0 * p.c[0] + p.c[3]) / 8.0;
  r.gap = std::abs(r.nash_group1 - r.maximin_group1);
  r.equivalence_fails = r.gap > 0.0;
  return r;
}

}  // namespace zsg
