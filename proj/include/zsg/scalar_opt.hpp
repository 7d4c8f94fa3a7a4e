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

// One-dimensional optimization of unimodal functions on compact intervals.
// Golden-section search throughout: the payoffs this library handles are
// only assumed quasi-concave/quasi-convex, not differentiable, so no
// derivative-based method applies. A uniform-grid argopt serves as the
// independent cross-check oracle for every nested optimization built on top.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "zsg/errors.hpp"

namespace zsg {

struct OptResult {
  double arg = 0.0;
  double value = 0.0;
  bool at_boundary = false;  // arg within xtol of an interval endpoint
  int iterations = 0;        // bracket reductions (grid: evaluations)
  bool plateau = false;      // objective numerically flat where sampled
};

enum class OptMode { Max, Min };

namespace detail {

inline constexpr double kGoldenConjugate = 0.6180339887498949;  // (sqrt(5)-1)/2
inline constexpr double kPlateauRel = 1e-13;
inline constexpr int kMaxGoldenIterations = 256;

template <class F>
double checked_eval(F& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    throw EvalFault("objective evaluated to a non-finite value", {x});
  }
  return v;
}

}  // namespace detail

// Golden-section maximization of a unimodal f over [lo, hi]. For strictly
// unimodal f the returned arg is within xtol of the true maximizer. The
// plateau flag is judged once the bracket first shrinks to 1% of the
// interval: if the objective varies by less than 1e-13*(1+|value|) there,
// the optimum is not unique to working precision and the midpoint returned
// is only one representative of it.
template <class F>
OptResult maximize_unimodal(F&& f, double lo, double hi, double xtol = 1e-9) {
  if (!(lo < hi)) {
    throw std::invalid_argument("maximize_unimodal: requires lo < hi");
  }
  if (!(xtol > 0.0)) {
    throw std::invalid_argument("maximize_unimodal: xtol must be positive");
  }

  const double rho = detail::kGoldenConjugate;
  double a = lo, b = hi;
  double x1 = b - rho * (b - a);
  double x2 = a + rho * (b - a);
  double f1 = detail::checked_eval(f, x1);
  double f2 = detail::checked_eval(f, x2);

  const double snap_width = 0.01 * (hi - lo);
  bool snapped = false;
  bool plateau = false;
  int iterations = 0;

  auto flat_within = [&](double va, double vb, double vm) {
    const double vmax = std::max({va, vb, vm});
    const double vmin = std::min({va, vb, vm});
    return (vmax - vmin) < detail::kPlateauRel * (1.0 + std::abs(vm));
  };

  while (b - a > xtol && iterations < detail::kMaxGoldenIterations) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - rho * (b - a);
      f1 = detail::checked_eval(f, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + rho * (b - a);
      f2 = detail::checked_eval(f, x2);
    }
    ++iterations;
    if (!snapped && (b - a) <= snap_width) {
      plateau = flat_within(f1, f2, detail::checked_eval(f, 0.5 * (a + b)));
      snapped = true;
    }
  }

  OptResult r;
  r.arg = 0.5 * (a + b);
  r.value = detail::checked_eval(f, r.arg);
  r.plateau = snapped ? plateau : flat_within(f1, f2, r.value);
  r.iterations = iterations;
  r.at_boundary = (r.arg - lo) <= xtol || (hi - r.arg) <= xtol;
  return r;
}

// Mirror of maximize_unimodal: runs it on -f and negates the value back,
// so maximize_unimodal(f) and minimize_unimodal(-f) return identical args.
template <class F>
OptResult minimize_unimodal(F&& f, double lo, double hi, double xtol = 1e-9) {
  auto neg = [&f](double x) { return -f(x); };
  OptResult r = maximize_unimodal(neg, lo, hi, xtol);
  r.value = -r.value;
  return r;
}

// Brute-force argopt on a uniform grid of `points` samples including both
// endpoints. Ties break toward the lowest x. Independent of the
// golden-section path; used as the cross-check oracle.
template <class F>
OptResult grid_argopt(F&& f, double lo, double hi, int points, OptMode mode) {
  if (!(lo < hi)) {
    throw std::invalid_argument("grid_argopt: requires lo < hi");
  }
  if (points < 2) {
    throw std::invalid_argument("grid_argopt: points must be >= 2");
  }

  const double h = (hi - lo) / static_cast<double>(points - 1);
  double best_x = lo;
  double best_v = 0.0;
  double vmax = -std::numeric_limits<double>::infinity();
  double vmin = std::numeric_limits<double>::infinity();
  int best_k = 0;
  for (int k = 0; k < points; ++k) {
    const double x = (k == points - 1) ? hi : lo + h * static_cast<double>(k);
    const double v = detail::checked_eval(f, x);
    vmax = std::max(vmax, v);
    vmin = std::min(vmin, v);
    const bool better =
        (k == 0) || (mode == OptMode::Max ? v > best_v : v < best_v);
    if (better) {
      best_x = x;
      best_v = v;
      best_k = k;
    }
  }

  OptResult r;
  r.arg = best_x;
  r.value = best_v;
  r.at_boundary = (best_k == 0) || (best_k == points - 1);
  r.iterations = points;
  r.plateau = (vmax - vmin) < detail::kPlateauRel * (1.0 + std::abs(best_v));
  return r;
}

// True iff the grid-sampled values rise then fall, with weak monotone
// segments allowed (monotone sequences count as degenerate unimodal).
// Used to warn when the quasi-concavity assumptions appear violated.
template <class F>
bool unimodality_probe(F&& f, double lo, double hi, int points) {
  if (!(lo < hi)) {
    throw std::invalid_argument("unimodality_probe: requires lo < hi");
  }
  if (points < 4) {
    throw std::invalid_argument("unimodality_probe: points must be >= 4");
  }

  const double h = (hi - lo) / static_cast<double>(points - 1);
  std::vector<double> v(points);
  for (int k = 0; k < points; ++k) {
    const double x = (k == points - 1) ? hi : lo + h * static_cast<double>(k);
    v[k] = f(x);
    if (!std::isfinite(v[k])) return false;
  }

  bool falling = false;
  for (int k = 0; k + 1 < points; ++k) {
    const double eps =
        1e-12 * (1.0 + std::max(std::abs(v[k]), std::abs(v[k + 1])));
    if (v[k + 1] > v[k] + eps) {
      if (falling) return false;
    } else if (v[k + 1] < v[k] - eps) {
      falling = true;
    }
  }
  return true;
}

}  // namespace zsg
