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

// End-to-end acceptance suite. Each numbered criterion prints one PASS/FAIL
// line; the process exits nonzero if any fail.
//
//   zsg_acceptance [path-to-zsg-cli [configs-dir]]
//
// When the CLI path and configs directory are given (as the ctest target
// does), the determinism criterion additionally runs the real binary twice
// and compares the persisted reports byte for byte.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zsg/cournot.hpp"
#include "zsg/equilibrium.hpp"
#include "zsg/expr.hpp"
#include "zsg/game.hpp"
#include "zsg/minimax.hpp"
#include "zsg/report.hpp"
#include "zsg/rng.hpp"
#include "zsg/scalar_opt.hpp"

using namespace zsg;

namespace {

int g_failures = 0;

void report_line(int id, const std::string& name, bool pass,
                 const std::string& detail) {
  if (!pass) ++g_failures;
  std::printf("%s  criterion %2d  %s%s%s\n", pass ? "PASS" : "FAIL", id,
              name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// ------------------------------------------------------------- sampling

CournotParams interior_one_alien_draw(SplitMix64& rng) {
  for (;;) {
    const double a = rng.uniform(5.0, 12.0);
    const double c = rng.uniform(0.05, a / 6.0);
    const double cd = rng.uniform(0.05, a / 6.0);
    const CournotParams p(a, {c, c, c, cd});
    bool interior = true;
    for (double xi : nash_closed_form(p)) {
      interior = interior && xi >= 0.05 && xi <= a - 0.05;
    }
    const double mm = maximin_closed_form(p, Firm::A);
    interior = interior && mm >= 0.05 && mm <= a - 0.05;
    if (interior) return p;
  }
}

// --------------------------------------------- grid oracle cross-checks

// golden-section argopt vs the 5001-point grid oracle, on the same slice
bool br_matches_grid(const GameDefinition& game, int i,
                     std::span<const double> profile, double* worst) {
  const Interval& iv = game.interval_of(i);
  Profile scratch(profile.begin(), profile.end());
  const auto& u = game.payoffs[i];
  auto slice = [&](double x) {
    scratch[i] = x;
    return u(scratch);
  };
  const double fine = maximize_unimodal(slice, iv.lo, iv.hi, 1e-9).arg;
  const double coarse = grid_argopt(slice, iv.lo, iv.hi, 5001, OptMode::Max).arg;
  const double dev = std::abs(fine - coarse);
  *worst = std::max(*worst, dev);
  return dev <= iv.width() / 5000.0 + 1e-9;
}

// outer nested argopts vs an outer grid (inner loops stay golden-section)
bool nested_matches_grid(const GameDefinition& game, int i, double pinned,
                         double* worst) {
  const MinimaxOptions opt;
  const Interval& own = game.group1_interval;
  const Interval& alien_iv = game.alien_interval;
  const int alien = game.alien();
  const auto& u = game.payoffs[i];
  bool ok = true;

  {
    Profile s(game.n, pinned);
    auto outer = [&](double si) {
      s[i] = si;
      auto inner = [&](double sn) {
        s[alien] = sn;
        return u(s);
      };
      return minimize_unimodal(inner, alien_iv.lo, alien_iv.hi,
                               opt.xtol_inner)
          .value;
    };
    const double fine = maximin(game, i, pinned, opt).arg;
    const double coarse =
        grid_argopt(outer, own.lo, own.hi, 5001, OptMode::Max).arg;
    const double dev = std::abs(fine - coarse);
    *worst = std::max(*worst, dev);
    ok = ok && dev <= own.width() / 5000.0 + opt.xtol_outer;
  }
  {
    Profile s(game.n, pinned);
    auto outer = [&](double sn) {
      s[alien] = sn;
      auto inner = [&](double si) {
        s[i] = si;
        return u(s);
      };
      return maximize_unimodal(inner, own.lo, own.hi, opt.xtol_inner).value;
    };
    const double fine = minimax(game, i, pinned, opt).arg;
    const double coarse =
        grid_argopt(outer, alien_iv.lo, alien_iv.hi, 5001, OptMode::Min).arg;
    const double dev = std::abs(fine - coarse);
    *worst = std::max(*worst, dev);
    ok = ok && dev <= alien_iv.width() / 5000.0 + opt.xtol_outer;
  }
  return ok;
}

// ------------------------------------------------------ expression fuzz

std::string random_expr(SplitMix64& rng, int n, int depth) {
  const auto leaf = [&]() -> std::string {
    if (rng.below(2) == 0) return "s" + std::to_string(1 + rng.below(n));
    const double v = static_cast<double>(rng.below(4000)) / 16.0;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
  };
  if (depth <= 0) return leaf();
  switch (rng.below(7)) {
    case 0: return "(" + random_expr(rng, n, depth - 1) + " + " +
                   random_expr(rng, n, depth - 1) + ")";
    case 1: return "(" + random_expr(rng, n, depth - 1) + " - " +
                   random_expr(rng, n, depth - 1) + ")";
    case 2: return "(" + random_expr(rng, n, depth - 1) + " * " +
                   random_expr(rng, n, depth - 1) + ")";
    case 3: return "(" + random_expr(rng, n, depth - 1) + " / " +
                   random_expr(rng, n, depth - 1) + ")";
    case 4: return "(-" + random_expr(rng, n, depth - 1) + ")";
    case 5: return "(" + random_expr(rng, n, depth - 1) + " ^ " +
                   std::to_string(rng.below(4)) + ")";
    default: return leaf();
  }
}

std::optional<double> try_eval(const Expr& e, std::span<const double> s) {
  try {
    return e.evaluate(s, {});
  } catch (const EvalFault&) {
    return std::nullopt;
  }
}

// ----------------------------------------------------------- CLI runner

struct CliRun {
  int exit_code = -1;
  std::string stdout_text;
};

std::optional<CliRun> run_cli(const std::string& cli,
                              const std::string& args,
                              const std::filesystem::path& capture) {
  const std::string command =
      "'" + cli + "' " + args + " > '" + capture.string() + "' 2>/dev/null";
  const int status = std::system(command.c_str());
  if (status == -1) return std::nullopt;
  CliRun run;
#if defined(WEXITSTATUS)
  run.exit_code = WEXITSTATUS(status);
#else
  run.exit_code = (status >> 8) & 0xff;
#endif
  std::ifstream in(capture);
  std::stringstream buffer;
  buffer << in.rdbuf();
  run.stdout_text = buffer.str();
  return run;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli_path = argc > 1 ? argv[1] : "";
  const std::string configs_dir = argc > 2 ? argv[2] : "";

  const CournotParams ref_params(10.0, {1.0, 1.0, 1.0, 2.0});
  const GameDefinition ref_game = build_game(ref_params);
  const CournotParams two_alien_params(10.0, {1.0, 1.0, 2.0, 2.0});
  const GameDefinition two_alien_game = build_game(two_alien_params);

  // ---------------------------------------------------------------- 1
  const SymmetricEquilibrium ref_eq = solve_nash_symmetric(ref_game);
  {
    const double expected[4] = {2.375, 2.375, 2.375, 1.625};
    const Profile p = ref_eq.profile(4);
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
      worst = std::max(worst, std::abs(p[i] - expected[i]));
    }
    report_line(1, "closed-form Nash reproduction (2.375^3, 1.625)",
                ref_eq.converged && worst <= 1e-5,
                "max componentwise deviation " + fmt(worst));
  }

  // ---------------------------------------------------------------- 2
  {
    const double pinned = ref_eq.group1_strategy;
    const double expected_arg =
        (2.0 * ref_params.a - 3.0 * ref_params.c[0] + ref_params.c[3]) / 8.0;
    bool ok = true;
    double worst_gap = 0.0, worst_arg = 0.0;
    for (int i = 0; i < 3; ++i) {
      const PairMinimaxReport r = check_sion(ref_game, i, pinned, 1e-6);
      worst_gap = std::max(worst_gap, std::abs(r.gap));
      worst_arg = std::max(worst_arg, std::abs(r.maximin_arg - expected_arg));
      ok = ok && std::abs(r.gap) <= 1e-6 &&
           std::abs(r.maximin_arg - expected_arg) <= 1e-5;
    }
    report_line(2, "maximin/minimax equality per Group-1 player (one alien)",
                ok,
                "worst value gap " + fmt(worst_gap) + ", worst arg dev " +
                    fmt(worst_arg));
  }

  // ------------------------------------------------------------ 3 & 4
  std::vector<CournotParams> draws;
  {
    SplitMix64 rng(20260808);
    for (int k = 0; k < 50; ++k) draws.push_back(interior_one_alien_draw(rng));
  }
  std::vector<SymmetricEquilibrium> draw_eqs;
  std::vector<SymmetricEquilibrium> draw_fp_eqs;
  {
    bool ok3 = true;
    int failed_draw = -1;
    for (std::size_t k = 0; k < draws.size(); ++k) {
      const CournotParams& p = draws[k];
      const GameDefinition g = build_game(p);
      const SymmetricEquilibrium eq = solve_nash_symmetric(g);
      draw_eqs.push_back(eq);
      if (!eq.converged) {
        ok3 = false;
        failed_draw = static_cast<int>(k);
        continue;
      }
      bool draw_ok = verify_theorem1(g, eq, 1e-5).pass;

      // the numerical solution and nested argopts must also reproduce the
      // closed forms under the same sampling
      const auto nash = nash_closed_form(p);
      draw_ok = draw_ok &&
                std::abs(eq.group1_strategy - nash[0]) <= 1e-5 &&
                std::abs(eq.alien_strategy - nash[3]) <= 1e-5;
      const double mm_arg = maximin(g, 0, eq.group1_strategy).arg;
      const double mx_arg = minimax(g, 0, eq.group1_strategy).arg;
      draw_ok = draw_ok &&
                std::abs(mm_arg - maximin_closed_form(p, Firm::A)) <= 1e-5 &&
                std::abs(mx_arg -
                         (2.0 * p.a - 5.0 * p.c[3] + 3.0 * p.c[0]) / 8.0) <=
                    1e-5;
      if (!draw_ok) {
        ok3 = false;
        failed_draw = static_cast<int>(k);
      }
    }
    report_line(3, "theorem direction 1 on 50 seeded one-alien draws", ok3,
                ok3 ? "all checks passed on every draw, closed forms matched"
                    : "first failing draw " + std::to_string(failed_draw));
  }
  {
    bool ok4 = true;
    double worst = 0.0;
    for (std::size_t k = 0; k < draws.size(); ++k) {
      const GameDefinition g = build_game(draws[k]);
      const FixedPointResult fp = find_symmetric_fixed_point(g);
      const SymmetricEquilibrium via_fp =
          construct_nash_from_fixed_point(g, fp.s);
      draw_fp_eqs.push_back(via_fp);
      const double dev = std::max(
          std::abs(via_fp.group1_strategy - draw_eqs[k].group1_strategy),
          std::abs(via_fp.alien_strategy - draw_eqs[k].alien_strategy));
      worst = std::max(worst, dev);
      ok4 = ok4 && via_fp.converged && dev <= 1e-5;
    }
    report_line(4, "theorem direction 2: fixed-point route equals Nash route",
                ok4, "worst componentwise route deviation " + fmt(worst));
  }

  // ---------------------------------------------------------------- 5
  {
    const CounterexampleReport cx = two_alien_counterexample(two_alien_params);
    const bool closed_ok = std::abs(cx.nash_group1 - 2.5) <= 1e-12 &&
                           std::abs(cx.maximin_group1 - 2.375) <= 1e-12 &&
                           std::abs(cx.gap - 0.125) <= 1e-4 &&
                           cx.equivalence_fails;

    Json cfg_doc;
    cfg_doc["game"]["cournot4"] = {{"a", 10.0}, {"c", {1.0, 1.0, 2.0, 2.0}}};
    const RunConfig cfg = parse_config(cfg_doc);
    const RunReport verify_report = run_command("verify", cfg);
    const bool verify_fails =
        !verify_report.checks_passed && exit_code_for(verify_report) == 1;

    report_line(5, "two-alien counterexample: gap 0.125 and verify failure",
                closed_ok && verify_fails,
                "gap " + fmt(cx.gap) + ", verify checks_passed=" +
                    (verify_report.checks_passed ? "true" : "false"));
  }

  // ---------------------------------------------------------------- 6
  {
    SplitMix64 rng(606060);
    int violations = 0;
    double worst = -1e300;
    for (int probe = 0; probe < 500; ++probe) {
      const double a = rng.uniform(4.0, 12.0);
      std::array<double, 4> c{};
      for (double& ci : c) ci = rng.uniform(0.0, a / 5.0);
      const GameDefinition g = build_game(CournotParams(a, c));
      const int i = static_cast<int>(rng.below(3));
      const double pinned = rng.uniform(0.0, a);
      const OptResult lower = maximin(g, i, pinned);
      const OptResult upper = minimax(g, i, pinned);
      const double excess = lower.value - upper.value;
      worst = std::max(worst, excess);
      if (excess > 1e-9) ++violations;
    }
    report_line(6, "weak duality across 500 randomized (game, pinning) probes",
                violations == 0,
                "violations " + std::to_string(violations) +
                    ", worst maximin-minimax excess " + fmt(worst));
  }

  // ---------------------------------------------------------------- 7
  {
    SplitMix64 rng(707070);
    double worst = 0.0;
    for (int draw = 0; draw < 20; ++draw) {
      const double a = rng.uniform(4.0, 10.0);
      std::array<double, 4> c{};
      for (double& ci : c) ci = rng.uniform(0.0, a / 5.0);
      const GameDefinition g = build_game(CournotParams(a, c));
      const ZeroSumCheck check = validate_zero_sum(g, 1000, rng.next());
      worst = std::max(worst, check.max_residual);
    }
    report_line(7, "zero-sum residual over 20 draws x 1000 profiles",
                worst <= 1e-12, "max |sum of payoffs| " + fmt(worst));
  }

  // ---------------------------------------------------------------- 8
  {
    bool ok = true;
    double worst = 0.0;

    // reference game: best responses at the equilibrium, the inner
    // alien slice, and both nested outer argopts
    {
      const Profile p = ref_eq.profile(4);
      for (int i = 0; i < 4; ++i) {
        ok = br_matches_grid(ref_game, i, p, &worst) && ok;
      }
      Profile s(4, ref_eq.group1_strategy);
      s[3] = 0.0;
      auto inner_slice = [&](double sn) {
        s[3] = sn;
        return ref_game.payoffs[0](s);
      };
      const double fine =
          inner_min_over_alien(ref_game, 0, ref_eq.group1_strategy,
                               ref_eq.group1_strategy)
              .arg;
      const double coarse =
          grid_argopt(inner_slice, 0.0, 10.0, 5001, OptMode::Min).arg;
      worst = std::max(worst, std::abs(fine - coarse));
      ok = ok && std::abs(fine - coarse) <= 10.0 / 5000.0 + 1e-9;
      ok = nested_matches_grid(ref_game, 0, ref_eq.group1_strategy, &worst) &&
           ok;
    }

    // two-alien game (criterion 5's optimizations)
    ok = nested_matches_grid(two_alien_game, 0, 2.5, &worst) && ok;

    // every draw used by criteria 3 and 4
    for (std::size_t k = 0; k < draws.size(); ++k) {
      const GameDefinition g = build_game(draws[k]);
      const Profile p = draw_eqs[k].profile(4);
      for (int i = 0; i < 4; ++i) {
        ok = br_matches_grid(g, i, p, &worst) && ok;
      }
      ok = nested_matches_grid(g, 0, draw_eqs[k].group1_strategy, &worst) &&
           ok;
    }

    report_line(8, "golden-section argopts agree with the 5001-point grid",
                ok, "worst deviation " + fmt(worst));
  }

  // ---------------------------------------------------------------- 9
  {
    SplitMix64 rng(909090);
    bool ok = true;
    std::string first_failure;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
      const std::string src = random_expr(rng, 3, 1 + trial % 5);
      const Expr original = Expr::parse(src, 3, {});
      const std::string printed = original.to_string();
      const Expr reparsed = Expr::parse(printed, 3, {});
      if (reparsed.to_string() != printed) {
        ok = false;
        first_failure = "print not idempotent for: " + src;
        break;
      }
      for (int k = 0; k < 100; ++k) {
        const double s[] = {rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0),
                            rng.uniform(-5.0, 5.0)};
        if (try_eval(original, s) != try_eval(reparsed, s)) {
          ok = false;
          first_failure = "evaluation mismatch for: " + src;
          break;
        }
      }
    }

    int crashes = 0;
    for (int trial = 0; trial < 10000; ++trial) {
      const std::size_t len = rng.below(80);
      std::string junk(len, '\0');
      for (std::size_t i = 0; i < len; ++i) {
        junk[i] = static_cast<char>(rng.below(256));
      }
      try {
        (void)Expr::parse(junk, 4, {"a"});
      } catch (const ParseError&) {
        // error values are the expected outcome
      } catch (...) {
        ++crashes;
      }
    }
    ok = ok && crashes == 0;
    report_line(9, "payoff-dsl roundtrip x1000 and 10k-input fuzz", ok,
                ok ? "no mismatches, no crashes" : first_failure);
  }

  // --------------------------------------------------------------- 10
  {
    Json cfg_doc;
    cfg_doc["game"]["cournot4"] = {{"a", 10.0}, {"c", {1.0, 1.0, 1.0, 2.0}}};
    cfg_doc["seed"] = 42;
    const RunConfig cfg = parse_config(cfg_doc);
    RunReport first = run_command("verify", cfg);
    RunReport second = run_command("verify", cfg);
    first.doc.erase("timing_ms");
    second.doc.erase("timing_ms");
    bool ok = render_report(first, ReportFormat::Json) ==
              render_report(second, ReportFormat::Json);
    std::string detail = ok ? "in-process reports byte-identical"
                            : "in-process reports differ";

    if (ok && !cli_path.empty() && !configs_dir.empty()) {
      namespace fs = std::filesystem;
      const fs::path work = fs::temp_directory_path() / "zsg-acceptance";
      fs::create_directories(work);
      const std::string args = "verify --config '" + configs_dir +
                               "/cournot_one_alien.json' --format json";
      const auto run1 = run_cli(cli_path, args, work / "verify1.json");
      const auto run2 = run_cli(cli_path, args, work / "verify2.json");
      if (!run1 || !run2) {
        ok = false;
        detail = "could not spawn the CLI";
      } else {
        Json a = Json::parse(run1->stdout_text);
        Json b = Json::parse(run2->stdout_text);
        a.erase("timing_ms");
        b.erase("timing_ms");
        ok = a == b && run1->exit_code == 0 && run2->exit_code == 0;
        detail = ok ? "CLI runs byte-identical (timing aside), exit 0"
                    : "CLI runs differ or exited nonzero (" +
                          std::to_string(run1->exit_code) + ")";
      }
    }
    report_line(10, "repeated verify runs are byte-identical", ok, detail);
  }

  if (g_failures > 0) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all 10 criteria passed\n");
  return 0;
}
