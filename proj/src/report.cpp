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

#include "zsg/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "zsg/equilibrium.hpp"
#include "zsg/errors.hpp"
#include "zsg/expr.hpp"
#include "zsg/scalar_opt.hpp"
#include "zsg/version.hpp"

namespace zsg {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError("config field '" + path + "': " + what);
}

void require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
}

void require_known_keys(const Json& j, const std::string& path,
                        std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* a : allowed) {
      if (item.key() == a) {
        known = true;
        break;
      }
    }
    if (!known) {
      fail(path.empty() ? item.key() : path + "." + item.key(),
           "unknown field");
    }
  }
}

double as_number(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::pair<double, double> as_interval(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) {
    fail(path, "expected an array [lo, hi]");
  }
  const double lo = as_number(j[0], path + "[0]");
  const double hi = as_number(j[1], path + "[1]");
  if (!(lo < hi)) fail(path, "interval requires lo < hi");
  return {lo, hi};
}

CournotParams parse_cournot(const Json& j) {
  require_object(j, "game.cournot4");
  require_known_keys(j, "game.cournot4", {"a", "c"});
  if (!j.contains("a")) fail("game.cournot4.a", "missing");
  if (!j.contains("c")) fail("game.cournot4.c", "missing");
  const double a = as_number(j.at("a"), "game.cournot4.a");
  const Json& c = j.at("c");
  if (!c.is_array() || c.size() != 4) {
    fail("game.cournot4.c", "expected an array of 4 marginal costs");
  }
  std::array<double, 4> costs{};
  for (int i = 0; i < 4; ++i) {
    costs[i] = as_number(c[i], "game.cournot4.c[" + std::to_string(i) + "]");
  }
  try {
    return CournotParams(a, costs);
  } catch (const std::invalid_argument& e) {
    fail("game.cournot4", e.what());
  }
}

CustomGameSpec parse_custom(const Json& j) {
  require_object(j, "game.custom");
  require_known_keys(j, "game.custom",
                     {"n", "group1_interval", "alien_interval", "payoffs",
                      "params", "label"});
  CustomGameSpec spec;
  if (!j.contains("n")) fail("game.custom.n", "missing");
  spec.n = as_int(j.at("n"), "game.custom.n");
  if (spec.n < 3) fail("game.custom.n", "need at least 3 players");

  if (!j.contains("group1_interval")) {
    fail("game.custom.group1_interval", "missing");
  }
  std::tie(spec.group1_lo, spec.group1_hi) =
      as_interval(j.at("group1_interval"), "game.custom.group1_interval");
  if (!j.contains("alien_interval")) {
    fail("game.custom.alien_interval", "missing");
  }
  std::tie(spec.alien_lo, spec.alien_hi) =
      as_interval(j.at("alien_interval"), "game.custom.alien_interval");

  if (!j.contains("payoffs")) fail("game.custom.payoffs", "missing");
  const Json& payoffs = j.at("payoffs");
  if (!payoffs.is_array() || static_cast<int>(payoffs.size()) != spec.n) {
    fail("game.custom.payoffs",
         "expected one payoff expression per player (" +
             std::to_string(spec.n) + ")");
  }
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    spec.payoffs.push_back(
        as_string(payoffs[i], "game.custom.payoffs[" + std::to_string(i) + "]"));
  }

  if (j.contains("params")) {
    const Json& params = j.at("params");
    require_object(params, "game.custom.params");
    for (const auto& item : params.items()) {
      spec.params[item.key()] =
          as_number(item.value(), "game.custom.params." + item.key());
    }
  }
  spec.label = j.contains("label")
                   ? as_string(j.at("label"), "game.custom.label")
                   : "custom(n=" + std::to_string(spec.n) + ")";
  return spec;
}

Json echo_of(const RunConfig& cfg) {
  Json game;
  if (cfg.cournot) {
    Json c;
    c["a"] = cfg.cournot->a;
    c["c"] = cfg.cournot->c;
    game["cournot4"] = c;
  } else {
    const CustomGameSpec& spec = *cfg.custom;
    Json c;
    c["n"] = spec.n;
    c["group1_interval"] = {spec.group1_lo, spec.group1_hi};
    c["alien_interval"] = {spec.alien_lo, spec.alien_hi};
    c["payoffs"] = spec.payoffs;
    c["params"] = spec.params;
    c["label"] = spec.label;
    game["custom"] = c;
  }

  Json echo;
  echo["game"] = game;
  echo["tolerances"] = {{"xtol", cfg.tolerances.xtol},
                        {"value_tol", cfg.tolerances.value_tol},
                        {"nash_tol", cfg.tolerances.nash_tol}};
  echo["seed"] = cfg.seed;
  Json options;
  if (cfg.options.pinned) options["pinned"] = *cfg.options.pinned;
  options["damping"] = cfg.options.damping;
  options["max_iter"] = cfg.options.max_iter;
  echo["options"] = options;
  return echo;
}

MinimaxOptions minimax_options(const RunConfig& cfg) {
  MinimaxOptions mm;
  mm.xtol_inner = cfg.tolerances.xtol;
  mm.xtol_outer = 100.0 * cfg.tolerances.xtol;
  return mm;
}

NashOptions nash_options(const RunConfig& cfg) {
  NashOptions n;
  n.damping = cfg.options.damping;
  n.max_iter = cfg.options.max_iter;
  n.move_tol = 0.01 * cfg.tolerances.nash_tol;
  n.residual_tol = cfg.tolerances.nash_tol;
  n.xtol = cfg.tolerances.xtol;
  return n;
}

VerifyOptions verify_options(const RunConfig& cfg) {
  VerifyOptions v;
  v.tol = cfg.tolerances.nash_tol;
  v.nash = nash_options(cfg);
  v.fixed_point_tol = 0.1 * cfg.tolerances.nash_tol;
  v.fixed_point_max_iter = cfg.options.max_iter;
  v.construct.agree_tol = 1e-7;
  v.construct.residual_tol = cfg.tolerances.nash_tol;
  v.construct.xtol = cfg.tolerances.xtol;
  v.minimax = minimax_options(cfg);
  return v;
}

Json equilibrium_to_json(const SymmetricEquilibrium& eq, int n) {
  Json j;
  j["group1_strategy"] = eq.group1_strategy;
  j["alien_strategy"] = eq.alien_strategy;
  j["group1_payoff"] = eq.group1_payoff;
  j["alien_payoff"] = eq.alien_payoff;
  j["residual"] = eq.residual;
  j["iterations"] = eq.iterations;
  j["converged"] = eq.converged;
  j["profile"] = eq.profile(n);
  return j;
}

Json theorem_to_json(const TheoremReport& r) {
  Json j;
  j["direction"] = r.direction == TheoremDirection::NashImpliesSion
                       ? "nash_implies_sion"
                       : "sion_implies_nash";
  Json checks = Json::array();
  for (const CheckEntry& e : r.entries) {
    Json c;
    c["name"] = e.name;
    c["lhs"] = e.lhs;
    c["rhs"] = e.rhs;
    c["gap"] = e.gap;
    c["pass"] = e.pass;
    checks.push_back(c);
  }
  j["checks"] = checks;
  j["pass"] = r.pass;
  return j;
}

const char* status_name(SionStatus s) {
  switch (s) {
    case SionStatus::Holds: return "holds";
    case SionStatus::Fails: return "fails";
    case SionStatus::InconclusiveBoundary: return "inconclusive-boundary";
  }
  return "unknown";
}

Json pair_report_to_json(const PairMinimaxReport& r) {
  Json j;
  j["player"] = r.player;
  j["pinned"] = r.pinned;
  j["maximin_arg"] = r.maximin_arg;
  j["maximin_value"] = r.maximin_value;
  j["minimax_arg"] = r.minimax_arg;
  j["minimax_value"] = r.minimax_value;
  j["gap"] = r.gap;
  j["sion_holds"] = r.sion_holds;
  j["status"] = status_name(r.status);
  return j;
}

// Warn when a payoff fails the rise-then-fall probe along its own strategy
// at the solution profile: the structural assumptions behind unimodal
// search are then suspect and results should be read with care.
void add_unimodality_warnings(const GameDefinition& game,
                              std::span<const double> profile,
                              std::vector<std::string>& warnings) {
  Profile scratch(profile.begin(), profile.end());
  for (int i = 0; i < game.n; ++i) {
    const Interval& iv = game.interval_of(i);
    const auto& u = game.payoffs[i];
    auto slice = [&](double x) {
      scratch[i] = x;
      return u(scratch);
    };
    const bool ok = unimodality_probe(slice, iv.lo, iv.hi, 201);
    scratch[i] = profile[i];
    if (!ok) {
      warnings.push_back(
          "payoff of player " + std::to_string(i) +
          " is not unimodal along its own strategy at the solution profile");
    }
  }
}

std::string format_number(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

}  // namespace

RunConfig parse_config(const Json& doc) {
  if (!doc.is_object()) {
    throw ConfigError("config root must be an object");
  }
  require_known_keys(doc, "", {"game", "tolerances", "seed", "options"});

  RunConfig cfg;
  if (!doc.contains("game")) fail("game", "missing");
  const Json& game = doc.at("game");
  require_object(game, "game");
  require_known_keys(game, "game", {"cournot4", "custom"});
  const bool has_cournot = game.contains("cournot4");
  const bool has_custom = game.contains("custom");
  if (has_cournot == has_custom) {
    fail("game", "exactly one of 'cournot4' or 'custom' must be given");
  }
  if (has_cournot) {
    cfg.cournot = parse_cournot(game.at("cournot4"));
  } else {
    cfg.custom = parse_custom(game.at("custom"));
  }

  if (doc.contains("tolerances")) {
    const Json& t = doc.at("tolerances");
    require_object(t, "tolerances");
    require_known_keys(t, "tolerances", {"xtol", "value_tol", "nash_tol"});
    if (t.contains("xtol")) {
      cfg.tolerances.xtol = as_number(t.at("xtol"), "tolerances.xtol");
    }
    if (t.contains("value_tol")) {
      cfg.tolerances.value_tol =
          as_number(t.at("value_tol"), "tolerances.value_tol");
    }
    if (t.contains("nash_tol")) {
      cfg.tolerances.nash_tol =
          as_number(t.at("nash_tol"), "tolerances.nash_tol");
    }
    if (!(cfg.tolerances.xtol > 0.0) || !(cfg.tolerances.value_tol > 0.0) ||
        !(cfg.tolerances.nash_tol > 0.0)) {
      fail("tolerances", "all tolerances must be positive");
    }
  }

  if (doc.contains("seed")) {
    const Json& s = doc.at("seed");
    if (!s.is_number_integer()) fail("seed", "expected an integer");
    cfg.seed = s.get<std::uint64_t>();
  }

  if (doc.contains("options")) {
    const Json& o = doc.at("options");
    require_object(o, "options");
    require_known_keys(o, "options", {"pinned", "damping", "max_iter"});
    if (o.contains("pinned")) {
      cfg.options.pinned = as_number(o.at("pinned"), "options.pinned");
    }
    if (o.contains("damping")) {
      cfg.options.damping = as_number(o.at("damping"), "options.damping");
      if (!(cfg.options.damping > 0.0 && cfg.options.damping <= 1.0)) {
        fail("options.damping", "must lie in (0, 1]");
      }
    }
    if (o.contains("max_iter")) {
      cfg.options.max_iter = as_int(o.at("max_iter"), "options.max_iter");
      if (cfg.options.max_iter < 1) fail("options.max_iter", "must be >= 1");
    }
  }

  // Validate custom payoff syntax now so malformed configs are rejected at
  // load time, not at first solve.
  if (cfg.custom) {
    std::set<std::string> names;
    for (const auto& [k, v] : cfg.custom->params) names.insert(k);
    for (std::size_t i = 0; i < cfg.custom->payoffs.size(); ++i) {
      try {
        (void)Expr::parse(cfg.custom->payoffs[i], cfg.custom->n, names);
      } catch (const ParseError& e) {
        fail("game.custom.payoffs[" + std::to_string(i) + "]", e.what());
      }
    }
  }

  cfg.echo = echo_of(cfg);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read config file '" + path + "'");
  }
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " +
                      e.what());
  }
  RunConfig cfg = parse_config(doc);
  // Custom games must pass the structural validations before any solve.
  if (cfg.custom) (void)instantiate_game(cfg);
  return cfg;
}

GameDefinition instantiate_game(const RunConfig& cfg,
                                std::vector<std::string>* warnings) {
  if (cfg.cournot) {
    return build_game(*cfg.cournot);
  }

  const CustomGameSpec& spec = *cfg.custom;
  std::set<std::string> names;
  for (const auto& [k, v] : spec.params) names.insert(k);
  const ParamMap params(spec.params.begin(), spec.params.end());

  std::vector<PayoffFn> payoffs;
  payoffs.reserve(spec.n);
  for (std::size_t i = 0; i < spec.payoffs.size(); ++i) {
    Expr parsed = [&] {
      try {
        return Expr::parse(spec.payoffs[i], spec.n, names);
      } catch (const ParseError& e) {
        fail("game.custom.payoffs[" + std::to_string(i) + "]", e.what());
      }
    }();
    if (parsed.contains_division() && warnings != nullptr) {
      warnings->push_back("payoffs[" + std::to_string(i) +
                          "] contains division; evaluation may fault on a "
                          "zero denominator");
    }
    Expr bound = parsed.bind(params);
    payoffs.push_back([bound = std::move(bound)](std::span<const double> s) {
      return bound.evaluate(s);
    });
  }

  GameDefinition game(spec.n, Interval(spec.group1_lo, spec.group1_hi),
                      Interval(spec.alien_lo, spec.alien_hi),
                      std::move(payoffs), spec.label,
                      /*group1_symmetric=*/true);

  const ZeroSumCheck zs = validate_zero_sum(game, 200, cfg.seed);
  if (zs.max_residual > 1e-9) {
    std::ostringstream os;
    os << "custom game is not zero-sum: residual " << zs.max_residual
       << " at profile (";
    for (std::size_t i = 0; i < zs.worst_profile.size(); ++i) {
      if (i > 0) os << ", ";
      os << zs.worst_profile[i];
    }
    os << ")";
    throw ConfigError(os.str());
  }
  const double asym = validate_group1_symmetry(game, 200, cfg.seed);
  if (asym > 1e-9) {
    std::ostringstream os;
    os << "custom game is not Group-1 symmetric: max asymmetry " << asym;
    throw ConfigError(os.str());
  }
  return game;
}

namespace {

void run_nash(const GameDefinition& game, const RunConfig& cfg,
              Json& results, std::vector<std::string>& warnings,
              bool& checks_passed) {
  const SymmetricEquilibrium eq = solve_nash_symmetric(game, nash_options(cfg));
  results["equilibrium"] = equilibrium_to_json(eq, game.n);

  const Profile p = eq.profile(game.n);
  Json players = Json::array();
  for (int i = 0; i < game.n; ++i) {
    Json row;
    row["player"] = i;
    row["alien"] = (i == game.alien());
    row["strategy"] = p[i];
    row["payoff"] = game.payoffs[i](p);
    players.push_back(row);
  }
  results["players"] = players;

  add_unimodality_warnings(game, p, warnings);
  if (!eq.converged) {
    warnings.push_back("best-response iteration did not converge (residual " +
                       format_number(eq.residual) + ")");
  }
  checks_passed = eq.converged;
}

void run_maximin(const GameDefinition& game, const RunConfig& cfg,
                 Json& results, std::vector<std::string>& warnings,
                 bool& checks_passed) {
  double pinned = 0.0;
  if (cfg.options.pinned) {
    pinned = *cfg.options.pinned;
  } else {
    const SymmetricEquilibrium eq =
        solve_nash_symmetric(game, nash_options(cfg));
    if (!eq.converged) {
      throw SolverFault(
          "maximin: default pinning takes the Nash Group-1 strategy, but "
          "the solve did not converge; set options.pinned explicitly");
    }
    pinned = eq.group1_strategy;
  }

  results["pinned"] = pinned;
  Json reports = Json::array();
  bool all_hold = true;
  const MinimaxOptions mm = minimax_options(cfg);
  for (int i = 0; i + 1 < game.n; ++i) {
    const PairMinimaxReport r =
        check_sion(game, i, pinned, cfg.tolerances.value_tol, mm);
    reports.push_back(pair_report_to_json(r));
    all_hold = all_hold && r.status == SionStatus::Holds;
    if (r.any_boundary) {
      warnings.push_back("player " + std::to_string(i) +
                         ": an argopt landed on the interval boundary; "
                         "equality verdict inconclusive");
    }
    if (r.any_plateau) {
      warnings.push_back("player " + std::to_string(i) +
                         ": objective plateau detected; optimum may not be "
                         "unique");
    }
  }
  results["pair_reports"] = reports;
  checks_passed = all_hold;
}

void run_fixedpoint(const GameDefinition& game, const RunConfig& cfg,
                    Json& results, std::vector<std::string>& warnings,
                    bool& checks_passed) {
  const VerifyOptions v = verify_options(cfg);
  const FixedPointResult fp = find_symmetric_fixed_point(
      game, v.fixed_point_tol, v.fixed_point_max_iter, v.minimax);
  Json fpj;
  fpj["s"] = fp.s;
  fpj["residual"] = fp.residual;
  fpj["iterations"] = fp.iterations;
  fpj["at_boundary"] = fp.at_boundary;
  results["fixed_point"] = fpj;
  if (fp.at_boundary) {
    warnings.push_back(
        "fixed point sits on the interval boundary; interior-optimum "
        "assumptions are suspect");
  }

  const ConstructedNash built =
      construct_nash_details(game, fp.s, v.construct);
  Json cj;
  cj["alien_argmax"] = built.alien_argmax;
  cj["group1_argmin"] = built.group1_argmin;
  cj["agreement_gap"] = built.agreement_gap;
  cj["equilibrium"] = equilibrium_to_json(built.eq, game.n);
  results["construction"] = cj;

  const Profile p = built.eq.profile(game.n);
  add_unimodality_warnings(game, p, warnings);
  if (!built.eq.converged) {
    warnings.push_back(
        "constructed profile is not a best response for every player "
        "(residual " +
        format_number(built.eq.residual) + ")");
  }
  checks_passed = built.eq.converged;
}

void run_verify(const GameDefinition& game, const RunConfig& cfg,
                Json& results, std::vector<std::string>& warnings,
                bool& checks_passed) {
  const EquivalenceOutcome outcome =
      verify_equivalence(game, verify_options(cfg));

  results["nash_route"] = equilibrium_to_json(outcome.nash_route, game.n);
  if (outcome.fixed_point_found) {
    Json fpj;
    fpj["s"] = outcome.fixed_point.s;
    fpj["residual"] = outcome.fixed_point.residual;
    fpj["iterations"] = outcome.fixed_point.iterations;
    fpj["at_boundary"] = outcome.fixed_point.at_boundary;
    results["fixed_point"] = fpj;
    results["fixed_point_route"] =
        equilibrium_to_json(outcome.fixed_point_route, game.n);
  } else {
    results["fixed_point"] = nullptr;
    results["fixed_point_route"] = nullptr;
  }
  results["theorem_nash_implies_sion"] =
      theorem_to_json(outcome.nash_implies_sion);
  results["theorem_sion_implies_nash"] =
      theorem_to_json(outcome.sion_implies_nash);
  results["overall_pass"] = outcome.pass;
  if (!outcome.diagnostics.empty()) {
    results["diagnostics"] = outcome.diagnostics;
  }

  // The analytic reference model carries its closed forms along for
  // regression diffing; the Group-1 gap is the headline number when the
  // equivalence fails.
  if (cfg.cournot) {
    const CournotParams& p = *cfg.cournot;
    Json cf;
    cf["nash"] = nash_closed_form(p);
    cf["maximin_group1"] = {maximin_closed_form(p, Firm::A),
                            maximin_closed_form(p, Firm::B),
                            maximin_closed_form(p, Firm::C)};
    cf["nash_vs_maximin_group1_gap"] =
        std::abs(nash_closed_form(p)[0] - maximin_closed_form(p, Firm::A));
    results["closed_form"] = cf;
  }

  add_unimodality_warnings(game, outcome.nash_route.profile(game.n),
                           warnings);
  if (!outcome.pass) {
    warnings.push_back("equivalence verification failed; see theorem checks");
  }
  checks_passed = outcome.pass;
}

void run_counterexample(const RunConfig& cfg, Json& results,
                        bool& checks_passed) {
  if (!cfg.cournot) {
    throw std::invalid_argument(
        "counterexample: the two-alien closed forms exist only for the "
        "cournot4 game");
  }
  const CounterexampleReport r = two_alien_counterexample(*cfg.cournot);
  results["nash_group1"] = r.nash_group1;
  results["maximin_group1"] = r.maximin_group1;
  results["gap"] = r.gap;
  results["equivalence_fails"] = r.equivalence_fails;
  results["verdict"] =
      r.equivalence_fails ? "equivalence fails" : "equivalence holds";
  checks_passed = !r.equivalence_fails;
}

}  // namespace

RunReport run_command(const std::string& command, const RunConfig& cfg) {
  if (command != "nash" && command != "maximin" && command != "fixedpoint" &&
      command != "verify" && command != "counterexample") {
    throw ConfigError("unknown command '" + command + "'");
  }

  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  Json results;
  std::vector<std::string> warnings;
  bool checks_passed = false;

  try {
    if (command == "counterexample") {
      run_counterexample(cfg, results, checks_passed);
    } else {
      const GameDefinition game = instantiate_game(cfg, &warnings);
      if (command == "nash") {
        run_nash(game, cfg, results, warnings, checks_passed);
      } else if (command == "maximin") {
        run_maximin(game, cfg, results, warnings, checks_passed);
      } else if (command == "fixedpoint") {
        run_fixedpoint(game, cfg, results, warnings, checks_passed);
      } else {
        run_verify(game, cfg, results, warnings, checks_passed);
      }
    }
  } catch (const SolverFault& e) {
    report.fault = true;
    checks_passed = false;
    results["fault"] = e.what();
  } catch (const EvalFault& e) {
    report.fault = true;
    checks_passed = false;
    results["fault"] = e.what();
  }

  const auto stop = std::chrono::steady_clock::now();
  const double ms =
      std::chrono::duration<double, std::milli>(stop - start).count();

  Json& doc = report.doc;
  doc["artifact_version"] = kVersion;
  doc["command"] = command;
  doc["config"] = cfg.echo;
  doc["results"] = results;
  doc["warnings"] = warnings;
  doc["checks_passed"] = checks_passed;
  doc["fault"] = report.fault;
  doc["timing_ms"] = ms;
  report.checks_passed = checks_passed;
  return report;
}

namespace {

void render_table_line(std::ostringstream& os,
                       std::initializer_list<std::string> cells,
                       std::initializer_list<int> widths) {
  auto w = widths.begin();
  for (const std::string& cell : cells) {
    os << std::left << std::setw(*w++) << cell;
  }
  os << "\n";
}

std::string render_table(const RunReport& report) {
  const Json& doc = report.doc;
  std::ostringstream os;
  os << "== zsgame " << doc.at("command").get<std::string>() << " =="
     << "\n";
  os << "game: " << doc.at("config").at("game").dump() << "\n\n";

  const Json& results = doc.at("results");
  const std::string command = doc.at("command").get<std::string>();

  if (results.contains("fault")) {
    os << "solver fault: " << results.at("fault").get<std::string>() << "\n";
  } else if (command == "nash") {
    render_table_line(os, {"player", "strategy", "payoff", "role"},
                      {8, 18, 18, 8});
    for (const Json& row : results.at("players")) {
      render_table_line(
          os,
          {std::to_string(row.at("player").get<int>()),
           format_number(row.at("strategy").get<double>()),
           format_number(row.at("payoff").get<double>()),
           row.at("alien").get<bool>() ? "alien" : "group1"},
          {8, 18, 18, 8});
    }
    const Json& eq = results.at("equilibrium");
    os << "\nresidual " << format_number(eq.at("residual").get<double>())
       << " after " << eq.at("iterations").get<int>() << " iterations, "
       << (eq.at("converged").get<bool>() ? "converged" : "NOT converged")
       << "\n";
  } else if (command == "maximin") {
    os << "pinned at " << format_number(results.at("pinned").get<double>())
       << "\n";
    render_table_line(os,
                      {"player", "maximin_arg", "maximin_val", "minimax_arg",
                       "minimax_val", "gap", "status"},
                      {8, 16, 16, 16, 16, 18, 14});
    for (const Json& r : results.at("pair_reports")) {
      render_table_line(
          os,
          {std::to_string(r.at("player").get<int>()),
           format_number(r.at("maximin_arg").get<double>()),
           format_number(r.at("maximin_value").get<double>()),
           format_number(r.at("minimax_arg").get<double>()),
           format_number(r.at("minimax_value").get<double>()),
           format_number(r.at("gap").get<double>()),
           r.at("status").get<std::string>()},
          {8, 16, 16, 16, 16, 18, 14});
    }
  } else if (command == "fixedpoint") {
    const Json& fp = results.at("fixed_point");
    os << "fixed point s~ = " << format_number(fp.at("s").get<double>())
       << " (residual " << format_number(fp.at("residual").get<double>())
       << ", " << fp.at("iterations").get<int>() << " map evaluations"
       << (fp.at("at_boundary").get<bool>() ? ", AT BOUNDARY" : "") << ")\n";
    const Json& c = results.at("construction");
    os << "alien completion s^_n = "
       << format_number(c.at("alien_argmax").get<double>())
       << " (agreement gap "
       << format_number(c.at("agreement_gap").get<double>()) << ")\n";
    const Json& eq = c.at("equilibrium");
    os << "profile residual " << format_number(eq.at("residual").get<double>())
       << ", " << (eq.at("converged").get<bool>() ? "Nash" : "NOT a Nash")
       << "\n";
  } else if (command == "verify") {
    for (const char* key :
         {"theorem_nash_implies_sion", "theorem_sion_implies_nash"}) {
      const Json& t = results.at(key);
      os << t.at("direction").get<std::string>() << ":\n";
      render_table_line(os, {"check", "lhs", "rhs", "gap", "pass"},
                        {40, 18, 18, 18, 6});
      for (const Json& e : t.at("checks")) {
        render_table_line(os,
                          {e.at("name").get<std::string>(),
                           format_number(e.at("lhs").get<double>()),
                           format_number(e.at("rhs").get<double>()),
                           format_number(e.at("gap").get<double>()),
                           e.at("pass").get<bool>() ? "yes" : "NO"},
                          {40, 18, 18, 18, 6});
      }
      os << "\n";
    }
    if (results.contains("closed_form")) {
      const Json& cf = results.at("closed_form");
      os << "closed-form Nash: " << cf.at("nash").dump() << "\n";
      os << "closed-form Group-1 maximin: " << cf.at("maximin_group1").dump()
         << " (gap to Nash: "
         << format_number(
                cf.at("nash_vs_maximin_group1_gap").get<double>())
         << ")\n";
    }
    os << "overall: "
       << (results.at("overall_pass").get<bool>() ? "equivalence verified"
                                                  : "equivalence FAILED")
       << "\n";
  } else if (command == "counterexample") {
    os << "Nash Group-1 strategy:    "
       << format_number(results.at("nash_group1").get<double>()) << "\n";
    os << "maximin Group-1 strategy: "
       << format_number(results.at("maximin_group1").get<double>()) << "\n";
    os << "gap:                      "
       << format_number(results.at("gap").get<double>()) << "\n";
    os << "verdict: " << results.at("verdict").get<std::string>() << "\n";
  }

  const Json& warnings = doc.at("warnings");
  if (!warnings.empty()) {
    os << "\nwarnings:\n";
    for (const Json& w : warnings) {
      os << "  - " << w.get<std::string>() << "\n";
    }
  }
  os << "\n"
     << (report.fault ? "FAULT"
                      : (report.checks_passed ? "PASS" : "FAIL"))
     << "\n";
  return os.str();
}

}  // namespace

std::string render_report(const RunReport& report, ReportFormat format) {
  if (format == ReportFormat::Json) {
    return report.doc.dump(2) + "\n";
  }
  return render_table(report);
}

int exit_code_for(const RunReport& report) {
  if (report.fault) return 3;
  return report.checks_passed ? 0 : 1;
}

std::string persist_report(const RunReport& report, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);

  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      now.time_since_epoch())
                      .count() %
                  1000;
  std::tm tm{};
#if defined(_WIN32)
  gmtime_s(&tm, &t);
#else
  gmtime_r(&t, &tm);
#endif
  std::ostringstream stamp;
  stamp << std::put_time(&tm, "%Y%m%d-%H%M%S") << "-" << std::setfill('0')
        << std::setw(3) << ms;

  const std::string command = report.doc.at("command").get<std::string>();
  const fs::path stamped =
      fs::path(dir) / (command + "-" + stamp.str() + ".json");
  const fs::path latest = fs::path(dir) / "latest.json";

  const std::string payload = render_report(report, ReportFormat::Json);
  {
    std::ofstream out(stamped);
    if (!out) throw ConfigError("cannot write report to " + stamped.string());
    out << payload;
  }
  {
    std::ofstream out(latest);
    if (!out) throw ConfigError("cannot write report to " + latest.string());
    out << payload;
  }
  return stamped.string();
}

}  // namespace zsg
