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

// Config-driven front end: loads a game definition from a JSON document,
// dispatches one command against it, and renders the outcome as a stable
// machine-readable report or an aligned table.
//
// Config schema (all tolerances and options may be omitted):
//
//   {
//     "game": {
//       "cournot4": { "a": 10.0, "c": [1.0, 1.0, 1.0, 2.0] }
//       -- or --
//       "custom": {
//         "n": 3,
//         "group1_interval": [0.0, 9.0],
//         "alien_interval":  [0.0, 9.0],
//         "payoffs": ["<expr for player 1>", "...", "..."],
//         "params": { "a": 9.0 },
//         "label": "optional text"
//       }
//     },
//     "tolerances": { "xtol": 1e-9, "value_tol": 1e-6, "nash_tol": 1e-5 },
//     "seed": 42,
//     "options": { "pinned": 2.375, "damping": 0.5, "max_iter": 500 }
//   }
//
// Exactly one of cournot4/custom must be present. Custom games must pass
// the zero-sum and Group-1 symmetry sampling validations before any solve
// runs. Commands: nash, maximin, fixedpoint, verify, counterexample.
//
// Exit codes: 0 all checks passed, 1 checks ran and failed, 2 config or
// usage error, 3 solver fault.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zsg/cournot.hpp"
#include "zsg/game.hpp"

namespace zsg {

using Json = nlohmann::ordered_json;

struct Tolerances {
  double xtol = 1e-9;       // inner scalar searches; outer loops use 100x
  double value_tol = 1e-6;  // maximin/minimax value equality
  double nash_tol = 1e-5;   // equilibrium arguments and route agreement
};

struct CustomGameSpec {
  int n = 0;
  double group1_lo = 0.0, group1_hi = 0.0;
  double alien_lo = 0.0, alien_hi = 0.0;
  std::vector<std::string> payoffs;
  std::map<std::string, double> params;
  std::string label;
};

struct RunOptions {
  std::optional<double> pinned;  // maximin command; default: Nash strategy
  double damping = 0.5;
  int max_iter = 500;
};

struct RunConfig {
  std::optional<CournotParams> cournot;
  std::optional<CustomGameSpec> custom;
  Tolerances tolerances;
  std::uint64_t seed = 42;
  RunOptions options;

  // Normalized echo (defaults filled), embedded in every report.
  Json echo;
};

// Parses and validates a config document. Throws ConfigError with the
// offending field path.
RunConfig parse_config(const Json& doc);

// Reads the file and parses it. Throws ConfigError for unreadable files or
// malformed JSON.
RunConfig load_config(const std::string& path);

// Builds the configured game. Custom games are parsed, bound, and must
// pass the zero-sum and symmetry validations (ConfigError names the worst
// profile otherwise). Appends non-fatal notes to `warnings` if given.
GameDefinition instantiate_game(const RunConfig& cfg,
                                std::vector<std::string>* warnings = nullptr);

struct RunReport {
  Json doc;                   // full report document
  bool checks_passed = false;
  bool fault = false;
};

// Dispatches one command. Solver faults are embedded as failed report
// entries with diagnostics rather than thrown; config-level problems
// (unknown command, counterexample on a non-cournot game) throw.
RunReport run_command(const std::string& command, const RunConfig& cfg);

enum class ReportFormat { Json, Table };

std::string render_report(const RunReport& report, ReportFormat format);

// 0 = checks passed, 1 = checks failed, 3 = solver fault.
int exit_code_for(const RunReport& report);

// Writes <dir>/<command>-<timestamp>.json and <dir>/latest.json, creating
// the directory if needed. Returns the timestamped path.
std::string persist_report(const RunReport& report, const std::string& dir);

}  // namespace zsg
