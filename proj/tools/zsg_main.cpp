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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "zsg/errors.hpp"
#include "zsg/report.hpp"
#include "zsg/version.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string format = "table";
  std::string out_dir;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "path to a JSON run config")
      ->required();
  cmd->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  cmd->add_option("--out", args.out_dir,
                  "directory for persisted JSON reports (timestamped file "
                  "plus latest.json)");
  cmd->add_option("--seed", args.seed, "override the config seed");
}

int run(const std::string& command, const CommonArgs& args) {
  zsg::RunConfig cfg = zsg::load_config(args.config_path);
  if (args.seed) {
    cfg.seed = *args.seed;
    cfg.echo["seed"] = *args.seed;
  }

  const zsg::RunReport report = zsg::run_command(command, cfg);
  const zsg::ReportFormat format = args.format == "json"
                                       ? zsg::ReportFormat::Json
                                       : zsg::ReportFormat::Table;
  std::cout << zsg::render_report(report, format);
  if (!args.out_dir.empty()) {
    const std::string path = zsg::persist_report(report, args.out_dir);
    std::cerr << "report written to " << path << "\n";
  }
  return zsg::exit_code_for(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "zsgame: maximin/minimax strategies, symmetric fixed points and Nash "
      "equilibria for zero-sum games with one alien player"};
  app.set_version_flag("--version", std::string(zsg::kVersion));
  app.require_subcommand(1);

  CommonArgs args;
  const char* commands[] = {"nash", "maximin", "fixedpoint", "verify",
                            "counterexample"};
  const char* descriptions[] = {
      "solve for the Group-1-symmetric Nash equilibrium by damped "
      "best-response iteration",
      "check the maximin/minimax equality per Group-1 player against the "
      "alien",
      "locate the fixed point of the symmetric maximin map and build the "
      "equilibrium from it",
      "verify both routes agree: best-response Nash vs fixed-point "
      "construction",
      "closed-form two-alien counterexample (cournot4 only)"};
  for (int i = 0; i < 5; ++i) {
    add_common(app.add_subcommand(commands[i], descriptions[i]), args);
  }

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, args);
  } catch (const zsg::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const zsg::SolverFault& e) {
    std::cerr << "solver fault: " << e.what() << "\n";
    return 3;
  } catch (const zsg::EvalFault& e) {
    std::cerr << "evaluation fault: " << e.what() << "\n";
    return 3;
  }
}
