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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zsg {

// Objective or payoff evaluation produced a non-finite value or an
// expression faulted (division by zero). Carries the offending point,
// either a single coordinate or a whole strategy profile.
class EvalFault : public std::runtime_error {
 public:
  EvalFault(const std::string& what, std::vector<double> point)
      : std::runtime_error(what), point_(std::move(point)) {}

  const std::vector<double>& point() const noexcept { return point_; }

 private:
  std::vector<double> point_;
};

// An iterative solver could not locate a solution within its budget.
class SolverFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Problems with a run configuration: missing files, schema violations,
// games that fail their structural validation.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zsg
