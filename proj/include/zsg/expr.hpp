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

// Arithmetic payoff expressions parsed from config text, so custom zero-sum
// games can be defined without recompiling.
//
// Grammar (loosest to tightest binding):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' INTEGER)*     integer exponent in [0, 8]
//   primary := NUMBER | IDENT | '(' expr ')'
//
// Identifiers s1..s<n> name strategies (1-based, as written in configs);
// any other identifier must be a declared parameter. Unary minus binds
// below power, so -s1^2 reads as -(s1^2).

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zsg {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) +
                           ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

using ParamMap = std::map<std::string, double>;

// Immutable expression tree. Value semantics (copies are deep).
class Expr {
 public:
  // Parses `src` against n strategy variables and the declared parameter
  // names. Throws ParseError with the byte offset of the problem; never
  // crashes on arbitrary byte input.
  static Expr parse(std::string_view src, int n_strategies,
                    const std::set<std::string>& params);

  Expr(const Expr& other);
  Expr(Expr&& other) noexcept;
  Expr& operator=(const Expr& other);
  Expr& operator=(Expr&& other) noexcept;
  ~Expr();

  // Evaluation. Division by zero or a non-finite intermediate throws
  // EvalFault carrying the strategy profile. All parameters must be bound.
  double evaluate(std::span<const double> strategies,
                  const ParamMap& params) const;

  // Evaluation after bind(); allocation-free, for hot optimization loops.
  double evaluate(std::span<const double> strategies) const;

  // Substitutes parameters with constants; the result needs no ParamMap.
  // Throws std::invalid_argument if a parameter is missing from `params`.
  Expr bind(const ParamMap& params) const;

  // Canonical fully parenthesized text. parse(to_string()) evaluates
  // identically to this tree at every point, and printing is idempotent.
  std::string to_string() const;

  bool contains_division() const;
  bool fully_bound() const;  // no parameter nodes remain

  int n_strategies() const noexcept { return n_strategies_; }

  struct Node;  // opaque; defined in the implementation

 private:
  Expr(std::unique_ptr<Node> root, int n_strategies);

  std::unique_ptr<Node> root_;
  int n_strategies_ = 0;
};

}  // namespace zsg
