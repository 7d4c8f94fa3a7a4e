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

#include "zsg/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <utility>
#include <vector>

#include "zsg/errors.hpp"

namespace zsg {

namespace {
constexpr int kMaxExponent = 8;
constexpr int kMaxDepth = 200;
}  // namespace

struct Expr::Node {
  enum class Kind { Constant, Variable, Parameter, Negate, Add, Sub, Mul, Div, Pow };

  Kind kind;
  double constant = 0.0;     // Constant
  int var_index = 0;         // Variable, 0-based
  std::string param;         // Parameter
  int exponent = 0;          // Pow
  std::unique_ptr<Node> lhs; // Negate/Pow operand, binary lhs
  std::unique_ptr<Node> rhs; // binary rhs

  std::unique_ptr<Node> clone() const {
    auto c = std::make_unique<Node>();
    c->kind = kind;
    c->constant = constant;
    c->var_index = var_index;
    c->param = param;
    c->exponent = exponent;
    if (lhs) c->lhs = lhs->clone();
    if (rhs) c->rhs = rhs->clone();
    return c;
  }
};

namespace {

using Node = Expr::Node;
using Kind = Node::Kind;

std::unique_ptr<Node> make_binary(Kind kind, std::unique_ptr<Node> l,
                                  std::unique_ptr<Node> r) {
  auto n = std::make_unique<Node>();
  n->kind = kind;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

// ---------------------------------------------------------------- lexer

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset = 0;
  double number = 0.0;
  bool number_is_integer = false;
  long long integer = 0;
  std::string_view text{};
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && is_space(src_[pos_])) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Tok::End, start};

    const char c = src_[pos_];
    switch (c) {
      case '+': ++pos_; return {Tok::Plus, start};
      case '-': ++pos_; return {Tok::Minus, start};
      case '*': ++pos_; return {Tok::Star, start};
      case '/': ++pos_; return {Tok::Slash, start};
      case '^': ++pos_; return {Tok::Caret, start};
      case '(': ++pos_; return {Tok::LParen, start};
      case ')': ++pos_; return {Tok::RParen, start};
      default: break;
    }

    if (is_digit(c) || c == '.') return lex_number(start);
    if (is_ident_start(c)) {
      while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
      Token t{Tok::Ident, start};
      t.text = src_.substr(start, pos_ - start);
      return t;
    }
    throw ParseError("unexpected character", start);
  }

 private:
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

  Token lex_number(std::size_t start) {
    bool is_integer = true;
    while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      is_integer = false;
      ++pos_;
      while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      is_integer = false;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ >= src_.size() || !is_digit(src_[pos_])) {
        throw ParseError("malformed exponent in number literal", pos_);
      }
      while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
    }

    const std::string_view text = src_.substr(start, pos_ - start);
    Token t{Tok::Number, start};
    t.text = text;
    double value = 0.0;
    const auto [p, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || p != text.data() + text.size()) {
      throw ParseError("malformed number literal", start);
    }
    t.number = value;
    t.number_is_integer = is_integer;
    if (is_integer) {
      long long iv = 0;
      const auto [ip, iec] =
          std::from_chars(text.data(), text.data() + text.size(), iv);
      t.number_is_integer = (iec == std::errc{} && ip == text.data() + text.size());
      t.integer = iv;
    }
    return t;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

// --------------------------------------------------------------- parser

class Parser {
 public:
  Parser(std::string_view src, int n, const std::set<std::string>& params)
      : src_(src), lexer_(src), n_(n), params_(params) {
    advance();
  }

  std::unique_ptr<Node> run() {
    auto e = parse_expr(0);
    if (cur_.kind != Tok::End) {
      if (cur_.kind == Tok::RParen) {
        throw ParseError("unbalanced parenthesis", cur_.offset);
      }
      throw ParseError("trailing input after expression", cur_.offset);
    }
    return e;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  void enforce_depth(int depth) {
    if (depth > kMaxDepth) {
      throw ParseError("expression too deeply nested", cur_.offset);
    }
  }

  std::unique_ptr<Node> parse_expr(int depth) {
    enforce_depth(depth);
    auto lhs = parse_term(depth + 1);
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      const Kind k = cur_.kind == Tok::Plus ? Kind::Add : Kind::Sub;
      advance();
      lhs = make_binary(k, std::move(lhs), parse_term(depth + 1));
    }
    return lhs;
  }

  std::unique_ptr<Node> parse_term(int depth) {
    enforce_depth(depth);
    auto lhs = parse_unary(depth + 1);
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      const Kind k = cur_.kind == Tok::Star ? Kind::Mul : Kind::Div;
      advance();
      lhs = make_binary(k, std::move(lhs), parse_unary(depth + 1));
    }
    return lhs;
  }

  std::unique_ptr<Node> parse_unary(int depth) {
    enforce_depth(depth);
    if (cur_.kind == Tok::Minus) {
      advance();
      auto n = std::make_unique<Node>();
      n->kind = Kind::Negate;
      n->lhs = parse_unary(depth + 1);
      return n;
    }
    return parse_power(depth + 1);
  }

  std::unique_ptr<Node> parse_power(int depth) {
    enforce_depth(depth);
    auto base = parse_primary(depth + 1);
    while (cur_.kind == Tok::Caret) {
      advance();
      if (cur_.kind != Tok::Number || !cur_.number_is_integer) {
        throw ParseError("power exponent must be an integer literal",
                         cur_.offset);
      }
      if (cur_.integer < 0 || cur_.integer > kMaxExponent) {
        throw ParseError("power exponent must lie in [0, 8]", cur_.offset);
      }
      auto n = std::make_unique<Node>();
      n->kind = Kind::Pow;
      n->exponent = static_cast<int>(cur_.integer);
      n->lhs = std::move(base);
      base = std::move(n);
      advance();
    }
    return base;
  }

  std::unique_ptr<Node> parse_primary(int depth) {
    enforce_depth(depth);
    switch (cur_.kind) {
      case Tok::Number: {
        auto n = std::make_unique<Node>();
        n->kind = Kind::Constant;
        n->constant = cur_.number;
        advance();
        return n;
      }
      case Tok::Ident:
        return parse_ident();
      case Tok::LParen: {
        const std::size_t open = cur_.offset;
        advance();
        auto inner = parse_expr(depth + 1);
        if (cur_.kind != Tok::RParen) {
          // report at the end of input, where the closer is missing
          throw ParseError("unbalanced parenthesis opened here",
                           cur_.kind == Tok::End ? src_.size() : open);
        }
        advance();
        return inner;
      }
      case Tok::RParen:
        throw ParseError("unbalanced parenthesis", cur_.offset);
      case Tok::End:
        throw ParseError("unexpected end of expression", cur_.offset);
      default:
        throw ParseError("expected a value", cur_.offset);
    }
  }

  std::unique_ptr<Node> parse_ident() {
    const std::string_view name = cur_.text;
    const std::size_t offset = cur_.offset;

    // s<digits> names a strategy; the prefix is reserved.
    if (name.size() >= 2 && name[0] == 's') {
      bool all_digits = true;
      for (std::size_t k = 1; k < name.size(); ++k) {
        if (name[k] < '0' || name[k] > '9') {
          all_digits = false;
          break;
        }
      }
      if (all_digits) {
        int index = 0;
        const auto [p, ec] =
            std::from_chars(name.data() + 1, name.data() + name.size(), index);
        if (ec != std::errc{} || p != name.data() + name.size() || index < 1 ||
            index > n_) {
          throw ParseError("unknown identifier '" + std::string(name) +
                               "' (strategy index out of range for " +
                               std::to_string(n_) + " players)",
                           offset);
        }
        auto n = std::make_unique<Node>();
        n->kind = Kind::Variable;
        n->var_index = index - 1;
        advance();
        return n;
      }
    }

    if (params_.count(std::string(name)) == 0) {
      throw ParseError("unknown identifier '" + std::string(name) + "'",
                       offset);
    }
    auto n = std::make_unique<Node>();
    n->kind = Kind::Parameter;
    n->param = std::string(name);
    advance();
    return n;
  }

  std::string_view src_;
  Lexer lexer_;
  int n_;
  const std::set<std::string>& params_;
  Token cur_{Tok::End, 0};
};

// ----------------------------------------------------------- evaluation

double eval_node(const Node& node, std::span<const double> s,
                 const ParamMap* params) {
  double v = 0.0;
  switch (node.kind) {
    case Kind::Constant:
      v = node.constant;
      break;
    case Kind::Variable:
      if (node.var_index >= static_cast<int>(s.size())) {
        throw EvalFault("strategy profile shorter than expression expects",
                        {s.begin(), s.end()});
      }
      v = s[node.var_index];
      break;
    case Kind::Parameter: {
      if (params == nullptr) {
        throw std::invalid_argument("unbound parameter '" + node.param + "'");
      }
      const auto it = params->find(node.param);
      if (it == params->end()) {
        throw std::invalid_argument("unbound parameter '" + node.param + "'");
      }
      v = it->second;
      break;
    }
    case Kind::Negate:
      v = -eval_node(*node.lhs, s, params);
      break;
    case Kind::Add:
      v = eval_node(*node.lhs, s, params) + eval_node(*node.rhs, s, params);
      break;
    case Kind::Sub:
      v = eval_node(*node.lhs, s, params) - eval_node(*node.rhs, s, params);
      break;
    case Kind::Mul:
      v = eval_node(*node.lhs, s, params) * eval_node(*node.rhs, s, params);
      break;
    case Kind::Div: {
      const double num = eval_node(*node.lhs, s, params);
      const double den = eval_node(*node.rhs, s, params);
      if (den == 0.0) {
        throw EvalFault("division by zero", {s.begin(), s.end()});
      }
      v = num / den;
      break;
    }
    case Kind::Pow: {
      const double base = eval_node(*node.lhs, s, params);
      v = 1.0;
      for (int k = 0; k < node.exponent; ++k) v *= base;
      break;
    }
  }
  if (!std::isfinite(v)) {
    throw EvalFault("expression evaluated to a non-finite value",
                    {s.begin(), s.end()});
  }
  return v;
}

void print_node(const Node& node, std::string& out) {
  switch (node.kind) {
    case Kind::Constant: {
      char buf[32];
      const auto [p, ec] =
          std::to_chars(buf, buf + sizeof(buf), node.constant);
      out.append(buf, p);
      break;
    }
    case Kind::Variable:
      out += 's';
      out += std::to_string(node.var_index + 1);
      break;
    case Kind::Parameter:
      out += node.param;
      break;
    case Kind::Negate:
      out += "(-";
      print_node(*node.lhs, out);
      out += ')';
      break;
    case Kind::Add:
    case Kind::Sub:
    case Kind::Mul:
    case Kind::Div: {
      const char op = node.kind == Kind::Add   ? '+'
                      : node.kind == Kind::Sub ? '-'
                      : node.kind == Kind::Mul ? '*'
                                               : '/';
      out += '(';
      print_node(*node.lhs, out);
      out += ' ';
      out += op;
      out += ' ';
      print_node(*node.rhs, out);
      out += ')';
      break;
    }
    case Kind::Pow:
      out += '(';
      print_node(*node.lhs, out);
      out += " ^ ";
      out += std::to_string(node.exponent);
      out += ')';
      break;
  }
}

bool node_contains(const Node& node, Kind kind) {
  if (node.kind == kind) return true;
  if (node.lhs && node_contains(*node.lhs, kind)) return true;
  if (node.rhs && node_contains(*node.rhs, kind)) return true;
  return false;
}

std::unique_ptr<Node> bind_node(const Node& node, const ParamMap& params) {
  if (node.kind == Kind::Parameter) {
    const auto it = params.find(node.param);
    if (it == params.end()) {
      throw std::invalid_argument("unbound parameter '" + node.param + "'");
    }
    auto c = std::make_unique<Node>();
    c->kind = Kind::Constant;
    c->constant = it->second;
    return c;
  }
  auto c = std::make_unique<Node>();
  c->kind = node.kind;
  c->constant = node.constant;
  c->var_index = node.var_index;
  c->param = node.param;
  c->exponent = node.exponent;
  if (node.lhs) c->lhs = bind_node(*node.lhs, params);
  if (node.rhs) c->rhs = bind_node(*node.rhs, params);
  return c;
}

}  // namespace

// ------------------------------------------------------------ Expr body

Expr::Expr(std::unique_ptr<Node> root, int n_strategies)
    : root_(std::move(root)), n_strategies_(n_strategies) {}

Expr::Expr(const Expr& other)
    : root_(other.root_ ? other.root_->clone() : nullptr),
      n_strategies_(other.n_strategies_) {}

Expr::Expr(Expr&& other) noexcept = default;

Expr& Expr::operator=(const Expr& other) {
  if (this != &other) {
    root_ = other.root_ ? other.root_->clone() : nullptr;
    n_strategies_ = other.n_strategies_;
  }
  return *this;
}

Expr& Expr::operator=(Expr&& other) noexcept = default;

Expr::~Expr() = default;

Expr Expr::parse(std::string_view src, int n_strategies,
                 const std::set<std::string>& params) {
  if (src.empty()) throw ParseError("empty expression", 0);
  if (n_strategies < 1) {
    throw std::invalid_argument("Expr::parse: need at least one strategy");
  }
  Parser parser(src, n_strategies, params);
  return Expr(parser.run(), n_strategies);
}

double Expr::evaluate(std::span<const double> strategies,
                      const ParamMap& params) const {
  return eval_node(*root_, strategies, &params);
}

double Expr::evaluate(std::span<const double> strategies) const {
  return eval_node(*root_, strategies, nullptr);
}

Expr Expr::bind(const ParamMap& params) const {
  return Expr(bind_node(*root_, params), n_strategies_);
}

std::string Expr::to_string() const {
  std::string out;
  print_node(*root_, out);
  return out;
}

bool Expr::contains_division() const {
  return node_contains(*root_, Kind::Div);
}

bool Expr::fully_bound() const {
  return !node_contains(*root_, Kind::Parameter);
}

}  // namespace zsg
