// Copyright 2026 The Revolve Authors.
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

#include "revolve/expr.hpp"

#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>

#include "revolve/errors.hpp"

namespace revolve {

struct Expr::Node {
  enum class Kind { Constant, Variable, Negate, Add, Sub, Mul, Div, Pow, Call };

  Kind kind = Kind::Constant;
  double constant = 0.0;
  Function function = Function::Sqrt;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = Expr::Node;
using NodePtr = std::shared_ptr<const Node>;

struct FunctionName {
  std::string_view name;
  Function function;
};

constexpr std::array<FunctionName, 10> kFunctions{{
    {"sqrt", Function::Sqrt},
    {"sin", Function::Sin},
    {"cos", Function::Cos},
    {"tan", Function::Tan},
    {"asin", Function::Asin},
    {"acos", Function::Acos},
    {"atan", Function::Atan},
    {"exp", Function::Exp},
    {"log", Function::Log},
    {"abs", Function::Abs},
}};

std::optional<Function> lookup_function(std::string_view name) {
  for (const auto& entry : kFunctions) {
    if (entry.name == name) return entry.function;
  }
  return std::nullopt;
}

std::optional<double> lookup_constant(std::string_view name) {
  if (name == "pi") return std::numbers::pi;
  if (name == "e") return std::numbers::e;
  return std::nullopt;
}

bool is_identifier_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_identifier_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

double checked(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw DomainError(std::string(what) + " produced a non-finite value");
  }
  return value;
}

double apply(Function function, double arg) {
  switch (function) {
    case Function::Sqrt:
      if (arg < 0.0) throw DomainError("sqrt of negative value");
      return std::sqrt(arg);
    case Function::Sin:
      return checked(std::sin(arg), "sin");
    case Function::Cos:
      return checked(std::cos(arg), "cos");
    case Function::Tan:
      return checked(std::tan(arg), "tan");
    case Function::Asin:
      if (arg < -1.0 || arg > 1.0) throw DomainError("asin outside [-1, 1]");
      return std::asin(arg);
    case Function::Acos:
      if (arg < -1.0 || arg > 1.0) throw DomainError("acos outside [-1, 1]");
      return std::acos(arg);
    case Function::Atan:
      return std::atan(arg);
    case Function::Exp:
      return checked(std::exp(arg), "exp");
    case Function::Log:
      if (arg <= 0.0) throw DomainError("log of non-positive value");
      return std::log(arg);
    case Function::Abs:
      return std::abs(arg);
  }
  throw std::logic_error("unhandled function");
}

double evaluate(const Node& node, double x) {
  switch (node.kind) {
    case Node::Kind::Constant:
      return node.constant;
    case Node::Kind::Variable:
      return x;
    case Node::Kind::Negate:
      return -evaluate(*node.lhs, x);
    case Node::Kind::Add:
      return checked(evaluate(*node.lhs, x) + evaluate(*node.rhs, x), "+");
    case Node::Kind::Sub:
      return checked(evaluate(*node.lhs, x) - evaluate(*node.rhs, x), "-");
    case Node::Kind::Mul:
      return checked(evaluate(*node.lhs, x) * evaluate(*node.rhs, x), "*");
    case Node::Kind::Div: {
      const double num = evaluate(*node.lhs, x);
      const double den = evaluate(*node.rhs, x);
      if (den == 0.0) throw DomainError("division by zero");
      return checked(num / den, "/");
    }
    case Node::Kind::Pow:
      return checked(std::pow(evaluate(*node.lhs, x), evaluate(*node.rhs, x)),
                     "^");
    case Node::Kind::Call:
      return apply(node.function, evaluate(*node.lhs, x));
  }
  throw std::logic_error("unhandled node kind");
}

bool structurally_equal(const NodePtr& a, const NodePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Node::Kind::Constant:
      // Bitwise comparison: folded constants must reproduce exactly.
      return std::bit_cast<std::uint64_t>(a->constant) ==
             std::bit_cast<std::uint64_t>(b->constant);
    case Node::Kind::Variable:
      return true;
    case Node::Kind::Call:
      if (a->function != b->function) return false;
      break;
    default:
      break;
  }
  return structurally_equal(a->lhs, b->lhs) &&
         structurally_equal(a->rhs, b->rhs);
}

bool references_variable(const NodePtr& node) {
  if (!node) return false;
  if (node->kind == Node::Kind::Variable) return true;
  return references_variable(node->lhs) || references_variable(node->rhs);
}

class Parser {
 public:
  Parser(std::string_view text, std::string_view variable)
      : text_(text), variable_(variable) {}

  NodePtr parse() {
    skip_space();
    if (at_end()) throw SyntaxError(pos_, "expected an expression");
    NodePtr root = parse_sum();
    skip_space();
    if (!at_end()) {
      throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] +
                                  "', expected an operator or end of input");
    }
    return root;
  }

 private:
  NodePtr parse_sum() {
    NodePtr lhs = parse_product();
    for (;;) {
      skip_space();
      if (accept('+')) {
        lhs = binary(Node::Kind::Add, lhs, parse_product());
      } else if (accept('-')) {
        lhs = binary(Node::Kind::Sub, lhs, parse_product());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_product() {
    NodePtr lhs = parse_unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        lhs = binary(Node::Kind::Mul, lhs, parse_unary());
      } else if (accept('/')) {
        lhs = binary(Node::Kind::Div, lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_unary() {
    skip_space();
    if (accept('-')) {
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::Negate;
      node->lhs = parse_unary();
      return fold(node);
    }
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_primary();
    skip_space();
    if (accept('^')) return binary(Node::Kind::Pow, base, parse_unary());
    return base;
  }

  NodePtr parse_primary() {
    skip_space();
    if (at_end()) throw SyntaxError(pos_, "expected an operand");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_sum();
      expect(')');
      return inner;
    }
    if (is_digit(c) || c == '.') return parse_number();
    if (is_identifier_start(c)) return parse_identifier();
    throw SyntaxError(pos_, std::string("unexpected '") + c +
                                "', expected an operand");
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(text_[pos_])) ++pos_;
    if (!at_end() && text_[pos_] == '.') {
      ++pos_;
      while (!at_end() && is_digit(text_[pos_])) ++pos_;
    }
    if (pos_ - start == 1 && text_[start] == '.') {
      throw SyntaxError(start, "malformed number");
    }
    // Exponent only when digits follow, so "2e" stays a (rejected) juxtaposition.
    if (!at_end() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) {
        ++look;
      }
      if (look < text_.size() && is_digit(text_[look])) {
        pos_ = look;
        while (!at_end() && is_digit(text_[pos_])) ++pos_;
      }
    }
    double value = 0.0;
    const auto* first = text_.data() + start;
    const auto* last = text_.data() + pos_;
    const auto [end, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || end != last || !std::isfinite(value)) {
      throw SyntaxError(start, "malformed number");
    }
    return constant(value);
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (!at_end() && is_identifier_char(text_[pos_])) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);

    if (!variable_.empty() && name == variable_) {
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::Variable;
      return node;
    }
    if (auto value = lookup_constant(name)) return constant(*value);
    if (auto function = lookup_function(name)) {
      skip_space();
      expect('(');
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::Call;
      node->function = *function;
      node->lhs = parse_sum();
      expect(')');
      return fold(node);
    }
    throw UnknownIdentifier(start, std::string(name));
  }

  static NodePtr constant(double value) {
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::Constant;
    node->constant = value;
    return node;
  }

  static NodePtr binary(Node::Kind kind, NodePtr lhs, NodePtr rhs) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return fold(node);
  }

  // Collapses variable-free subtrees. A subtree whose evaluation fails is
  // kept so that the failure surfaces at evaluation time as a DomainError.
  static NodePtr fold(const std::shared_ptr<Node>& node) {
    const bool lhs_const = !node->lhs || node->lhs->kind == Node::Kind::Constant;
    const bool rhs_const = !node->rhs || node->rhs->kind == Node::Kind::Constant;
    if (!lhs_const || !rhs_const) return node;
    try {
      return constant(evaluate(*node, 0.0));
    } catch (const DomainError&) {
      return node;
    }
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_space();
    if (!accept(c)) {
      throw SyntaxError(pos_, std::string("expected '") + c + "'");
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }

  std::string_view text_;
  std::string_view variable_;
  std::size_t pos_ = 0;
};

bool is_reserved(std::string_view name) {
  return lookup_constant(name).has_value() || lookup_function(name).has_value();
}

bool is_identifier(std::string_view name) {
  if (name.empty() || !is_identifier_start(name.front())) return false;
  for (char c : name) {
    if (!is_identifier_char(c)) return false;
  }
  return true;
}

}  // namespace

Expr::Expr(std::shared_ptr<const Node> root, std::string source,
           std::string variable)
    : root_(std::move(root)),
      source_(std::move(source)),
      variable_(std::move(variable)) {}

Expr Expr::parse(std::string_view text, std::string_view variable) {
  if (!variable.empty() && (!is_identifier(variable) || is_reserved(variable))) {
    throw std::invalid_argument("invalid variable name '" +
                                std::string(variable) + "'");
  }
  Parser parser(text, variable);
  NodePtr root = parser.parse();
  return Expr(std::move(root), std::string(text), std::string(variable));
}

double Expr::operator()(double value) const {
  if (!std::isfinite(value)) throw DomainError("non-finite argument");
  return evaluate(*root_, value);
}

double Expr::value() const {
  if (depends_on_variable()) {
    throw DomainError("expression '" + source_ + "' depends on '" + variable_ +
                      "'");
  }
  return evaluate(*root_, 0.0);
}

bool Expr::depends_on_variable() const noexcept {
  return references_variable(root_);
}

bool operator==(const Expr& lhs, const Expr& rhs) {
  return lhs.variable_ == rhs.variable_ &&
         structurally_equal(lhs.root_, rhs.root_);
}

double parse_constant(std::string_view text) {
  return Expr::parse(text, "").value();
}

}  // namespace revolve
