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

#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace revolve {

/// Built-in single-argument functions understood by the parser.
enum class Function {
  Sqrt, Sin, Cos, Tan, Asin, Acos, Atan, Exp, Log, Abs
};

/// An immutable parsed expression in at most one real variable.
///
/// Grammar, loosest binding first:
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := '-' unary | power
///     power   := primary ('^' unary)?
///     primary := number | constant | variable | function '(' expr ')'
///              | '(' expr ')'
///
/// so `^` is right-associative and binds tighter than unary minus
/// (`-2^2 == -4`, `2^3^2 == 512`). Implicit multiplication is not accepted.
/// Constants are `pi` and `e`; functions are sqrt, sin, cos, tan, asin, acos,
/// atan, exp, log (natural) and abs. Variable-free subtrees are folded at
/// parse time.
///
/// Copies share the same tree, so an Expr is cheap to copy and safe to
/// evaluate from several threads at once.
class Expr {
 public:
  struct Node;

  /// Parses `text` with `variable` as the only admissible free identifier.
  /// An empty `variable` admits none (constant expressions).
  /// Throws SyntaxError or UnknownIdentifier.
  static Expr parse(std::string_view text, std::string_view variable);

  /// Evaluates at `value`. Throws DomainError when any step leaves the real
  /// domain or produces a non-finite number.
  double operator()(double value) const;

  /// Evaluates a variable-free expression.
  double value() const;

  const std::string& source() const noexcept { return source_; }
  const std::string& variable() const noexcept { return variable_; }

  /// True when the folded tree still references the variable.
  bool depends_on_variable() const noexcept;

  /// Structural equality of the folded trees (and the variable name).
  friend bool operator==(const Expr& lhs, const Expr& rhs);

 private:
  Expr(std::shared_ptr<const Node> root, std::string source,
       std::string variable);

  std::shared_ptr<const Node> root_;
  std::string source_;
  std::string variable_;
};

inline Expr parse_expr(std::string_view text, std::string_view variable) {
  return Expr::parse(text, variable);
}

inline double eval_expr(const Expr& expr, double value) { return expr(value); }

/// Parses and evaluates a variable-free expression such as "-pi/3".
double parse_constant(std::string_view text);

}  // namespace revolve
