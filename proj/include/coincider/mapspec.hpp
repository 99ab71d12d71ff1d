#pragma once

#include <memory>
#include <string>
#include <vector>

#include "coincider/rational.hpp"

namespace coincider {

/// One node of a parsed map expression.
struct Expr {
  enum class Kind { Constant, Variable, Unary, Binary, Call };
  Kind kind = Kind::Constant;
  Rational constant;           // Constant
  int var_index = 0;           // Variable: 0-based into x_1..x_d
  char op = 0;                 // Unary: '-'; Binary: one of + - * / ^
  std::string fn;              // Call: sin cos exp min max pow
  std::vector<std::shared_ptr<const Expr>> args;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Parses an expression over variables x1..xd with + - * / ^, unary minus,
/// parentheses, and calls sin/cos/exp/min/max/pow.
ExprPtr parse_expr(const std::string& text, int d);

double eval_double(const Expr& e, const std::vector<double>& x);

/// Exact evaluation; throws NonRationalError for sin/cos/exp or fractional
/// powers, EvaluationError for division by zero.
Rational eval_rational(const Expr& e, const std::vector<Rational>& x);

/// A map R^d -> R^m given componentwise by expressions.
struct MapSpec {
  int d = 0;
  std::vector<ExprPtr> components;

  int m() const { return static_cast<int>(components.size()); }

  std::vector<double> eval(const std::vector<double>& x) const;
  std::vector<Rational> eval(const std::vector<Rational>& x) const;

  /// True when every component evaluates exactly on rational inputs.
  bool rational_evaluable() const;
};

/// Builds a MapSpec from its JSON description:
///   {"expr":"x1","m":1}                      single expression
///   {"exprs":["x1","x2*x2"],"m":2}           one expression per component
///   {"builtin":"linear","u":["1","1/2",...]} x -> <u, x>
MapSpec map_from_json_text(const std::string& json_text, int d);

/// The linear functional x -> <u, x>.
MapSpec make_linear_map(const std::vector<Rational>& u);

}  // namespace coincider
