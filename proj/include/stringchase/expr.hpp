#pragma once

// A small expression language for maps [0,1]^n -> [0,1]^n:
//
//   map      := expr (";" expr)*
//   expr     := term (("+"|"-") term)*
//   term     := factor ("*" factor)*
//   factor   := ("-")? atom ("^" INTEGER)?
//   atom     := NUMBER | VAR | FUNC "(" expr ")" | "(" expr ")"
//   VAR      := "x" INTEGER
//   FUNC     := sin | cos | expneg | sqrt | abs | min2 | max2
//
// min2/max2 take two comma-separated arguments. There is no division, and
// sqrt(t) is evaluated as sqrt(max(t, 0)), so every expression is total.

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stringchase/map_fn.hpp"

namespace stringchase {

enum class UnaryOp { Neg, Sin, Cos, ExpNeg, Sqrt, Abs };
enum class BinaryOp { Add, Sub, Mul, Min, Max, Pow };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { Constant, Variable, Unary, Binary };

  Kind kind = Kind::Constant;
  double value = 0.0;  ///< Constant; Pow exponent lives in rhs as a Constant
  int index = 0;       ///< Variable, 1-based
  UnaryOp unary = UnaryOp::Neg;
  BinaryOp binary = BinaryOp::Add;
  ExprPtr lhs;  ///< operand of Unary, left of Binary
  ExprPtr rhs;

  static ExprPtr constant(double v);
  static ExprPtr variable(int index);
  static ExprPtr make_unary(UnaryOp op, ExprPtr arg);
  static ExprPtr make_binary(BinaryOp op, ExprPtr a, ExprPtr b);
};

bool structurally_equal(const ExprNode& a, const ExprNode& b);

double evaluate(const ExprNode& e, std::span<const double> x);

/// Prints in a form that parses back to an equal tree.
std::string to_string(const ExprNode& e);

struct MapSpec {
  int n = 1;
  std::vector<ExprPtr> components;

  /// Componentwise evaluation followed by the clamp into [0,1].
  RealPoint eval(std::span<const double> x) const;
  std::string to_string() const;
};

bool structurally_equal(const MapSpec& a, const MapSpec& b);

/// Throws SyntaxError (with position), ArityError, UnknownIdentifier,
/// IndexOutOfRange or ComponentCountMismatch.
MapSpec parse_map(std::string_view text, int n);

MapFn to_map_fn(MapSpec spec, std::string name = {});

}  // namespace stringchase
