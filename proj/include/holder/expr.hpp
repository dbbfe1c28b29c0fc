#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "holder/interval.hpp"

namespace holder {

enum class Op : unsigned char {
  constant,
  variable,
  neg,
  abs,
  sin,
  cos,
  exp,
  ln,
  sqrt,
  add,
  sub,
  mul,
  div,
  pow,
};

bool is_unary(Op op) noexcept;
bool is_binary(Op op) noexcept;

/// Immutable expression tree over the single variable `x`.
///
/// Copies share structure, so an Expr is cheap to pass by value and safe to
/// evaluate from any number of threads. Evaluation never returns NaN or an
/// infinity; those outcomes are reported as DomainError carrying the
/// offending x.
class Expr {
 public:
  static Expr constant(double value);
  static Expr variable();
  static Expr unary(Op op, Expr operand);
  static Expr binary(Op op, Expr lhs, Expr rhs);

  Op op() const noexcept;
  /// Literal value; only meaningful when op() == Op::constant.
  double value() const noexcept;
  /// Operand of a unary node, or the left operand of a binary node.
  const Expr& lhs() const;
  const Expr& rhs() const;

  double evaluate(double x) const;
  double operator()(double x) const { return evaluate(x); }

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

Expr parse(std::string_view text);

/// Fully parenthesised text that parse() maps back to a tree with identical
/// evaluation, bit for bit.
std::string to_string(const Expr& e);

/// Operands of every abs() node; their sign changes are derivative kinks.
std::vector<Expr> abs_arguments(const Expr& e);

/// Sampling probe: e(x_j) >= -1e-12 at `samples` uniform points including
/// both endpoints. Not a proof of nonnegativity.
bool check_nonnegative(const Expr& e, const Interval& interval, int samples);

Expr operator+(Expr lhs, Expr rhs);
Expr operator-(Expr lhs, Expr rhs);
Expr operator*(Expr lhs, Expr rhs);
Expr operator/(Expr lhs, Expr rhs);
Expr operator-(Expr operand);
Expr pow(Expr base, Expr exponent);
Expr apply(Op op, Expr operand);

}  // namespace holder
