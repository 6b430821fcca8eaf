#pragma once

// Multivariate real expressions over positional variables x1, x2, ...
//
// Grammar (whitespace-insensitive):
//   expr     := term (("+"|"-") term)*
//   term     := factor (("*"|"/") factor)*
//   factor   := ("-")* atom ("^" integer)?
//   atom     := number | variable | "(" expr ")"
//   variable := "x" positive-integer
//
// "^" binds tighter than unary minus, so "-x1^2" is -(x1^2). A unary minus
// written directly in front of a bare number literal (no exponent) yields a
// negative constant, so "-5" is the constant -5 while "-(5)" negates 5.
//
// Constants are exact rationals. Evaluation is in double precision.

#include "ouroboros/exact.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ouroboros::expr {

enum class Kind { Constant, Variable, Add, Sub, Mul, Div, Neg, Pow };

/// Immutable expression tree. Copies share structure.
class Expr {
 public:
  /// The constant 0.
  Expr();

  static Expr constant(exact::Rational value);
  /// Enters via the shortest decimal that round-trips `value`.
  static Expr constant(double value);
  static Expr variable(int index);
  static Expr add(Expr lhs, Expr rhs);
  static Expr sub(Expr lhs, Expr rhs);
  static Expr mul(Expr lhs, Expr rhs);
  static Expr div(Expr lhs, Expr rhs);
  static Expr neg(Expr operand);
  static Expr pow(Expr base, unsigned exponent);

  Kind kind() const;
  /// Constant nodes only.
  const exact::Rational& value() const;
  /// Cached correctly rounded double of value(); constant nodes only.
  double numeric_value() const;
  /// Variable nodes only; 1-based.
  int index() const;
  /// Pow nodes only.
  unsigned exponent() const;
  /// Left operand of binary nodes, the operand of Neg, the base of Pow.
  const Expr& lhs() const;
  /// Right operand of binary nodes.
  const Expr& rhs() const;

  /// Largest variable index used; 0 for constant expressions.
  int dimension() const;

  bool is_constant() const { return kind() == Kind::Constant; }
  bool is_constant(long v) const;

  friend bool operator==(const Expr& a, const Expr& b);

  struct Node;

 private:
  explicit Expr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

struct ParseResult {
  Expr expr;
  int dimension = 0;  // max(variable index, n_hint)
};

/// Throws ParseError with the byte offset of the problem.
Expr parse(std::string_view text);
ParseResult parse(std::string_view text, int n_hint);

/// Round-trips through parse() to a structurally equal tree when every
/// constant has a terminating decimal expansion. Other rationals print as
/// "(p/q)".
std::string print(const Expr& e);

/// Throws EvaluationError on division by zero or a point shorter than the
/// expression's dimension.
double evaluate(const Expr& e, std::span<const double> point);

/// Conservative simplification: constant folding and elimination of
/// additive zeros and multiplicative ones. Never reorders terms.
Expr simplify(const Expr& e);

/// Exact partial derivative with respect to x_k, simplified.
Expr differentiate(const Expr& e, int k);

// Simplifying constructors used by differentiate() and residual builders.
Expr make_sum(const Expr& a, const Expr& b);
Expr make_difference(const Expr& a, const Expr& b);
Expr make_product(const Expr& a, const Expr& b);
Expr make_quotient(const Expr& a, const Expr& b);
Expr make_negation(const Expr& a);
Expr make_power(const Expr& base, unsigned exponent);

/// Builds c1*x1 + ... + cn*xn with exact coefficients (zero terms kept so the
/// printed form shows every coordinate).
Expr linear_expr(std::span<const exact::Rational> coeffs);
Expr linear_expr(std::span<const double> coeffs);

/// Exponent vector with trailing zeros trimmed; empty for the unit monomial.
using Monomial = std::vector<unsigned>;

/// Sparse polynomial with exact coefficients, used as a canonical form.
class Polynomial {
 public:
  const std::map<Monomial, exact::Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  static Polynomial constant(const exact::Rational& c);
  static Polynomial variable(int index);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const exact::Rational& c) const;

 private:
  void add_term(const Monomial& m, const exact::Rational& c);
  std::map<Monomial, exact::Rational> terms_;
};

/// Expands `e` into canonical polynomial form. Returns nullopt when `e`
/// divides by a non-constant or the expansion would exceed `max_terms`.
std::optional<Polynomial> expand(const Expr& e, std::size_t max_terms = 20000);

}  // namespace ouroboros::expr
