#include "ouroboros/expr.hpp"

#include "ouroboros/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace ouroboros::expr {

struct Expr::Node {
  Kind kind = Kind::Constant;
  exact::Rational value;
  double numeric = 0.0;
  int index = 0;
  unsigned exponent = 0;
  Expr a{std::shared_ptr<const Node>()};
  Expr b{std::shared_ptr<const Node>()};
  int dim = 0;
};

namespace {

const std::shared_ptr<const Expr::Node>& zero_node() {
  static const auto node = [] {
    auto n = std::make_shared<Expr::Node>();
    return std::shared_ptr<const Expr::Node>(std::move(n));
  }();
  return node;
}

}  // namespace

Expr::Expr() : node_(zero_node()) {}

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr Expr::constant(exact::Rational value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  value.canonicalize();
  n->numeric = exact::to_double(value);
  n->value = std::move(value);
  return Expr(std::move(n));
}

Expr Expr::constant(double value) { return constant(exact::from_double(value)); }

Expr Expr::variable(int index) {
  if (index < 1) throw InvalidArgument("variable index must be >= 1");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->index = index;
  n->dim = index;
  return Expr(std::move(n));
}

namespace {

template <typename NodeT>
std::shared_ptr<NodeT> binary(Kind kind, Expr lhs, Expr rhs) {
  auto n = std::make_shared<NodeT>();
  n->kind = kind;
  n->dim = std::max(lhs.dimension(), rhs.dimension());
  n->a = std::move(lhs);
  n->b = std::move(rhs);
  return n;
}

}  // namespace

Expr Expr::add(Expr lhs, Expr rhs) { return Expr(binary<Node>(Kind::Add, std::move(lhs), std::move(rhs))); }
Expr Expr::sub(Expr lhs, Expr rhs) { return Expr(binary<Node>(Kind::Sub, std::move(lhs), std::move(rhs))); }
Expr Expr::mul(Expr lhs, Expr rhs) { return Expr(binary<Node>(Kind::Mul, std::move(lhs), std::move(rhs))); }
Expr Expr::div(Expr lhs, Expr rhs) { return Expr(binary<Node>(Kind::Div, std::move(lhs), std::move(rhs))); }

Expr Expr::neg(Expr operand) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Neg;
  n->dim = operand.dimension();
  n->a = std::move(operand);
  return Expr(std::move(n));
}

Expr Expr::pow(Expr base, unsigned exponent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->dim = base.dimension();
  n->exponent = exponent;
  n->a = std::move(base);
  return Expr(std::move(n));
}

Kind Expr::kind() const { return node_->kind; }
const exact::Rational& Expr::value() const { return node_->value; }
double Expr::numeric_value() const { return node_->numeric; }
int Expr::index() const { return node_->index; }
unsigned Expr::exponent() const { return node_->exponent; }
const Expr& Expr::lhs() const { return node_->a; }
const Expr& Expr::rhs() const { return node_->b; }
int Expr::dimension() const { return node_->dim; }

bool Expr::is_constant(long v) const { return kind() == Kind::Constant && value() == v; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::Constant:
      return a.value() == b.value();
    case Kind::Variable:
      return a.index() == b.index();
    case Kind::Neg:
      return a.lhs() == b.lhs();
    case Kind::Pow:
      return a.exponent() == b.exponent() && a.lhs() == b.lhs();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

double integer_power(double base, unsigned exponent) {
  double result = 1.0;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

double eval(const Expr& e, std::span<const double> x) {
  switch (e.kind()) {
    case Kind::Constant:
      return e.numeric_value();
    case Kind::Variable:
      return x[static_cast<std::size_t>(e.index() - 1)];
    case Kind::Add:
      return eval(e.lhs(), x) + eval(e.rhs(), x);
    case Kind::Sub:
      return eval(e.lhs(), x) - eval(e.rhs(), x);
    case Kind::Mul:
      return eval(e.lhs(), x) * eval(e.rhs(), x);
    case Kind::Div: {
      const double num = eval(e.lhs(), x);
      const double den = eval(e.rhs(), x);
      if (den == 0.0) throw EvaluationError("division by zero");
      return num / den;
    }
    case Kind::Neg:
      return -eval(e.lhs(), x);
    case Kind::Pow:
      return integer_power(eval(e.lhs(), x), e.exponent());
  }
  throw std::logic_error("unknown expression kind");
}

}  // namespace

double evaluate(const Expr& e, std::span<const double> point) {
  if (point.size() < static_cast<std::size_t>(e.dimension())) {
    throw EvaluationError("point has " + std::to_string(point.size()) +
                          " coordinates, expression needs " + std::to_string(e.dimension()));
  }
  return eval(e, point);
}

// ---------------------------------------------------------------------------
// Simplification

namespace {

exact::Rational rational_power(const exact::Rational& base, unsigned exponent) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  exact::Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

Expr make_sum(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr::constant(a.value() + b.value());
  if (a.is_constant(0)) return b;
  if (b.is_constant(0)) return a;
  return Expr::add(a, b);
}

Expr make_difference(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr::constant(a.value() - b.value());
  if (b.is_constant(0)) return a;
  if (a.is_constant(0)) return make_negation(b);
  return Expr::sub(a, b);
}

Expr make_product(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr::constant(a.value() * b.value());
  if (a.is_constant(0) || b.is_constant(0)) return Expr();
  if (a.is_constant(1)) return b;
  if (b.is_constant(1)) return a;
  if (a.is_constant(-1)) return make_negation(b);
  if (b.is_constant(-1)) return make_negation(a);
  return Expr::mul(a, b);
}

Expr make_quotient(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant() && b.value() != 0) {
    return Expr::constant(a.value() / b.value());
  }
  if (b.is_constant(1)) return a;
  if (a.is_constant(0) && !b.is_constant(0)) return Expr();
  return Expr::div(a, b);
}

Expr make_negation(const Expr& a) {
  if (a.is_constant()) return Expr::constant(exact::Rational(-a.value()));
  if (a.kind() == Kind::Neg) return a.lhs();
  return Expr::neg(a);
}

Expr make_power(const Expr& base, unsigned exponent) {
  if (exponent == 0) return Expr::constant(exact::Rational(1));
  if (exponent == 1) return base;
  if (base.is_constant()) return Expr::constant(rational_power(base.value(), exponent));
  return Expr::pow(base, exponent);
}

Expr simplify(const Expr& e) {
  switch (e.kind()) {
    case Kind::Constant:
    case Kind::Variable:
      return e;
    case Kind::Add:
      return make_sum(simplify(e.lhs()), simplify(e.rhs()));
    case Kind::Sub:
      return make_difference(simplify(e.lhs()), simplify(e.rhs()));
    case Kind::Mul:
      return make_product(simplify(e.lhs()), simplify(e.rhs()));
    case Kind::Div:
      return make_quotient(simplify(e.lhs()), simplify(e.rhs()));
    case Kind::Neg:
      return make_negation(simplify(e.lhs()));
    case Kind::Pow:
      return make_power(simplify(e.lhs()), e.exponent());
  }
  throw std::logic_error("unknown expression kind");
}

Expr differentiate(const Expr& e, int k) {
  if (k < 1) throw InvalidArgument("derivative index must be >= 1");
  if (e.dimension() < k) return Expr();
  switch (e.kind()) {
    case Kind::Constant:
      return Expr();
    case Kind::Variable:
      return e.index() == k ? Expr::constant(exact::Rational(1)) : Expr();
    case Kind::Add:
      return make_sum(differentiate(e.lhs(), k), differentiate(e.rhs(), k));
    case Kind::Sub:
      return make_difference(differentiate(e.lhs(), k), differentiate(e.rhs(), k));
    case Kind::Mul: {
      const Expr a = simplify(e.lhs());
      const Expr b = simplify(e.rhs());
      return make_sum(make_product(differentiate(a, k), b), make_product(a, differentiate(b, k)));
    }
    case Kind::Div: {
      // (a/b)' = (a' b - a b') / b^2
      const Expr a = simplify(e.lhs());
      const Expr b = simplify(e.rhs());
      const Expr da = differentiate(a, k);
      const Expr db = differentiate(b, k);
      if (db.is_constant(0)) return make_quotient(da, b);
      return make_quotient(make_difference(make_product(da, b), make_product(a, db)), make_power(b, 2));
    }
    case Kind::Neg:
      return make_negation(differentiate(e.lhs(), k));
    case Kind::Pow: {
      const unsigned m = e.exponent();
      if (m == 0) return Expr();
      const Expr base = simplify(e.lhs());
      const Expr outer = make_product(Expr::constant(exact::Rational(m)), make_power(base, m - 1));
      return make_product(outer, differentiate(base, k));
    }
  }
  throw std::logic_error("unknown expression kind");
}

Expr linear_expr(std::span<const exact::Rational> coeffs) {
  if (coeffs.empty()) throw InvalidArgument("linear form needs at least one coefficient");
  Expr result;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Expr term = Expr::mul(Expr::constant(coeffs[i]), Expr::variable(static_cast<int>(i + 1)));
    result = i == 0 ? term : Expr::add(result, term);
  }
  return result;
}

Expr linear_expr(std::span<const double> coeffs) {
  std::vector<exact::Rational> exact_coeffs;
  exact_coeffs.reserve(coeffs.size());
  for (double c : coeffs) exact_coeffs.push_back(exact::from_double(c));
  return linear_expr(exact_coeffs);
}

// ---------------------------------------------------------------------------
// Polynomial canonical form

namespace {

void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

}  // namespace

void Polynomial::add_term(const Monomial& m, const exact::Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::constant(const exact::Rational& c) {
  Polynomial p;
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::variable(int index) {
  Polynomial p;
  Monomial m(static_cast<std::size_t>(index), 0);
  m.back() = 1;
  p.add_term(m, exact::Rational(1));
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial result = *this;
  for (const auto& [m, c] : other.terms_) result.add_term(m, c);
  return result;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial result = *this;
  for (const auto& [m, c] : other.terms_) result.add_term(m, -c);
  return result;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial result;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Monomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      trim(m);
      result.add_term(m, ca * cb);
    }
  }
  return result;
}

Polynomial Polynomial::scaled(const exact::Rational& c) const {
  Polynomial result;
  for (const auto& [m, v] : terms_) result.add_term(m, v * c);
  return result;
}

namespace {

std::optional<Polynomial> expand_impl(const Expr& e, std::size_t max_terms) {
  auto guard = [&](Polynomial p) -> std::optional<Polynomial> {
    if (p.size() > max_terms) return std::nullopt;
    return p;
  };
  switch (e.kind()) {
    case Kind::Constant:
      return Polynomial::constant(e.value());
    case Kind::Variable:
      return Polynomial::variable(e.index());
    case Kind::Neg: {
      auto a = expand_impl(e.lhs(), max_terms);
      if (!a) return std::nullopt;
      return a->scaled(exact::Rational(-1));
    }
    case Kind::Pow: {
      auto base = expand_impl(e.lhs(), max_terms);
      if (!base) return std::nullopt;
      Polynomial result = Polynomial::constant(exact::Rational(1));
      for (unsigned i = 0; i < e.exponent(); ++i) {
        auto next = guard(result * *base);
        if (!next) return std::nullopt;
        result = std::move(*next);
      }
      return result;
    }
    case Kind::Div: {
      auto a = expand_impl(e.lhs(), max_terms);
      auto b = expand_impl(e.rhs(), max_terms);
      if (!a || !b) return std::nullopt;
      if (b->is_zero()) return std::nullopt;
      if (b->size() != 1 || !b->terms().begin()->first.empty()) return std::nullopt;
      return a->scaled(1 / b->terms().begin()->second);
    }
    default: {
      auto a = expand_impl(e.lhs(), max_terms);
      auto b = expand_impl(e.rhs(), max_terms);
      if (!a || !b) return std::nullopt;
      if (e.kind() == Kind::Add) return guard(*a + *b);
      if (e.kind() == Kind::Sub) return guard(*a - *b);
      return guard(*a * *b);
    }
  }
}

}  // namespace

std::optional<Polynomial> expand(const Expr& e, std::size_t max_terms) {
  return expand_impl(e, max_terms);
}

}  // namespace ouroboros::expr
