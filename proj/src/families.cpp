#include "ouroboros/families.hpp"

#include "ouroboros/errors.hpp"
#include "ouroboros/exact.hpp"
#include "ouroboros/numeric.hpp"

#include <cmath>

namespace ouroboros::families {

core::LinearForm weighted_average(std::vector<double> coeffs) {
  core::LinearForm form(std::move(coeffs));
  const double sum = form.coefficient_sum();
  if (std::abs(sum - 1.0) > kMembershipTolerance) {
    throw InvalidArgument("coefficients sum to " + exact::shortest(sum) + ", not 1");
  }
  return form;
}

core::LinearForm arithmetic_mean(int n) {
  if (n < 1) throw InvalidArgument("arithmetic mean needs n >= 1");
  return core::LinearForm(std::vector<double>(static_cast<std::size_t>(n), 1.0 / n));
}

expr::Expr constant_fn(double c, int n) {
  if (n < 1) throw InvalidArgument("constant function needs n >= 1");
  if (!std::isfinite(c)) throw InvalidArgument("constant must be finite");
  return expr::Expr::constant(c);
}

Prop2Solution::Prop2Solution(std::vector<double> coeffs, int beta) : coeffs_(std::move(coeffs)), beta_(beta) {
  if (coeffs_.empty()) throw InvalidArgument("need at least one coefficient (n >= 2)");
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw InvalidArgument("coefficients must be finite");
  }
  if (beta_ < 1 || beta_ > n() - 1) {
    throw InvalidArgument("beta must satisfy 1 <= beta <= n-1 (n=" + std::to_string(n()) +
                          ", beta=" + std::to_string(beta_) + ")");
  }
}

double Prop2Solution::mu_beta() const {
  return compensated_sum(std::span<const double>(coeffs_).first(static_cast<std::size_t>(beta_))) / beta_;
}

expr::Expr Prop2Solution::expr() const {
  std::vector<exact::Rational> c;
  c.reserve(coeffs_.size() + 1);
  for (double v : coeffs_) c.push_back(exact::from_double(v));
  exact::Rational mu = exact::sum(std::span<const exact::Rational>(c).first(static_cast<std::size_t>(beta_)));
  mu /= beta_;
  mu.canonicalize();
  c.push_back(mu);
  return expr::linear_expr(c);
}

core::LinearForm Prop2Solution::linear_form() const {
  std::vector<double> c = coeffs_;
  c.push_back(mu_beta());
  return core::LinearForm(std::move(c));
}

Prop2Solution prop2_solution(std::vector<double> coeffs, int beta) { return Prop2Solution(std::move(coeffs), beta); }

core::LinearForm pde1_unit_sum_family(std::vector<double> coeffs) {
  core::LinearForm form(std::move(coeffs));
  const double n = static_cast<double>(form.size());
  const double last = form.coeffs().back();
  if (std::abs(last - 1.0 / n) > kMembershipTolerance) {
    throw InvalidArgument("last coefficient is " + exact::shortest(last) + ", family requires 1/n = " +
                          exact::shortest(1.0 / n));
  }
  const double sum = form.coefficient_sum();
  if (std::abs(sum - 1.0) > kMembershipTolerance) {
    throw InvalidArgument("coefficients sum to " + exact::shortest(sum) + ", not 1");
  }
  return form;
}

}  // namespace ouroboros::families
