#pragma once

// Constructors for the linear and constant families known to be Ouroboros or
// to solve the transport equation sum_{k<=beta} du/dx_k = beta du/dx_n.
// Every constructor validates its membership conditions and throws
// InvalidArgument instead of normalizing.

#include "ouroboros/core.hpp"
#include "ouroboros/expr.hpp"

#include <vector>

namespace ouroboros::families {

inline constexpr double kMembershipTolerance = 1e-12;

/// sum c_i x_i with sum c_i = 1.
core::LinearForm weighted_average(std::vector<double> coeffs);

/// (x1 + ... + xn) / n.
core::LinearForm arithmetic_mean(int n);

/// f(x1..xn) = c.
expr::Expr constant_fn(double c, int n);

/// u = mu_beta * x_n + sum_{k<n} c_k x_k, mu_beta = (1/beta) sum_{k<=beta} c_k.
class Prop2Solution {
 public:
  /// `coeffs` holds c_1..c_{n-1}; n = coeffs.size() + 1; 1 <= beta <= n-1.
  Prop2Solution(std::vector<double> coeffs, int beta);

  int n() const { return static_cast<int>(coeffs_.size()) + 1; }
  int beta() const { return beta_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  /// Recomputed from coeffs on every call.
  double mu_beta() const;
  /// Exact expression; mu_beta enters as the exact rational average.
  expr::Expr expr() const;
  /// Double-precision coefficients (c_1, ..., c_{n-1}, mu_beta).
  core::LinearForm linear_form() const;

 private:
  std::vector<double> coeffs_;
  int beta_;
};

Prop2Solution prop2_solution(std::vector<double> coeffs, int beta);

/// Member of the unit-sum family: c_n = 1/n and sum c_k = 1.
core::LinearForm pde1_unit_sum_family(std::vector<double> coeffs);

}  // namespace ouroboros::families
