#pragma once

// Residuals of the two constant-coefficient transport equations
//   (I)  sum_{k=1..beta} du/dx_k = beta * du/dx_n,   1 <= beta <= n
//   (II) sum_{k=1..n} (-1)^k du/dx_k = 0
// Residuals are LHS - RHS.

#include "ouroboros/core.hpp"
#include "ouroboros/expr.hpp"

#include <span>
#include <string>
#include <vector>

namespace ouroboros::pde {

enum class Equation { EqI, EqII };

struct PdeSpec {
  Equation kind = Equation::EqI;
  int n = 1;
  int beta = 1;  // EqI only

  static PdeSpec eq1(int n, int beta) { return {Equation::EqI, n, beta}; }
  static PdeSpec eq2(int n) { return {Equation::EqII, n, 0}; }

  /// Throws InvalidArgument for n < 1 or beta outside 1..n on EqI.
  void validate() const;
  std::string name() const;
};

inline constexpr const char* kResidualConvention = "residual = LHS - RHS";
inline constexpr double kDefaultStep = 1e-5;
inline constexpr double kOracleAgreementTolerance = 1e-6;

enum class SymbolicStatus { Zero, Nonzero, Inconclusive };
std::string to_string(SymbolicStatus s);

/// Residual as an expression built from exact symbolic derivatives.
expr::Expr residual_expr(const expr::Expr& u, const PdeSpec& spec);

/// Exact zero test: constant folding first, polynomial expansion second.
SymbolicStatus symbolic_status(const expr::Expr& residual);

struct ResidualReport {
  PdeSpec spec;
  std::string residual;  // printed residual expression
  SymbolicStatus status = SymbolicStatus::Inconclusive;
  bool symbolic_zero = false;
  /// Residual assembled from symbolically differentiated partials, max over samples.
  double max_abs_residual = 0.0;
  /// Same residual from central differences on u itself.
  double max_abs_residual_fd = 0.0;
  /// max |symbolic - finite difference| over samples.
  double max_oracle_gap = 0.0;
  bool oracle_agreement = false;
  int samples_used = 0;
  double step = kDefaultStep;
  std::string note;
};

ResidualReport check_residual(const expr::Expr& u, const PdeSpec& spec, const core::SampleDomain& dom,
                              double h = kDefaultStep);

/// (u(x + h e_k) - u(x - h e_k)) / (2h).
double finite_difference(const expr::Expr& u, int k, std::span<const double> x, double h = kDefaultStep);

struct Prop3Check {
  bool holds = false;
  double odd_sum = 0.0;   // c1 + c3 + ...
  double even_sum = 0.0;  // c2 + c4 + ...
};

/// Odd-index and even-index coefficient sums agree within 1e-12; n even.
Prop3Check check_prop3(std::span<const double> coeffs, int n);

struct Prop4Report {
  int n = 0;
  bool eq1 = false;
  bool eq2 = false;
  bool origin_zero = false;
  bool ouroboros = false;
  ResidualReport eq1_report;
  ResidualReport eq2_report;
  core::OuroborosReport ouroboros_report;

  bool all_hold() const { return eq1 && eq2 && origin_zero && ouroboros; }
};

/// The arithmetic mean on even n against (I) with beta = n, (II),
/// u(0,...,0) = 0 and the Ouroboros property.
Prop4Report verify_prop4(int n, const core::SampleDomain& dom);

}  // namespace ouroboros::pde
