#include "ouroboros/pde.hpp"

#include "ouroboros/errors.hpp"
#include "ouroboros/families.hpp"
#include "ouroboros/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace ouroboros::pde {

void PdeSpec::validate() const {
  if (n < 1) throw InvalidArgument("dimension n must be >= 1");
  if (kind == Equation::EqI && (beta < 1 || beta > n)) {
    throw InvalidArgument("equation I requires 1 <= beta <= n (n=" + std::to_string(n) +
                          ", beta=" + std::to_string(beta) + ")");
  }
}

std::string PdeSpec::name() const { return kind == Equation::EqI ? "I" : "II"; }

std::string to_string(SymbolicStatus s) {
  switch (s) {
    case SymbolicStatus::Zero:
      return "zero";
    case SymbolicStatus::Nonzero:
      return "nonzero";
    case SymbolicStatus::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

namespace {

// Signed weights w_k so that residual = sum_k w_k du/dx_k.
std::vector<long> derivative_weights(const PdeSpec& spec) {
  std::vector<long> w(static_cast<std::size_t>(spec.n), 0);
  if (spec.kind == Equation::EqI) {
    for (int k = 1; k <= spec.beta; ++k) w[static_cast<std::size_t>(k - 1)] += 1;
    w.back() -= spec.beta;
  } else {
    for (int k = 1; k <= spec.n; ++k) w[static_cast<std::size_t>(k - 1)] = (k % 2 == 0) ? 1 : -1;
  }
  return w;
}

void check_dimension(const expr::Expr& u, const PdeSpec& spec) {
  spec.validate();
  if (u.dimension() > spec.n) {
    throw InvalidArgument("u uses x" + std::to_string(u.dimension()) + " but n = " + std::to_string(spec.n));
  }
}

}  // namespace

expr::Expr residual_expr(const expr::Expr& u, const PdeSpec& spec) {
  check_dimension(u, spec);
  using expr::Expr;
  if (spec.kind == Equation::EqI) {
    Expr lhs;
    for (int k = 1; k <= spec.beta; ++k) lhs = expr::make_sum(lhs, expr::differentiate(u, k));
    const Expr rhs = expr::make_product(Expr::constant(exact::Rational(spec.beta)), expr::differentiate(u, spec.n));
    return expr::make_difference(lhs, rhs);
  }
  Expr total;
  for (int k = 1; k <= spec.n; ++k) {
    const Expr d = expr::differentiate(u, k);
    total = (k % 2 == 0) ? expr::make_sum(total, d) : expr::make_difference(total, d);
  }
  return total;
}

SymbolicStatus symbolic_status(const expr::Expr& residual) {
  if (residual.is_constant()) return residual.value() == 0 ? SymbolicStatus::Zero : SymbolicStatus::Nonzero;
  const auto poly = expr::expand(residual);
  if (!poly) return SymbolicStatus::Inconclusive;
  return poly->is_zero() ? SymbolicStatus::Zero : SymbolicStatus::Nonzero;
}

double finite_difference(const expr::Expr& u, int k, std::span<const double> x, double h) {
  if (!(h > 0.0)) throw InvalidArgument("finite difference step must be positive");
  if (k < 1) throw InvalidArgument("derivative index must be >= 1");
  std::vector<double> point(x.begin(), x.end());
  if (point.size() < static_cast<std::size_t>(k)) point.resize(static_cast<std::size_t>(k), 0.0);
  const auto i = static_cast<std::size_t>(k - 1);
  const double centre = point[i];
  point[i] = centre + h;
  const double forward = expr::evaluate(u, point);
  point[i] = centre - h;
  const double backward = expr::evaluate(u, point);
  return (forward - backward) / (2.0 * h);
}

ResidualReport check_residual(const expr::Expr& u, const PdeSpec& spec, const core::SampleDomain& dom, double h) {
  check_dimension(u, spec);
  dom.validate();
  if (dom.n != spec.n) {
    throw InvalidArgument("sample domain dimension " + std::to_string(dom.n) + " differs from n = " +
                          std::to_string(spec.n));
  }

  ResidualReport report;
  report.spec = spec;
  report.step = h;
  const expr::Expr residual = residual_expr(u, spec);
  report.residual = expr::print(residual);
  report.status = symbolic_status(residual);
  report.symbolic_zero = report.status == SymbolicStatus::Zero;
  if (report.status == SymbolicStatus::Inconclusive) {
    report.note = "symbolic zero test inconclusive (non-polynomial residual); verdict rests on samples";
  }

  const auto weights = derivative_weights(spec);
  std::vector<expr::Expr> partials;
  for (int k = 1; k <= spec.n; ++k) partials.push_back(expr::differentiate(u, k));

  for (int i = 0; i < dom.count; ++i) {
    const auto x = dom.sample(i);
    CompensatedSum symbolic;
    CompensatedSum numeric;
    for (int k = 1; k <= spec.n; ++k) {
      const long w = weights[static_cast<std::size_t>(k - 1)];
      if (w == 0) continue;
      symbolic.add(static_cast<double>(w) * expr::evaluate(partials[static_cast<std::size_t>(k - 1)], x));
      numeric.add(static_cast<double>(w) * finite_difference(u, k, x, h));
    }
    report.max_abs_residual = std::max(report.max_abs_residual, std::abs(symbolic.value()));
    report.max_abs_residual_fd = std::max(report.max_abs_residual_fd, std::abs(numeric.value()));
    report.max_oracle_gap = std::max(report.max_oracle_gap, std::abs(symbolic.value() - numeric.value()));
    report.samples_used = i + 1;
  }
  report.oracle_agreement = report.max_oracle_gap <= kOracleAgreementTolerance;
  return report;
}

Prop3Check check_prop3(std::span<const double> coeffs, int n) {
  if (n < 2 || n % 2 != 0) throw InvalidArgument("alternating-sum condition requires even n (got " + std::to_string(n) + ")");
  if (coeffs.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgument("expected " + std::to_string(n) + " coefficients, got " + std::to_string(coeffs.size()));
  }
  CompensatedSum odd;
  CompensatedSum even;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!std::isfinite(coeffs[i])) throw InvalidArgument("coefficients must be finite");
    ((i + 1) % 2 == 1 ? odd : even).add(coeffs[i]);
  }
  Prop3Check check;
  check.odd_sum = odd.value();
  check.even_sum = even.value();
  check.holds = std::abs(check.odd_sum - check.even_sum) <= 1e-12;
  return check;
}

Prop4Report verify_prop4(int n, const core::SampleDomain& dom) {
  if (n < 2 || n % 2 != 0) throw InvalidArgument("the system requires even n >= 2 (got " + std::to_string(n) + ")");
  core::SampleDomain domain = dom;
  domain.n = n;

  const core::LinearForm mean = families::arithmetic_mean(n);
  const expr::Expr u = mean.to_expr();

  Prop4Report report;
  report.n = n;
  report.eq1_report = check_residual(u, PdeSpec::eq1(n, n), domain);
  report.eq2_report = check_residual(u, PdeSpec::eq2(n), domain);
  report.eq1 = report.eq1_report.symbolic_zero;
  report.eq2 = report.eq2_report.symbolic_zero;
  const std::vector<double> origin(static_cast<std::size_t>(n), 0.0);
  report.origin_zero = expr::evaluate(u, origin) == 0.0;
  report.ouroboros_report = core::check_linear_exact(mean);
  report.ouroboros = report.ouroboros_report.holds();
  return report;
}

}  // namespace ouroboros::pde
