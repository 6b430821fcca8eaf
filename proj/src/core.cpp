#include "ouroboros/core.hpp"

#include "ouroboros/errors.hpp"
#include "ouroboros/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace ouroboros::core {

LinearForm::LinearForm(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("linear form needs at least one coefficient");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!std::isfinite(coeffs_[i])) {
      throw InvalidArgument("coefficient c" + std::to_string(i + 1) + " is not finite");
    }
  }
}

double LinearForm::coefficient_sum() const { return compensated_sum(coeffs_); }

double LinearForm::operator()(std::span<const double> x) const {
  if (x.size() < coeffs_.size()) throw EvaluationError("point shorter than linear form");
  CompensatedSum s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) s.add(coeffs_[i] * x[i]);
  return s.value();
}

expr::Expr LinearForm::to_expr() const { return expr::linear_expr(std::span<const double>(coeffs_)); }

void SampleDomain::validate() const {
  if (n < 1) throw InvalidArgument("sample domain dimension must be >= 1");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidArgument("sample radius must be positive");
  if (count < 1) throw InvalidArgument("sample count must be >= 1");
}

std::vector<double> SampleDomain::sample(int i) const {
  const CounterRng rng(seed);
  std::vector<double> x(static_cast<std::size_t>(n));
  const auto base = static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(n);
  for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] = rng.uniform(base + static_cast<std::uint64_t>(j), -radius, radius);
  return x;
}

std::vector<std::vector<double>> SampleDomain::samples() const {
  validate();
  std::vector<std::vector<double>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(sample(i));
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::HoldsExact:
      return "holds_exact";
    case Verdict::HoldsSampled:
      return "holds_sampled";
    case Verdict::Fails:
      return "fails";
    case Verdict::Error:
      return "error";
  }
  return "error";
}

OuroborosReport check_linear_exact(const LinearForm& f, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  OuroborosReport report;
  report.tolerance = tol;
  const auto& c = f.coeffs();

  const auto largest = std::max_element(c.begin(), c.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
  if (std::abs(*largest) <= tol) {
    report.verdict = Verdict::HoldsExact;
    report.message = "zero function";
    return report;
  }

  const double defect = std::abs(f.coefficient_sum() - 1.0);
  report.max_deviation = defect;
  if (defect <= tol) {
    report.verdict = Verdict::HoldsExact;
    report.message = "coefficients sum to 1";
    return report;
  }

  // f(f,...,f) = (sum c) f(x), so at a point with f(x) = 1 the defect is |sum c - 1|.
  report.verdict = Verdict::Fails;
  std::vector<double> witness(c.size(), 0.0);
  const auto j = static_cast<std::size_t>(largest - c.begin());
  witness[j] = 1.0 / c[j];
  const double y = f(witness);
  const std::vector<double> diagonal(c.size(), y);
  report.witness_deviation = std::abs(f(diagonal) - y);
  report.witness = std::move(witness);
  report.message = "coefficients do not sum to 1";
  return report;
}

std::pair<double, double> diagonal_self_apply(const expr::Expr& f, std::span<const double> x) {
  const double y = expr::evaluate(f, x);
  const std::vector<double> diagonal(x.size(), y);
  return {y, expr::evaluate(f, diagonal)};
}

OuroborosReport check_sampled(const expr::Expr& f, const SampleDomain& dom, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  dom.validate();
  if (f.dimension() > dom.n) {
    throw InvalidArgument("expression uses x" + std::to_string(f.dimension()) + " but domain dimension is " +
                          std::to_string(dom.n));
  }

  OuroborosReport report;
  report.tolerance = tol;
  bool contained = true;
  bool violated = false;
  double worst_ratio = -1.0;

  for (int i = 0; i < dom.count; ++i) {
    const auto x = dom.sample(i);
    double y = 0.0;
    double fy = 0.0;
    try {
      std::tie(y, fy) = diagonal_self_apply(f, x);
    } catch (const EvaluationError& e) {
      report.verdict = Verdict::Error;
      report.message = std::string("evaluation failed at sample ") + std::to_string(i) + ": " + e.what();
      report.witness = x;
      report.samples_used = i + 1;
      return report;
    }
    const double d = std::abs(fy - y);
    const double ratio = d / (1.0 + std::abs(y));
    report.samples_used = i + 1;
    if (!std::isfinite(y) || std::abs(y) > dom.radius) contained = false;
    if (d > report.max_deviation || std::isnan(d)) report.max_deviation = d;
    if (!(d <= tol * (1.0 + std::abs(y)))) violated = true;
    // Strict comparison keeps the lowest index on ties.
    if (ratio > worst_ratio || (std::isnan(ratio) && !std::isnan(worst_ratio))) {
      worst_ratio = ratio;
      report.witness = x;
      report.witness_deviation = d;
    }
  }

  report.range_contained = contained;
  if (violated) {
    report.verdict = Verdict::Fails;
    report.message = "defect exceeds tol*(1+|f(x)|) at the witness";
  } else {
    report.verdict = Verdict::HoldsSampled;
    report.witness.reset();
    report.witness_deviation = 0.0;
    report.message = "defect within tol*(1+|f(x)|) at every sample";
  }
  return report;
}

}  // namespace ouroboros::core
